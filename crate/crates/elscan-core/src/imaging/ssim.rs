use serde::{Deserialize, Serialize};

use super::image_types::GrayImage;
use crate::{Error, Result};

/// Parameters of the structural similarity index.
///
/// The luminance/contrast/structure terms are computed over a sliding
/// `window x window` patch with uniform weights and combined as
/// `l^alpha * c^beta * s^gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SsimParams {
    /// Side of the square sliding window (odd, >= 3).
    pub window: usize,
    /// Luminance stabilization constant.
    pub k1: f64,
    /// Contrast/structure stabilization constant.
    pub k2: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Intensity dynamic range; 1.0 for canonical `[0, 1]` images.
    pub dynamic_range: f64,
}

impl Default for SsimParams {
    fn default() -> Self {
        Self {
            window: 5,
            k1: 0.01,
            k2: 0.03,
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            dynamic_range: 1.0,
        }
    }
}

impl SsimParams {
    pub fn validate(&self) -> Result<()> {
        if self.window < 3 || self.window % 2 == 0 {
            return Err(Error::InvalidParam {
                what: "ssim window",
                why: format!("{} is not an odd integer >= 3", self.window),
            });
        }
        if !(self.k1 > 0.0 && self.k2 > 0.0) {
            return Err(Error::InvalidParam {
                what: "ssim stabilizers",
                why: format!("k1={} k2={} must be positive", self.k1, self.k2),
            });
        }
        if self.alpha < 0.0 || self.beta < 0.0 || self.gamma < 0.0 {
            return Err(Error::InvalidParam {
                what: "ssim exponents",
                why: "alpha, beta, gamma must be non-negative".into(),
            });
        }
        if !(self.dynamic_range > 0.0) {
            return Err(Error::InvalidParam {
                what: "ssim dynamic range",
                why: format!("{} must be positive", self.dynamic_range),
            });
        }
        Ok(())
    }

    pub fn c1(&self) -> f64 {
        (self.k1 * self.dynamic_range).powi(2)
    }

    pub fn c2(&self) -> f64 {
        (self.k2 * self.dynamic_range).powi(2)
    }

    fn unit_exponents(&self) -> bool {
        self.alpha == 1.0 && self.beta == 1.0 && self.gamma == 1.0
    }
}

/// Per-pixel SSIM of the window centered on each pixel; same shape as the
/// inputs (reflect padding supplies the border windows).
#[derive(Debug, Clone)]
pub struct SsimMap {
    height: usize,
    width: usize,
    values: Vec<f64>,
}

impl SsimMap {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> f64 {
        self.values[y * self.width + x]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Mean over all entries; this is the scalar SSIM by definition.
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Normalized dissimilarity `u = (1 - D) / 2`, mapped into a `[0, 1]`
    /// grayscale image suitable for histogram thresholding.
    pub fn dissimilarity(&self) -> GrayImage {
        GrayImage::from_fn(self.height, self.width, |y, x| {
            (0.5 * (1.0 - self.get(y, x))) as f32
        })
    }
}

/// Reflects index `i` into `[0, n)` without repeating the border sample
/// (`dcb|abcd|cba`).
#[inline]
pub(crate) fn reflect101(i: isize, n: usize) -> usize {
    let n = n as isize;
    let mut i = i;
    // Window radii are always < n here, so one fold suffices.
    if i < 0 {
        i = -i;
    }
    if i >= n {
        i = 2 * n - 2 - i;
    }
    i as usize
}

/// Pads a `height x width` f64 buffer by `r` on every side with
/// reflect-101 boundary handling.
pub(crate) fn pad_reflect101(
    src: &[f64],
    height: usize,
    width: usize,
    r: usize,
) -> Vec<f64> {
    let ph = height + 2 * r;
    let pw = width + 2 * r;
    let mut out = vec![0.0; ph * pw];
    for py in 0..ph {
        let sy = reflect101(py as isize - r as isize, height);
        for px in 0..pw {
            let sx = reflect101(px as isize - r as isize, width);
            out[py * pw + px] = src[sy * width + sx];
        }
    }
    out
}

/// Summed-area table with a zero top row and left column: entry
/// `(y+1, x+1)` holds the sum of `src[..=y, ..=x]`.
pub(crate) fn integral(src: &[f64], height: usize, width: usize) -> Vec<f64> {
    let iw = width + 1;
    let mut out = vec![0.0; (height + 1) * iw];
    for y in 0..height {
        let mut run = 0.0;
        for x in 0..width {
            run += src[y * width + x];
            out[(y + 1) * iw + x + 1] = out[y * iw + x + 1] + run;
        }
    }
    out
}

#[inline]
pub(crate) fn window_sum(int: &[f64], iw: usize, y0: usize, x0: usize, k: usize) -> f64 {
    int[(y0 + k) * iw + x0 + k] - int[y0 * iw + x0 + k] - int[(y0 + k) * iw + x0]
        + int[y0 * iw + x0]
}

fn check_inputs(x: &GrayImage, y: &GrayImage, p: &SsimParams) -> Result<()> {
    p.validate()?;
    x.same_shape(y)?;
    let (h, w) = x.shape();
    if h < p.window || w < p.window {
        return Err(Error::ImageSmallerThanWindow {
            height: h,
            width: w,
            window: p.window,
        });
    }
    Ok(())
}

/// Computes the full SSIM map of `x` against `y`.
pub fn ssim_map(x: &GrayImage, y: &GrayImage, p: &SsimParams) -> Result<SsimMap> {
    check_inputs(x, y, p)?;
    let (h, w) = x.shape();
    let k = p.window;
    let r = k / 2;
    let np = (k * k) as f64;

    let xf: Vec<f64> = x.pixels().iter().map(|&v| v as f64).collect();
    let yf: Vec<f64> = y.pixels().iter().map(|&v| v as f64).collect();
    let xp = pad_reflect101(&xf, h, w, r);
    let yp = pad_reflect101(&yf, h, w, r);
    let (ph, pw) = (h + 2 * r, w + 2 * r);

    let xy: Vec<f64> = xp.iter().zip(&yp).map(|(a, b)| a * b).collect();
    let xx: Vec<f64> = xp.iter().map(|a| a * a).collect();
    let yy: Vec<f64> = yp.iter().map(|a| a * a).collect();

    let ix = integral(&xp, ph, pw);
    let iy = integral(&yp, ph, pw);
    let ixx = integral(&xx, ph, pw);
    let iyy = integral(&yy, ph, pw);
    let ixy = integral(&xy, ph, pw);
    let iw = pw + 1;

    let c1 = p.c1();
    let c2 = p.c2();
    let c3 = c2 / 2.0;
    let unit = p.unit_exponents();

    let mut values = Vec::with_capacity(h * w);
    for cy in 0..h {
        for cx in 0..w {
            let mu_x = window_sum(&ix, iw, cy, cx, k) / np;
            let mu_y = window_sum(&iy, iw, cy, cx, k) / np;
            let var_x = (window_sum(&ixx, iw, cy, cx, k) / np - mu_x * mu_x).max(0.0);
            let var_y = (window_sum(&iyy, iw, cy, cx, k) / np - mu_y * mu_y).max(0.0);
            let cov = window_sum(&ixy, iw, cy, cx, k) / np - mu_x * mu_y;

            let v = if unit {
                // l*c*s collapses to the classic two-factor form.
                let a1 = 2.0 * (mu_x * mu_y) + c1;
                let a2 = 2.0 * cov + c2;
                let b1 = mu_x * mu_x + mu_y * mu_y + c1;
                let b2 = var_x + var_y + c2;
                (a1 * a2) / (b1 * b2)
            } else {
                let sd_x = var_x.sqrt();
                let sd_y = var_y.sqrt();
                let l = (2.0 * (mu_x * mu_y) + c1) / (mu_x * mu_x + mu_y * mu_y + c1);
                let c = (2.0 * (sd_x * sd_y) + c2) / (var_x + var_y + c2);
                let s = (cov + c3) / (sd_x * sd_y + c3);
                l.powf(p.alpha) * c.powf(p.beta) * s.abs().powf(p.gamma) * s.signum()
            };
            values.push(v.clamp(-1.0, 1.0));
        }
    }

    Ok(SsimMap {
        height: h,
        width: w,
        values,
    })
}

/// Mean structural similarity of `x` against `y`, in `[-1, 1]`.
pub fn ssim_scalar(x: &GrayImage, y: &GrayImage, p: &SsimParams) -> Result<f64> {
    Ok(ssim_map(x, y, p)?.mean())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_image(h: usize, w: usize, seed: u64) -> GrayImage {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        GrayImage::from_fn(h, w, |_, _| rng.random::<f32>())
    }

    /// Independent per-window evaluation with explicit loops and the
    /// deviation-based variance formula; f64 throughout.
    fn naive_ssim_map(x: &GrayImage, y: &GrayImage, p: &SsimParams) -> Vec<f64> {
        let (h, w) = x.shape();
        let k = p.window as isize;
        let r = k / 2;
        let c1 = p.c1();
        let c2 = p.c2();
        let c3 = c2 / 2.0;
        let mut out = Vec::with_capacity(h * w);
        for cy in 0..h as isize {
            for cx in 0..w as isize {
                let mut xs = Vec::new();
                let mut ys = Vec::new();
                for dy in -r..=r {
                    for dx in -r..=r {
                        let sy = reflect101(cy + dy, h);
                        let sx = reflect101(cx + dx, w);
                        xs.push(x.get(sy, sx) as f64);
                        ys.push(y.get(sy, sx) as f64);
                    }
                }
                let n = xs.len() as f64;
                let mx = xs.iter().sum::<f64>() / n;
                let my = ys.iter().sum::<f64>() / n;
                let vx = xs.iter().map(|v| (v - mx) * (v - mx)).sum::<f64>() / n;
                let vy = ys.iter().map(|v| (v - my) * (v - my)).sum::<f64>() / n;
                let cov = xs
                    .iter()
                    .zip(&ys)
                    .map(|(a, b)| (a - mx) * (b - my))
                    .sum::<f64>()
                    / n;
                let sx = vx.sqrt();
                let sy = vy.sqrt();
                let l = (2.0 * mx * my + c1) / (mx * mx + my * my + c1);
                let c = (2.0 * sx * sy + c2) / (vx + vy + c2);
                let s = (cov + c3) / (sx * sy + c3);
                out.push((l.powf(p.alpha)
                    * c.powf(p.beta)
                    * s.abs().powf(p.gamma)
                    * s.signum())
                .clamp(-1.0, 1.0));
            }
        }
        out
    }

    #[test]
    fn identity_is_exactly_one() {
        let x = random_image(24, 31, 7);
        let map = ssim_map(&x, &x, &SsimParams::default()).unwrap();
        assert!(map.values().iter().all(|&v| (v - 1.0).abs() < 1e-9));
        assert!((ssim_scalar(&x, &x, &SsimParams::default()).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn symmetric_bit_for_bit() {
        let p = SsimParams::default();
        for seed in 0..4 {
            let x = random_image(17, 23, seed);
            let y = random_image(17, 23, seed + 100);
            let ab = ssim_scalar(&x, &y, &p).unwrap();
            let ba = ssim_scalar(&y, &x, &p).unwrap();
            assert_eq!(ab.to_bits(), ba.to_bits());
        }
    }

    #[test]
    fn map_mean_equals_scalar() {
        let x = random_image(20, 20, 1);
        let y = random_image(20, 20, 2);
        let p = SsimParams::default();
        let map = ssim_map(&x, &y, &p).unwrap();
        assert!((map.mean() - ssim_scalar(&x, &y, &p).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn matches_naive_window_oracle() {
        let p = SsimParams::default();
        for seed in 0..3 {
            let x = random_image(13, 19, seed);
            let y = random_image(13, 19, seed + 50);
            let map = ssim_map(&x, &y, &p).unwrap();
            let oracle = naive_ssim_map(&x, &y, &p);
            for (a, b) in map.values().iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-10, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn matches_naive_oracle_with_exponents() {
        let p = SsimParams {
            alpha: 1.0,
            beta: 0.5,
            gamma: 2.0,
            ..SsimParams::default()
        };
        let x = random_image(11, 11, 3);
        let y = random_image(11, 11, 33);
        let map = ssim_map(&x, &y, &p).unwrap();
        let oracle = naive_ssim_map(&x, &y, &p);
        for (a, b) in map.values().iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn near_identical_images_score_high() {
        let x = GrayImage::filled(16, 16, 0.2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let y = GrayImage::from_fn(16, 16, |_, _| {
            0.2 + 1e-4 * (rng.random::<f32>() - 0.5)
        });
        assert!(ssim_scalar(&x, &y, &SsimParams::default()).unwrap() > 0.99);
    }

    #[test]
    fn inverted_checkerboard_scores_negative() {
        let x = GrayImage::from_fn(16, 16, |y, x| ((y + x) % 2) as f32);
        let y = GrayImage::from_fn(16, 16, |y, x| ((y + x + 1) % 2) as f32);
        assert!(ssim_scalar(&x, &y, &SsimParams::default()).unwrap() < 0.0);
    }

    #[test]
    fn inverted_patch_shows_in_map() {
        let x = random_image(32, 32, 9);
        let y = GrayImage::from_fn(32, 32, |r, c| {
            let v = x.get(r, c);
            if (14..19).contains(&r) && (14..19).contains(&c) {
                1.0 - v
            } else {
                v
            }
        });
        let map = ssim_map(&x, &y, &SsimParams::default()).unwrap();
        assert!(map.get(16, 16) < 0.5, "patch center {}", map.get(16, 16));
        assert!(map.get(2, 2) > 0.95, "far corner {}", map.get(2, 2));
        assert!(map.get(30, 30) > 0.95);
    }

    #[test]
    fn all_values_in_range() {
        let x = random_image(21, 14, 4);
        let y = random_image(21, 14, 5);
        let map = ssim_map(&x, &y, &SsimParams::default()).unwrap();
        assert!(map.values().iter().all(|v| (-1.0..=1.0).contains(v)));
    }

    #[test]
    fn rejects_bad_inputs() {
        let x = random_image(8, 8, 0);
        let y = random_image(8, 9, 0);
        let p = SsimParams::default();
        assert!(matches!(
            ssim_map(&x, &y, &p),
            Err(crate::Error::ShapeMismatch(..))
        ));
        let tiny = random_image(4, 4, 0);
        assert!(matches!(
            ssim_map(&tiny, &tiny, &p),
            Err(crate::Error::ImageSmallerThanWindow { .. })
        ));
        let bad = SsimParams {
            window: 4,
            ..SsimParams::default()
        };
        assert!(ssim_map(&x, &x, &bad).is_err());
    }
}
