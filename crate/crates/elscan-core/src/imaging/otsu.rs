use super::image_types::{BinaryMask, GrayImage};

const BINS: usize = 256;

/// Outcome of Otsu binarization.
#[derive(Debug, Clone)]
pub struct OtsuResult {
    /// Threshold intensity; pixels strictly above it are set in the mask.
    pub threshold: f32,
    pub mask: BinaryMask,
    /// True when the histogram collapses into a single bin, in which case
    /// the mask is empty and `threshold` is the (constant) image mean.
    pub degenerate: bool,
}

#[inline]
fn bin_of(v: f32) -> usize {
    ((v * 255.0).round() as usize).min(BINS - 1)
}

/// Otsu's method over a 256-bin histogram: picks the threshold maximizing
/// the between-class variance, ties broken toward the lower threshold.
///
/// A single-bin histogram cannot be split; it yields an empty mask flagged
/// as degenerate rather than an arbitrary cut.
pub fn otsu_binarize(img: &GrayImage) -> OtsuResult {
    let (h, w) = img.shape();
    let mut hist = [0u64; BINS];
    for &v in img.pixels() {
        hist[bin_of(v)] += 1;
    }

    let occupied = hist.iter().filter(|&&c| c > 0).count();
    if occupied <= 1 {
        return OtsuResult {
            threshold: img.mean() as f32,
            mask: BinaryMask::empty(h, w),
            degenerate: true,
        };
    }

    let total: f64 = (h * w) as f64;
    let total_sum: f64 = hist
        .iter()
        .enumerate()
        .map(|(i, &c)| i as f64 * c as f64)
        .sum();

    let mut best_t = 0usize;
    let mut best_var = f64::NEG_INFINITY;
    let mut w0 = 0.0f64;
    let mut sum0 = 0.0f64;
    for t in 0..BINS - 1 {
        w0 += hist[t] as f64;
        sum0 += t as f64 * hist[t] as f64;
        let w1 = total - w0;
        if w0 == 0.0 || w1 == 0.0 {
            continue;
        }
        let mu0 = sum0 / w0;
        let mu1 = (total_sum - sum0) / w1;
        let var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if var > best_var {
            best_var = var;
            best_t = t;
        }
    }

    // Midpoint above bin `best_t`, so "intensity > threshold" matches the
    // histogram split.
    let threshold = (best_t as f32 + 0.5) / 255.0;
    let mask = BinaryMask::from_fn(h, w, |y, x| img.get(y, x) > threshold);
    OtsuResult {
        threshold,
        mask,
        degenerate: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Reference maximizer that rescans the histogram for every candidate
    /// threshold.
    pub(crate) fn brute_force_otsu_bin(img: &GrayImage) -> Option<usize> {
        let mut hist = [0u64; BINS];
        for &v in img.pixels() {
            hist[bin_of(v)] += 1;
        }
        if hist.iter().filter(|&&c| c > 0).count() <= 1 {
            return None;
        }
        let total: f64 = img.pixels().len() as f64;
        let mut best = None;
        let mut best_var = f64::NEG_INFINITY;
        for t in 0..BINS - 1 {
            let mut w0 = 0.0;
            let mut sum0 = 0.0;
            for (i, &c) in hist.iter().enumerate().take(t + 1) {
                w0 += c as f64;
                sum0 += i as f64 * c as f64;
            }
            let mut w1 = 0.0;
            let mut sum1 = 0.0;
            for (i, &c) in hist.iter().enumerate().skip(t + 1) {
                w1 += c as f64;
                sum1 += i as f64 * c as f64;
            }
            let _ = total;
            if w0 == 0.0 || w1 == 0.0 {
                continue;
            }
            let d = sum0 / w0 - sum1 / w1;
            let var = w0 * w1 * d * d;
            if var > best_var {
                best_var = var;
                best = Some(t);
            }
        }
        best
    }

    #[test]
    fn splits_half_and_half() {
        let img = GrayImage::from_fn(16, 16, |y, _| if y < 8 { 0.0 } else { 1.0 });
        let r = otsu_binarize(&img);
        assert!(!r.degenerate);
        assert!(r.threshold > 0.0 && r.threshold < 1.0);
        for y in 0..16 {
            for x in 0..16 {
                assert_eq!(r.mask.get(y, x), y >= 8);
            }
        }
    }

    #[test]
    fn constant_image_is_degenerate() {
        let img = GrayImage::filled(10, 10, 0.5).unwrap();
        let r = otsu_binarize(&img);
        assert!(r.degenerate);
        assert!(r.mask.is_empty());
        assert!((r.threshold - 0.5).abs() < 1e-6);
    }

    #[test]
    fn bimodal_threshold_lands_between_modes() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let img = GrayImage::from_fn(64, 64, |_, x| {
            let mode = if x < 32 { 0.2 } else { 0.8 };
            (mode + 0.05 * gaussian(&mut rng)) as f32
        });
        let r = otsu_binarize(&img);
        assert!(
            r.threshold > 0.35 && r.threshold < 0.65,
            "threshold {}",
            r.threshold
        );
    }

    #[test]
    fn matches_brute_force_maximizer_exactly() {
        for seed in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let img = GrayImage::from_fn(32, 32, |_, _| rng.random::<f32>().powf(2.0));
            let r = otsu_binarize(&img);
            let oracle = brute_force_otsu_bin(&img).expect("non-degenerate");
            let got = ((r.threshold * 255.0) - 0.5).round() as usize;
            assert_eq!(got, oracle, "seed {seed}");
        }
    }

    fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
        // Box-Muller is plenty for test fixtures.
        let u1: f64 = rng.random::<f64>().max(1e-12);
        let u2: f64 = rng.random();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}
