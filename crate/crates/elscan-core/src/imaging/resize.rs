use super::geometry::BoundingBox;
use super::image_types::{BinaryMask, GrayImage};
use crate::{Error, Result};

/// Forward geometry of a crop-and-resize, kept so masks computed in crop
/// space can be mapped back onto the source image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CropGeometry {
    pub src_y0: usize,
    pub src_x0: usize,
    pub src_h: usize,
    pub src_w: usize,
    pub out_h: usize,
    pub out_w: usize,
}

impl CropGeometry {
    /// Maps a mask in crop space back onto source-image coordinates.
    ///
    /// Every source pixel inside the crop rectangle samples the mask at its
    /// forward-mapped position, so a full-coverage mask maps back to exactly
    /// the crop rectangle.
    pub fn map_mask_to_source(
        &self,
        mask: &BinaryMask,
        src_height: usize,
        src_width: usize,
    ) -> Result<BinaryMask> {
        if mask.shape() != (self.out_h, self.out_w) {
            return Err(Error::ShapeMismatch(
                mask.height(),
                mask.width(),
                self.out_h,
                self.out_w,
            ));
        }
        let mut out = BinaryMask::empty(src_height, src_width);
        let sy_scale = self.out_h as f64 / self.src_h as f64;
        let sx_scale = self.out_w as f64 / self.src_w as f64;
        for dy in 0..self.src_h {
            let y = self.src_y0 + dy;
            if y >= src_height {
                continue;
            }
            let my = (((dy as f64 + 0.5) * sy_scale - 0.5).round().max(0.0) as usize)
                .min(self.out_h - 1);
            for dx in 0..self.src_w {
                let x = self.src_x0 + dx;
                if x >= src_width {
                    continue;
                }
                let mx = (((dx as f64 + 0.5) * sx_scale - 0.5).round().max(0.0) as usize)
                    .min(self.out_w - 1);
                if mask.get(my, mx) {
                    out.set(y, x, true);
                }
            }
        }
        Ok(out)
    }
}

#[inline]
fn sample_bilinear(img: &GrayImage, y: f64, x: f64) -> f32 {
    let (h, w) = img.shape();
    let y = y.clamp(0.0, (h - 1) as f64);
    let x = x.clamp(0.0, (w - 1) as f64);
    let y0 = y.floor() as usize;
    let x0 = x.floor() as usize;
    let y1 = (y0 + 1).min(h - 1);
    let x1 = (x0 + 1).min(w - 1);
    let fy = (y - y0 as f64) as f32;
    let fx = (x - x0 as f64) as f32;
    let top = img.get(y0, x0) * (1.0 - fx) + img.get(y0, x1) * fx;
    let bot = img.get(y1, x0) * (1.0 - fx) + img.get(y1, x1) * fx;
    top * (1.0 - fy) + bot * fy
}

/// Bilinear resample to `(out_h, out_w)` with half-pixel center alignment.
/// Resampling to the source shape is an exact copy.
pub fn resize_bilinear(img: &GrayImage, out_h: usize, out_w: usize) -> Result<GrayImage> {
    if out_h == 0 || out_w == 0 {
        return Err(Error::InvalidParam {
            what: "resize target",
            why: format!("{out_h}x{out_w} must be at least 1x1"),
        });
    }
    let (h, w) = img.shape();
    if (h, w) == (out_h, out_w) {
        return Ok(img.clone());
    }
    let sy = h as f64 / out_h as f64;
    let sx = w as f64 / out_w as f64;
    Ok(GrayImage::from_fn(out_h, out_w, |oy, ox| {
        let y = (oy as f64 + 0.5) * sy - 0.5;
        let x = (ox as f64 + 0.5) * sx - 0.5;
        sample_bilinear(img, y, x)
    }))
}

/// Crops `bbox` out of `panel` and resamples it to `target`, returning the
/// crop together with its forward geometry.
pub fn crop_resize(
    panel: &GrayImage,
    bbox: &BoundingBox,
    target: (usize, usize),
) -> Result<(GrayImage, CropGeometry)> {
    let (h, w) = panel.shape();
    if !bbox.fits(h, w) {
        return Err(Error::BoxOutOfBounds(*bbox, h, w));
    }
    let y0 = (bbox.y_min.round() as usize).min(h);
    let y1 = (bbox.y_max.round() as usize).min(h);
    let x0 = (bbox.x_min.round() as usize).min(w);
    let x1 = (bbox.x_max.round() as usize).min(w);
    if y1 <= y0 || x1 <= x0 {
        return Err(Error::DegenerateCrop(*bbox));
    }
    let (src_h, src_w) = (y1 - y0, x1 - x0);
    let (out_h, out_w) = target;

    let crop = GrayImage::from_fn(src_h, src_w, |dy, dx| panel.get(y0 + dy, x0 + dx));
    let resized = resize_bilinear(&crop, out_h, out_w)?;
    Ok((
        resized,
        CropGeometry {
            src_y0: y0,
            src_x0: x0,
            src_h,
            src_w,
            out_h,
            out_w,
        },
    ))
}
