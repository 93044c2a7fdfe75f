use super::geometry::BoundingBox;
use super::image_types::{BinaryMask, GrayImage, Rgb, RgbImage};
use crate::Result;

/// Replicates a grayscale image across the three RGB channels.
pub fn gray_to_rgb(img: &GrayImage) -> RgbImage {
    let (h, w) = img.shape();
    let mut out = RgbImage::filled(h, w, [0.0; 3]);
    for y in 0..h {
        for x in 0..w {
            let v = img.get(y, x);
            out.set(y, x, [v, v, v]);
        }
    }
    out
}

/// Renders a cell with its anomaly mask: gray pixels replicated to RGB and
/// masked pixels painted pure red.
pub fn overlay_mask(cell: &GrayImage, mask: &BinaryMask) -> Result<RgbImage> {
    if cell.shape() != mask.shape() {
        return Err(crate::Error::ShapeMismatch(
            cell.height(),
            cell.width(),
            mask.height(),
            mask.width(),
        ));
    }
    let mut out = gray_to_rgb(cell);
    for y in 0..cell.height() {
        for x in 0..cell.width() {
            if mask.get(y, x) {
                out.set(y, x, [1.0, 0.0, 0.0]);
            }
        }
    }
    Ok(out)
}

/// Paints the outline of `bbox` with the given stroke width, leaving the
/// interior untouched. The box is clamped to the image.
pub fn draw_box(img: &RgbImage, bbox: &BoundingBox, color: Rgb, stroke: usize) -> RgbImage {
    let mut out = img.clone();
    let (h, w) = img.shape();
    let x0 = (bbox.x_min.round().max(0.0) as usize).min(w);
    let y0 = (bbox.y_min.round().max(0.0) as usize).min(h);
    let x1 = (bbox.x_max.round().max(0.0) as usize).min(w);
    let y1 = (bbox.y_max.round().max(0.0) as usize).min(h);
    if x0 >= x1 || y0 >= y1 || stroke == 0 {
        return out;
    }
    let s = stroke.min((y1 - y0).div_ceil(2)).min((x1 - x0).div_ceil(2));
    for y in y0..y1 {
        let on_horizontal_band = y < y0 + s || y >= y1 - s;
        for x in x0..x1 {
            let on_vertical_band = x < x0 + s || x >= x1 - s;
            if on_horizontal_band || on_vertical_band {
                out.set(y, x, color);
            }
        }
    }
    out
}
