use std::path::Path;

use image::{ImageBuffer, Luma, Rgb as ImgRgb};

use super::image_types::{BinaryMask, GrayImage, RgbImage};
use crate::{Error, Result};

/// Loads an 8-bit grayscale PNG, mapping intensities linearly onto `[0, 1]`.
/// Color inputs are converted to luma first.
pub fn load_gray_png(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    if !path.exists() {
        return Err(Error::MissingFile(path.to_path_buf()));
    }
    let img = image::open(path)?.into_luma8();
    let (w, h) = img.dimensions();
    GrayImage::new(
        h as usize,
        w as usize,
        img.as_raw().iter().map(|&v| v as f32 / 255.0).collect(),
    )
}

/// Writes an image as 8-bit grayscale PNG, mapping `[0, 1]` back to 0..=255.
pub fn save_gray_png(img: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    let (h, w) = img.shape();
    let buf: ImageBuffer<Luma<u8>, Vec<u8>> = ImageBuffer::from_fn(w as u32, h as u32, |x, y| {
        Luma([(img.get(y as usize, x as usize) * 255.0).round() as u8])
    });
    buf.save(path.as_ref())?;
    Ok(())
}

pub fn save_rgb_png(img: &RgbImage, path: impl AsRef<Path>) -> Result<()> {
    let (h, w) = img.shape();
    let buf: ImageBuffer<ImgRgb<u8>, Vec<u8>> = ImageBuffer::from_fn(w as u32, h as u32, |x, y| {
        let p = img.get(y as usize, x as usize);
        ImgRgb([
            (p[0] * 255.0).round() as u8,
            (p[1] * 255.0).round() as u8,
            (p[2] * 255.0).round() as u8,
        ])
    });
    buf.save(path.as_ref())?;
    Ok(())
}

/// Writes a mask as a black/white grayscale PNG (255 marks anomalous pixels).
pub fn save_mask_png(mask: &BinaryMask, path: impl AsRef<Path>) -> Result<()> {
    let (h, w) = mask.shape();
    let buf: ImageBuffer<Luma<u8>, Vec<u8>> = ImageBuffer::from_fn(w as u32, h as u32, |x, y| {
        Luma([if mask.get(y as usize, x as usize) { 255 } else { 0 }])
    });
    buf.save(path.as_ref())?;
    Ok(())
}
