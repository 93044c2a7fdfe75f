//! Shared image primitives: raster containers, SSIM, Otsu binarization,
//! box geometry, cropping/resizing and overlay rendering.
//!
//! All operations here are pure functions over immutable inputs and are safe
//! to call concurrently. Intensities are canonically `[0, 1]` in memory and
//! 8-bit on disk.

mod geometry;
mod image_types;
mod io;
mod otsu;
mod render;
mod resize;
mod ssim;

pub use geometry::{expand_box, BoundingBox};
pub use image_types::{BinaryMask, GrayImage, Rgb, RgbImage};
pub use io::{load_gray_png, save_gray_png, save_mask_png, save_rgb_png};
pub use otsu::{otsu_binarize, OtsuResult};
pub use render::{draw_box, gray_to_rgb, overlay_mask};
pub use resize::{crop_resize, resize_bilinear, CropGeometry};
pub use ssim::{ssim_map, ssim_scalar, SsimMap, SsimParams};
