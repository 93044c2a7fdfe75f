use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Axis-aligned box in pixel coordinates, `x_min < x_max`, `y_min < y_max`.
///
/// Coordinates are continuous: a box covering one pixel spans `[x, x+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub x_min: f32,
    pub y_min: f32,
    pub x_max: f32,
    pub y_max: f32,
}

impl BoundingBox {
    pub fn new(x_min: f32, y_min: f32, x_max: f32, y_max: f32) -> Result<Self> {
        let b = Self {
            x_min,
            y_min,
            x_max,
            y_max,
        };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let why = if !(self.x_min.is_finite()
            && self.y_min.is_finite()
            && self.x_max.is_finite()
            && self.y_max.is_finite())
        {
            Some("coordinates must be finite")
        } else if self.x_min < 0.0 || self.y_min < 0.0 {
            Some("coordinates must be non-negative")
        } else if self.x_min >= self.x_max || self.y_min >= self.y_max {
            Some("min coordinates must be strictly below max coordinates")
        } else {
            None
        };
        match why {
            Some(why) => Err(Error::InvalidBox {
                x_min: self.x_min,
                y_min: self.y_min,
                x_max: self.x_max,
                y_max: self.y_max,
                why: why.to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn width(&self) -> f32 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f32 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> f32 {
        self.width() * self.height()
    }

    pub fn center(&self) -> (f32, f32) {
        (
            0.5 * (self.x_min + self.x_max),
            0.5 * (self.y_min + self.y_max),
        )
    }

    /// True when the box lies fully inside an image of `height` x `width`.
    pub fn fits(&self, height: usize, width: usize) -> bool {
        self.x_min >= 0.0
            && self.y_min >= 0.0
            && self.x_max <= width as f32
            && self.y_max <= height as f32
    }

    /// Intersection-over-union with another box.
    pub fn iou(&self, other: &Self) -> f32 {
        let ix = (self.x_max.min(other.x_max) - self.x_min.max(other.x_min)).max(0.0);
        let iy = (self.y_max.min(other.y_max) - self.y_min.max(other.y_min)).max(0.0);
        let inter = ix * iy;
        let union = self.area() + other.area() - inter;
        if union <= 0.0 {
            return 0.0;
        }
        inter / union
    }

    /// Clamps the box to image bounds. Returns `None` when nothing remains.
    pub fn clip(&self, height: usize, width: usize) -> Option<Self> {
        let x_min = self.x_min.max(0.0);
        let y_min = self.y_min.max(0.0);
        let x_max = self.x_max.min(width as f32);
        let y_max = self.y_max.min(height as f32);
        if x_min < x_max && y_min < y_max {
            Some(Self {
                x_min,
                y_min,
                x_max,
                y_max,
            })
        } else {
            None
        }
    }

    /// Lexicographic ordering on (x_min, y_min, x_max, y_max); used to make
    /// detection output deterministic under score ties.
    pub fn cmp_lexicographic(&self, other: &Self) -> std::cmp::Ordering {
        let a = [self.x_min, self.y_min, self.x_max, self.y_max];
        let b = [other.x_min, other.y_min, other.x_max, other.y_max];
        for (x, y) in a.iter().zip(&b) {
            match x.partial_cmp(y) {
                Some(std::cmp::Ordering::Equal) | None => continue,
                Some(ord) => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// Grows a box outward by `ratio / 2` of its own size on every side (total
/// growth of `ratio` per dimension), clamped to the image bounds.
///
/// Cell detections tend to shave the outer border of a cell; classification
/// consumes crops expanded this way so those border features survive.
pub fn expand_box(bbox: &BoundingBox, bounds: (usize, usize), ratio: f32) -> BoundingBox {
    let (height, width) = bounds;
    let dx = bbox.width() * ratio * 0.5;
    let dy = bbox.height() * ratio * 0.5;
    BoundingBox {
        x_min: (bbox.x_min - dx).max(0.0),
        y_min: (bbox.y_min - dy).max(0.0),
        x_max: (bbox.x_max + dx).min(width as f32),
        y_max: (bbox.y_max + dy).min(height as f32),
    }
}
