//! elscan-core — cell-level anomaly detection and segmentation for
//! electroluminescence (EL) images of photovoltaic modules.
//!
//! The library is organized around a four-stage inspection pipeline:
//!
//! 1. **Detection** — an objectness-only region proposal network locates
//!    every cell on a panel image.
//! 2. **Classification** — a scalable CNN labels each cropped cell as
//!    defective or non-defective, with an uncertainty-routing threshold.
//! 3. **Segmentation** — a convolutional autoencoder trained only on
//!    non-defective cells reconstructs each defective cell; the structural
//!    dissimilarity between input and reconstruction is binarized into an
//!    anomaly mask.
//! 4. **Attachment** — per-cell verdicts and masks are reassembled into a
//!    single annotated panel image.
//!
//! Supporting modules provide the shared image primitives ([`imaging`]),
//! dataset ingestion and synthesis ([`datasets`]), augmentation and class
//! balancing ([`augmentation`]), and the small neural-network substrate the
//! three models are built on ([`nn`]).

pub mod augmentation;
pub mod classification;
pub mod datasets;
pub mod detection;
mod error;
pub mod imaging;
pub mod nn;
pub mod pipeline;
pub mod segmentation;

pub use error::{Error, Result};
pub use imaging::{BinaryMask, BoundingBox, GrayImage, RgbImage, SsimMap, SsimParams};
