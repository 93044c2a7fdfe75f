use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("image shapes differ: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("image {height}x{width} is smaller than the {window}x{window} SSIM window")]
    ImageSmallerThanWindow {
        height: usize,
        width: usize,
        window: usize,
    },

    #[error("invalid {what}: {why}")]
    InvalidParam { what: &'static str, why: String },

    #[error("invalid image: {0}")]
    InvalidImage(String),

    #[error("invalid bounding box ({x_min},{y_min},{x_max},{y_max}): {why}")]
    InvalidBox {
        x_min: f32,
        y_min: f32,
        x_max: f32,
        y_max: f32,
        why: String,
    },

    #[error("box ({0:?}) does not fit inside a {1}x{2} image")]
    BoxOutOfBounds(crate::imaging::BoundingBox, usize, usize),

    #[error("degenerate crop: box {0:?} has zero pixel area")]
    DegenerateCrop(crate::imaging::BoundingBox),

    #[error("dataset error in {path}: {why}")]
    Dataset { path: PathBuf, why: String },

    #[error("annotation error in {path} (object {index}): {why}")]
    Annotation {
        path: PathBuf,
        index: usize,
        why: String,
    },

    #[error("defect likelihood {0} is not one of 0.0 / 0.33 / 0.66 / 1.0")]
    InvalidLikelihood(f64),

    #[error("record {0} is not non-defective")]
    DefectiveRecord(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("split ratio {0} must lie strictly between 0 and 1")]
    InvalidSplitRatio(f64),

    #[error("balance target for {group}: {why}")]
    InvalidBalanceTarget { group: String, why: String },

    #[error("model has not been trained")]
    UntrainedModel,

    #[error("architecture audit failed at layer {layer}: expected {expected}, built {built}")]
    ArchitectureAudit {
        layer: String,
        expected: String,
        built: String,
    },

    #[error("checkpoint {path}: {why}")]
    Checkpoint { path: PathBuf, why: String },

    #[error("checkpoint {path}: format version {found} (supported: {supported})")]
    CheckpointVersion {
        path: PathBuf,
        found: u32,
        supported: u32,
    },

    #[error("checkpoint {path} holds a {found} model, expected {expected}")]
    CheckpointKind {
        path: PathBuf,
        found: &'static str,
        expected: &'static str,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("missing file: {0}")]
    MissingFile(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("image codec error: {0}")]
    Codec(#[from] image::ImageError),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("xml error: {0}")]
    Xml(String),
}
