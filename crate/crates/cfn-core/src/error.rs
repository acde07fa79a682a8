//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("time reversal: clock at {clock} but advance requested to {requested}")]
    TimeReversal { clock: f64, requested: f64 },
    #[error("input channel {channel} out of range for {n_inputs} inputs")]
    ChannelOutOfRange { channel: usize, n_inputs: usize },
    #[error("degenerate sample: all intensities are zero")]
    DegenerateSample,
    #[error("degenerate update: weight vector collapsed to zero")]
    DegenerateUpdate,
    #[error("class {0} not present in the dataset")]
    MissingClass(u8),
    #[error("class {0} listed more than once")]
    DuplicateClass(u8),
    #[error("label {0} outside [0, 9]")]
    LabelOutOfRange(u8),
    #[error("dataset size mismatch: {images} images vs {labels} labels")]
    CountMismatch { images: usize, labels: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("value {value} outside domain {domain}")]
    Domain { value: f64, domain: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParam(&'static str),
    #[error("no output spikes even at the maximum input rate")]
    Unclassifiable,
    #[error("cluster count {k} exceeds sample count {n}")]
    ClusterCount { k: usize, n: usize },
    #[error("need samples from at least two classes")]
    TooFewClasses,
}
