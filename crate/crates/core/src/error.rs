//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violated an operation's contract (shape, range, or parameter).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A problem in an annotation file, pinned to the offending line.
    #[error("{}:{line}: {message}", path.display())]
    Annotation {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// Every class is missing ground truth, so no AP is defined.
    #[error("no class has a defined AP (no ground-truth objects at all)")]
    NoDefinedAp,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
