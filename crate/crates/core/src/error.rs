use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("span of an empty list needs an explicit ambient dimension")]
    EmptySpan,

    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),

    #[error("unsupported scale: group order {order} exceeds the enumeration bound {bound}")]
    UnsupportedScale { order: u128, bound: u128 },

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("certificate `{name}` failed: {detail}")]
    CertificateFailed { name: String, detail: String },
}

impl Error {
    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::ModelInconsistency(msg.into())
    }

    pub(crate) fn certificate(name: &str, detail: impl Into<String>) -> Self {
        Error::CertificateFailed {
            name: name.to_string(),
            detail: detail.into(),
        }
    }
}
