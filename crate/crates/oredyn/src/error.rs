use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// Input parsed but violates a structural invariant.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Two objects that must share arity or family do not.
    #[error("mismatch: {0}")]
    Mismatch(String),
    /// A configured resource cap was exceeded; the cap is named.
    #[error("resource cap exceeded ({cap}): {detail}")]
    Resource { cap: String, detail: String },
    /// The requested operation is not available for this input family.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn resource(cap: &str, detail: impl Into<String>) -> Self {
        Error::Resource {
            cap: cap.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
