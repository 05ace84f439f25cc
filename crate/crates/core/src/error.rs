use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),

    #[error("relation is not length-homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("no vanishing graded component found up to path length {max_length}")]
    NotFiniteDimensional { max_length: usize },
}

impl Error {
    /// Errors raised by the algebra engine itself, as opposed to malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::NotFiniteDimensional { .. } | Error::NonAdmissible(_) | Error::NonHomogeneous(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
