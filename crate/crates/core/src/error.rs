use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size error: {0}")]
    Size(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("arithmetic range exceeded: {0}")]
    Range(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph construction failed: {0}")]
    Construction(String),

    #[error("enumeration refused: {0}")]
    Refused(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
