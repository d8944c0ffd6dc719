use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Group(#[from] dicyclic::Error),

    #[error("invalid document: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1 for failed verification, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Group(dicyclic::Error::Consistency { .. })
            | CliError::Group(dicyclic::Error::InvariantViolation(_)) => 1,
            _ => 2,
        }
    }
}

impl From<csv::IntoInnerError<csv::Writer<Vec<u8>>>> for CliError {
    fn from(e: csv::IntoInnerError<csv::Writer<Vec<u8>>>) -> Self {
        CliError::Csv(e.into_error().into())
    }
}
