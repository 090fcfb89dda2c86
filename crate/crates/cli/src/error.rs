use thiserror::Error;

use irredforge_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid input: exit status 2.
    #[error("{0}")]
    Precondition(String),
    /// Failure while computing or writing: exit status 1.
    #[error("{0}")]
    Runtime(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::Runtime(_) | CliError::Io { .. } => 1,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Overflow | CoreError::DescentFailure | CoreError::IterationCap(_) => {
                CliError::Runtime(e.to_string())
            }
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Runtime(format!("json: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Runtime(format!("csv: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
