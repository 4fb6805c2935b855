use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("failed to read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("failed to write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("invalid json in {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Syntax(String),
    #[error("{0}")]
    Invalid(toppling::Error),
    /// A computed object failed one of its own consistency checks.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 2,
            CliError::Invalid(e) if is_internal(e) => 2,
            _ => 1,
        }
    }
}

fn is_internal(e: &toppling::Error) -> bool {
    matches!(
        e,
        toppling::Error::CompositionNonzero { .. }
            | toppling::Error::UnitEntry { .. }
            | toppling::Error::IdentityViolation { .. }
            | toppling::Error::LeadingTermMismatch
            | toppling::Error::NotGroebner
    )
}

impl From<toppling::Error> for CliError {
    fn from(e: toppling::Error) -> Self {
        CliError::Invalid(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
