use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// A colouring or claim failed its check; the text goes to stdout.
    #[error("{0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] hfree_core::Error),
}

impl CliError {
    pub fn io(path: &str, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_string(),
            source,
        }
    }

    /// 1 usage or input error, 2 failed verification or unmet promise,
    /// 3 budget exhausted.
    pub fn exit_code(&self) -> u8 {
        use hfree_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Verification(_) => 2,
            CliError::Core(E::BudgetExhausted) => 3,
            CliError::Core(E::Precondition(_) | E::Internal(_) | E::TrivialNo(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
