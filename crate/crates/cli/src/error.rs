use std::process::ExitCode;

use egcert::cert::CertError;
use egcert::groebner::GroebnerError;
use egcert::poly::PolyError;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Unreadable or malformed input files.
    #[error("{0}")]
    Input(String),
    /// The computation finished and the answer is no.
    #[error("{0}")]
    Negative(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Negative(_) => "negative",
            CliError::Budget(_) => "budget",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Negative(_) | CliError::Internal(_) => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    /// Writes the error as one JSON line on stderr.
    pub fn report(&self) -> ExitCode {
        let body = json!({ "error": { "kind": self.kind(), "message": self.to_string() } });
        eprintln!("{body}");
        ExitCode::from(self.exit_code())
    }
}

impl From<CertError> for CliError {
    fn from(e: CertError) -> Self {
        match e {
            CertError::InvalidArgument(m) => CliError::Usage(m),
            CertError::Budget(m) => CliError::Budget(m),
            CertError::Groebner(g) => g.into(),
            CertError::Poly(p) => p.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::Incomplete { .. } => CliError::Budget(e.to_string()),
            GroebnerError::Poly(p) => p.into(),
            GroebnerError::Unsound(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Input(e.to_string())
    }
}
