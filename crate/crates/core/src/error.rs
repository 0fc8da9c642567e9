use thiserror::Error;

/// Which build-time property of an extended translation algebra failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaViolation {
    Antisymmetry,
    Equivariance,
    Fundamental,
    Nondegenerate,
}

impl std::fmt::Display for EtaViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EtaViolation::Antisymmetry => "antisymmetry",
            EtaViolation::Equivariance => "equivariance",
            EtaViolation::Fundamental => "fundamental",
            EtaViolation::Nondegenerate => "nondegenerate",
        })
    }
}

#[derive(Debug, Error)]
pub enum EtapError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Usage(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("multiplicity form is degenerate")]
    DegenerateAux,
    #[error("extended translation algebra check failed: {0}")]
    Eta(EtaViolation),
    #[error("form selection: {0}")]
    FormSelection(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl EtapError {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            EtapError::Consistency(_) | EtapError::Eta(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, EtapError>;
