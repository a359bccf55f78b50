use thiserror::Error;

pub type Result<T, E = LabError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum LabError {
    #[error(transparent)]
    Core(#[from] dold::Error),
    #[error("{source_name}: line {line}: {msg}")]
    Parse { source_name: String, line: usize, msg: String },
    #[error("{0}: negative values need --abs")]
    SignedValue(String),
    #[error("{source_name}: offset is {offset}, strict policy needs 1")]
    Offset { source_name: String, offset: i64 },
    #[error("no bundled fixture for {0} (use --online or --fixtures-dir)")]
    MissingFixture(String),
    #[error("network error fetching {url}: {msg}")]
    Network { url: String, msg: String },
    #[error("HTTP {status} fetching {url}")]
    HttpStatus { url: String, status: u16 },
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl LabError {
    /// Process exit status for this error; 0 is reserved for completed runs.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) | LabError::UnknownSequence(_) => 2,
            LabError::Core(_) => 3,
            LabError::Parse { .. } | LabError::SignedValue(_) | LabError::Offset { .. } => 4,
            LabError::MissingFixture(_) => 5,
            LabError::Network { .. } => 6,
            LabError::HttpStatus { .. } => 7,
            LabError::Io { .. } => 8,
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        LabError::Io { path: path.as_ref().display().to_string(), source }
    }
}
