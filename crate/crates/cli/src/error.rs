use thiserror::Error;

/// Everything a command can fail with.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: edge listed twice")]
    DuplicateEdge { line: usize },
    #[error("line {line}: node index outside 1..={nodes}")]
    IndexOutOfRange { line: usize, nodes: usize },
    #[error("SPECLAP_TOL must be a positive number, got '{0}'")]
    InvalidTolerance(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Domain(#[from] speclap::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::DuplicateEdge { .. } => "DuplicateEdge",
            CliError::IndexOutOfRange { .. } => "IndexOutOfRange",
            CliError::InvalidTolerance(_) => "InvalidTolerance",
            CliError::Io { .. } => "Io",
            CliError::Domain(e) => e.kind(),
        }
    }

    /// Process exit status: 1 for bad invocations, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::InvalidTolerance(_) => 1,
            _ => 2,
        }
    }

    /// Single-line JSON document describing the error.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
