use std::fmt;

use mbdom::cotree::CotreeError;
use mbdom::game::EngineError;
use mbdom::graph::GraphError;
use mbdom::pairing::PairingError;
use mbdom::position::PositionError;
use mbdom::reductions::ReductionError;
use mbdom::structured::StructuredError;

/// A failed command, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or input the chosen engine cannot take.
    Parse(String),
    /// A size cap was exceeded.
    Cap(String),
    /// The environment does not allow the command (no terminal for `play`).
    Env(String),
    /// An experiment found counterexamples.
    Failed(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Env(_) => 4,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "input error: {m}"),
            CliError::Cap(m) => write!(f, "size cap exceeded: {m}"),
            CliError::Env(m) => write!(f, "{m}"),
            CliError::Failed(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooManyVertices { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<CotreeError> for CliError {
    fn from(e: CotreeError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Cap(e.to_string())
    }
}

impl From<PairingError> for CliError {
    fn from(e: PairingError) -> Self {
        match e {
            PairingError::TooLarge { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<PositionError> for CliError {
    fn from(e: PositionError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<StructuredError> for CliError {
    fn from(e: StructuredError) -> Self {
        match e {
            StructuredError::Engine(inner) => inner.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::TooManyVariables { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}
