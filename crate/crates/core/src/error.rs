use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph is not connected")]
    Disconnected,

    /// Brute-force search refused because the instance is above the guard.
    #[error("size {size} exceeds the brute-force guard of {guard}")]
    Guard { size: usize, guard: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no leaf bar cover found with at most {max_bars} bars")]
    NoCover { max_bars: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Process exit code used by the `mcs` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Guard { .. } => 3,
            Error::NoCover { .. } => 2,
            _ => 1,
        }
    }
}
