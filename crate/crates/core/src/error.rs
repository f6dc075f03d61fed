use std::io;

use thiserror::Error;

use crate::arena::Position;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("cop count must be at least 1")]
    NoCops,

    #[error("arena for n={n}, k={k} has {count} positions, over the limit of {limit}")]
    TooManyPositions {
        n: usize,
        k: usize,
        count: u128,
        limit: usize,
    },

    #[error("position count for n={n}, k={k} overflows")]
    CountOverflow { n: usize, k: usize },

    #[error("cop number search exceeded limits at k={k}: {source}")]
    CopNumberLimit {
        k: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("history tree search visited more than {budget} nodes; shrink the instance or the horizon")]
    BudgetExceeded { budget: u64 },

    #[error("invalid position {position} for this arena: {reason}")]
    InvalidPosition { position: Position, reason: String },

    #[error("position {0} is a capture; captures have no successors")]
    CaptureIsTerminal(Position),

    #[error("{side} chose an illegal move {chosen} from {at}")]
    IllegalMove {
        side: &'static str,
        at: Position,
        chosen: Position,
    },

    #[error("illegal transition at transcript index {index}: {reason}")]
    IllegalTranscript { index: usize, reason: String },

    #[error("{0}")]
    Behavior(String),

    #[error("check not applicable: {0}")]
    NotApplicable(String),

    #[error("unknown corpus {0:?}")]
    UnknownCorpus(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for this error, as used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooManyPositions { .. }
            | Error::CountOverflow { .. }
            | Error::CopNumberLimit { .. }
            | Error::BudgetExceeded { .. } => 3,
            Error::IllegalMove { .. } | Error::IllegalTranscript { .. } => 4,
            _ => 2,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
