use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6{}: {reason}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    Graph6 { line: Option<usize>, reason: String },

    #[error("{what}: size {got} exceeds the supported budget of {limit}")]
    SizeBudget {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("eigensolver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("{0} is not a valid parameter set: multiplicities are not integral")]
    Divisibility(String),

    #[error("nothing to write: {0}")]
    Empty(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn graph6(reason: impl Into<String>) -> Self {
        Error::Graph6 {
            line: None,
            reason: reason.into(),
        }
    }

    /// Attach a 1-based line number to a graph6 parse error.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Graph6 { reason, .. } => Error::Graph6 {
                line: Some(line),
                reason,
            },
            other => other,
        }
    }
}
