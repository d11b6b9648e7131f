use crate::counter::CountStats;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A size cap or the time budget was exceeded. `stats` is filled in when
    /// the limit was hit mid-search.
    #[error("resource limit exceeded: {what}")]
    Resource {
        what: String,
        stats: Option<CountStats>,
    },

    #[error("external counter failed: {message}")]
    External { message: String, output: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>) -> Self {
        Error::Resource {
            what: what.into(),
            stats: None,
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
