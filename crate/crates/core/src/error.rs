use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument was outside the operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A brute-force enumeration was asked for more than its configured bound.
    #[error("enumeration bound exceeded: n = {requested} > {bound}")]
    Resource { requested: usize, bound: usize },
    /// Malformed rational literal.
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
