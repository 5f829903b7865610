use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants are grouped so that a front end can map them onto distinct exit
/// codes: parse errors, invariant violations, and exceeded resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {vertex} out of range for a quiver on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("oriented 2-cycle between vertices {0} and {1}")]
    TwoCycle(usize, usize),
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
    #[error("vertex {0} has no incoming arrows")]
    NoIncomingArrows(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
