use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Format(String),
    #[error("input is not connected (some distance is undefined)")]
    Disconnected,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order {0} is outside the supported range")]
    OrderOutOfRange(usize),
    #[error("a vertex has zero transmission")]
    ZeroTransmission,
    #[error("diameter exceeds 2")]
    DiameterTooLarge,
    #[error("input is not a tree")]
    NotATree,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not supported: {0}")]
    NotSupported(String),
    #[error("no closed form: {0}")]
    NoClosedForm(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("eigensolver did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("inputs are not cospectral")]
    NotCospectral,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
