use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid fattening width: {0}")]
    InvalidFattening(String),
    #[error("reduction provenance required: {0}")]
    ProvenanceRequired(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("size bounds exceeded: {0}")]
    BoundsExceeded(String),
    #[error("invalid reduction chain: {0}")]
    ChainInvalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
