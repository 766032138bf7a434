use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is not in the positive cone: {0}")]
    NotInCone(String),

    #[error("cone is not simplicial: {0}")]
    NotSimplicial(String),

    #[error("monoid is not cancellative: {0}")]
    NotCancellative(String),

    #[error("invalid barycentric point: {0}")]
    InvalidPoint(String),

    #[error("invalid function data: {0}")]
    InvalidFunction(String),

    #[error("positivity repair needs epsilon below the minimum value; got epsilon {epsilon} with minimum {minimum}")]
    EpsilonTooLarge { epsilon: String, minimum: String },

    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),

    #[error("Künneth obstruction: {0}")]
    KunnethObstruction(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("target tolerance not achievable: requested {requested}, achieved {achieved}")]
    ToleranceNotAchieved { requested: String, achieved: String },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
