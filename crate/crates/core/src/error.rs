use thiserror::Error;

use crate::instance::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("infeasible: {0}")]
    Infeasible(ValidationReport),

    #[error("malformed instance: {0}")]
    InvalidInstance(ValidationReport),

    #[error("schedule does not cover the instance: {0}")]
    IncompleteSchedule(String),

    #[error("not untangleable: {0}")]
    NotUntangleable(String),

    #[error("normalization did not reach a fixpoint within {0} rounds")]
    NormalizeCap(usize),

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("oracle budget exceeded: search space estimate {estimate}, explored {explored} nodes (budget {budget})")]
    BudgetExceeded {
        estimate: u128,
        explored: u64,
        budget: u64,
    },

    #[error("exhausted: no feasible no-idle schedule exists for this instance")]
    Exhausted,

    #[error("infeasible network: max flow {found} < required {required}")]
    InfeasibleNetwork { found: usize, required: usize },

    #[error("invalid flow: {0}")]
    InvalidFlow(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
