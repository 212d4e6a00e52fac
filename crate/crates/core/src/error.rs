use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// `n` is zero or exceeds the configured limit.
    #[error("size error: {0}")]
    Size(String),
    /// Generator index, vertex or crossing does not belong to the object.
    #[error("argument error: {0}")]
    Argument(String),
    /// Input is outside the domain of the operation (crossing where a web is
    /// required, repeated entries, non-dominating pair, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Two dots passed to `swap_dots` are joined by one arc.
    #[error("precondition error: {0}")]
    Precondition(String),
    /// Straightening did not reach a fixpoint inside the step budget.
    #[error("straightening exceeded {0} steps")]
    NonTermination(usize),
    /// Budget of a resolution graph was exhausted.
    #[error("resolution exceeded node budget of {0}")]
    Budget(usize),
    /// The positivity witness construction broke one of its invariants.
    #[error("witness construction failed: {0}")]
    Witness(String),
    #[error("parse error: {0}")]
    Parse(String),
}
