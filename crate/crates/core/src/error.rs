use thiserror::Error;

/// Errors raised by the algebraic engine. Each variant names the failing
/// precondition or budget so the CLI can report the stage that gave up.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial has no well-defined {0}")]
    ZeroPolynomial(&'static str),

    #[error("fresh variable `{0}` already occurs in the polynomial")]
    VariableClash(String),

    #[error("system is not square: {equations} equation(s) in {variables} bound variable(s)")]
    NonSquareSystem { equations: usize, variables: usize },

    #[error("resource budget exceeded in {stage}: {detail}")]
    ResourceBudgetExceeded { stage: &'static str, detail: String },

    #[error("endpoint {0} is a root of the polynomial; perturb it and retry")]
    EndpointIsRoot(String),

    #[error("generic fiber is not finite: no pure power of `{0}` leads any basis element")]
    NotZeroDimensionalFiber(String),

    #[error("specialized system is not zero-dimensional ({0})")]
    NotZeroDimensional(String),

    #[error("unknown quantity `{0}` in ratio expression")]
    UnknownQuantity(String),

    #[error("system is not square after linear elimination: {0}")]
    NonSquareAfterElimination(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
