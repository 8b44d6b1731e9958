use thiserror::Error;

use crate::partitions::Partition;

/// Errors raised by the exact-arithmetic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,

    #[error("pole at s = 1 in the coefficient of m_{0}")]
    PoleAt(Partition),

    #[error("symbol `{0}` has no assigned value")]
    Unassigned(String),

    #[error("cannot raise a non-monomial to a negative power")]
    NotInvertible,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("input is not symmetric under the transposition of x{i} and x{j}", i = .0, j = .0 + 1)]
    NotSymmetric(usize),

    #[error("eigenvalue of m_{0} coincides with the leading eigenvalue; triangular solve is singular")]
    DegenerateEigenvalue(Partition),

    #[error("work budget exceeded: {cost} terms requested, budget is {budget}")]
    BudgetExceeded { cost: u128, budget: u128 },

    #[error("factor marker must have positive degree; the series would not truncate")]
    Divergent,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
