//! Exact scalars over ℚ(i), truncated power series in ħ, and the
//! q-special functions used to build universal R-matrices.

mod qfunc;
mod scalar;
mod series;

pub use qfunc::{
    dilog_series, log1m_over_x_series, q_factorial, q_number, qdilog_coefficients, qdilog_leading_terms,
    qexp_coefficients,
};
pub use scalar::{parse_rational, q, qi, ExactScalar, Q};
pub use series::HbarSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("series has nonzero constant term")]
    NonzeroConstantTerm,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is not divisible by hbar^{0}")]
    NotDivisibleByHbar(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
