//! Universal R-matrices of the sl(2), K_ξ(iso(3)), d(2,1;ε) and contracted
//! sl(2|2) algebras as ħ-truncated rank-2 tensors, and the identities they
//! are checked against.

mod build;
mod checks;
mod classical;
mod report;
mod series;

pub use build::{
    rmat_d21e, rmat_k_xi, rmat_max_ext, rmat_product_prelimit, rmat_sl2_tensor, rmat_uq_sl2, Pairing, PrelimitRMatrix,
};
pub use checks::{
    check_hexagon, check_inverse, check_momentum_conjugation, check_quasi_cocommutativity, check_ybe,
    momentum_conjugation_residuals, prelimit_ratio_test, PrelimitResidual,
};
pub use classical::{classical_limit_extract, FirstOrderTensor};
pub use report::RMatrixReport;
pub use series::{central_series, neumann_inverse, RMatrixSeries};

use hopf_structures::HopfError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RMatrixError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("first-order term has a monomial of bidegree ({0}, {1})")]
    NonlinearFirstOrder(u32, u32),
    #[error("{0}")]
    Invalid(String),
}

impl From<algebra_core::AlgebraError> for RMatrixError {
    fn from(e: algebra_core::AlgebraError) -> Self {
        RMatrixError::Hopf(e.into())
    }
}
