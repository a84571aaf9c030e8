//! Lie bialgebra data for iso(3) and iso(d): structure constants, rank-2
//! and rank-3 tensors, the Schouten bracket, classical r-matrices and
//! their (modified) classical Yang–Baxter equations.

mod dictionary;
mod iso3;
mod isod;
mod lie;
mod linalg;
mod report;
mod tensor;
mod witness;

pub use dictionary::{k_xi_letter, tensor_from_letter_pairs};
pub use iso3::{
    build_casimir_x, build_classical_r, build_iso3, build_omega, build_rhat, check_coboundary, check_cybe, check_mcybe,
    check_twist_remainder, classical_suite, coboundary, cobracket, eps_upper, eta, Iso3Gen,
};
pub use isod::{
    build_casimir_x_d, build_isod, build_omega_d, build_rhat_d, check_casimir_invariance_d, check_coboundary_d,
    check_mcybe_d, cobracket_d, default_n, iso3_to_isod, Isod,
};
pub use lie::{basis_vector, LieAlgebraSC, Vector};
pub use linalg::{inverse, solve_linear, sparse_kernel, LinearSolution, Matrix, SparseRow};
pub use report::IdentityReport;
pub use tensor::{schouten_bracket, Symmetry, WedgeTensor};
pub use witness::{
    check_no_quasitriangular_completion_witness, completion_witness, invariant_symmetric_tensors, CompletionReport,
    CompletionSolution,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error("dimension {0} outside the supported range 2..=6")]
    Dimension(usize),
    #[error("unknown basis label {0}")]
    UnknownLabel(String),
    #[error("singular matrix")]
    Singular,
    #[error("{0}")]
    Invalid(String),
}
