//! Hopf algebras of the q-deformed sl(2) family, the contracted
//! κ-Poincaré-type algebra K_ξ(iso(3)), U_ħ(d(2,1;ε)) and its contraction to
//! a central extension of sl(2|2), with Hopf-axiom checks, antipodes,
//! contraction residuals, the Poincaré basis, invariants and the Y-transform.

mod antipode;
mod checks;
mod contraction;
mod d21e;
mod derive;
mod expr;
mod hopf;
mod invariants;
mod kxi;
mod maxext;
mod poincare;
mod remap;
mod sl2;

pub use antipode::{antipode_axiom_residual, antipode_on_monomial, derive_antipode};
pub use checks::{
    check_antipode, check_coassociativity, check_confluence, check_coproduct_homomorphism, check_counit,
    check_hopf_map, hopf_suite, CheckReport, Residuals,
};
pub use contraction::{
    build_sl2_pair, contraction_residual, ratio_test, ContractionMap, ContractionResidual, RelationId,
};
pub use d21e::{build_uq_d21e, build_uq_d21e_logged, serre_elements, verify_nonsimple_coproduct_tail};
pub use derive::{derive_rules, Definitional, DeriveLog};
pub use expr::{
    cosh, q_bracket, q_minus_qinv, qpow, qs, sinh_half_squared_over_hbar2, sinh_over_2hbar, sinh_ratio_series,
};
pub use hopf::HopfAlgebraDef;
pub use invariants::{
    check_centrality, invariant_x, invariant_xtilde, y_element, y_leading_term, y_series_coefficients,
    y_transform_check,
};
pub use kxi::build_k_xi_iso3;
pub use maxext::{build_max_ext_sl22, central_coproduct_from_definition, h_c};
pub use poincare::{
    ad_t, basis_change_to_poincare, build_poincare, check_poincare_basis, kxi_images_by_ad_t, kxi_images_closed, log_t,
    poincare_images, POINCARE_LETTERS,
};
pub use remap::{remap_element, remap_tensor, substitute, substitute_tensor};
pub use sl2::{build_tensor_hopf, build_uq_sl2, build_uq_sl2_named};

pub use algebra_core;
pub use scalar_series;

use algebra_core::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("contraction parameter must be nonzero")]
    DegenerateEpsilon,
    #[error("no antipode: {0}")]
    NoSolution(String),
    #[error("{0}")]
    Invalid(String),
}

impl From<scalar_series::SeriesError> for HopfError {
    fn from(e: scalar_series::SeriesError) -> Self {
        HopfError::Algebra(e.into())
    }
}
