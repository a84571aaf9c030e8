//! The two-particle momentum map induced by the K_ξ(iso(3)) R-matrix on
//! momentum eigenstates, evaluated in complex double precision, and the
//! conservation laws it satisfies.

mod laws;
mod map;
mod momentum;
mod sample;

pub use laws::{
    casimir_x_eigenvalue, conservation_report, letter_eigenvalues, mass_shell, rmatrix_shadow_residuals,
    scaled_residual, sixth_law_contrast, ConservationReport, LetterEigenvalues, SixthLawContrast, LAW_NAMES,
    SHADOW_NAMES,
};
pub use map::{r_parameter, scatter};
pub use momentum::{Branch, Momentum3, ScatterConfig, ScatterError};
pub use sample::{classical_deviation, random_momentum, sample_pairs};

pub use num_complex::Complex64;
