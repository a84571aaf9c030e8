//! Conservation laws of the momentum map, and the R-matrix conjugation
//! identities evaluated on momentum eigenvalues.

use num_complex::Complex64;

use crate::map::{log_r, phase, scatter};
use crate::momentum::{Momentum3, ScatterConfig, ScatterError};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// |a − b| / max(1, |a|, |b|).
pub fn scaled_residual(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}

/// p₊p₋ − κ² sin²(p₀/2κ).
pub fn mass_shell(p: &Momentum3, cfg: &ScatterConfig) -> Complex64 {
    let s = (p.p0 / (2.0 * cfg.kappa)).sin();
    p.p_plus * p.p_minus - cfg.kappa * cfg.kappa * s * s
}

pub const LAW_NAMES: [&str; 6] =
    ["total_energy", "dressed_plus", "dressed_minus", "mass_shell_p", "mass_shell_q", "sixth_law"];

#[derive(Clone, Debug, PartialEq)]
pub struct ConservationReport {
    /// Scaled residuals in the order of [`LAW_NAMES`].
    pub residuals: [f64; 6],
    pub tolerance: f64,
    pub passed: bool,
}

impl ConservationReport {
    pub fn worst(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn named(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        LAW_NAMES.into_iter().zip(self.residuals)
    }
}

/// Outgoing quantities use the flipped coproduct, incoming ones the coproduct:
/// e^{−iq′₀/2κ}p′_± + e^{ip′₀/2κ}q′_± = e^{iq₀/2κ}p_± + e^{−ip₀/2κ}q_±, and
/// e^{i(q′₀−p′₀)/2κ}p′₊q′₋ = e^{i(p₀−q₀)/2κ}p₊q₋.
pub fn conservation_report(
    p: &Momentum3,
    q: &Momentum3,
    p_out: &Momentum3,
    q_out: &Momentum3,
    cfg: &ScatterConfig,
) -> ConservationReport {
    let out_sum = |a: Complex64, b: Complex64| phase(-q_out.p0 / 2.0, cfg) * a + phase(p_out.p0 / 2.0, cfg) * b;
    let in_sum = |a: Complex64, b: Complex64| phase(q.p0 / 2.0, cfg) * a + phase(-p.p0 / 2.0, cfg) * b;
    let residuals = [
        scaled_residual(p_out.p0 + q_out.p0, p.p0 + q.p0),
        scaled_residual(out_sum(p_out.p_plus, q_out.p_plus), in_sum(p.p_plus, q.p_plus)),
        scaled_residual(out_sum(p_out.p_minus, q_out.p_minus), in_sum(p.p_minus, q.p_minus)),
        scaled_residual(mass_shell(p_out, cfg), mass_shell(p, cfg)),
        scaled_residual(mass_shell(q_out, cfg), mass_shell(q, cfg)),
        scaled_residual(
            phase((q_out.p0 - p_out.p0) / 2.0, cfg) * p_out.p_plus * q_out.p_minus,
            phase((p.p0 - q.p0) / 2.0, cfg) * p.p_plus * q.p_minus,
        ),
    ];
    let passed = residuals.iter().all(|r| *r < cfg.tolerance);
    ConservationReport { residuals, tolerance: cfg.tolerance, passed }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SixthLawContrast {
    /// e^{i(q′₀−p′₀)/2κ}p′₊q′₋ against e^{i(p₀−q₀)/2κ}p₊q₋.
    pub sixth_residual: f64,
    /// p′₀ − q′₀ against p₀ − q₀.
    pub energy_residual: f64,
    pub sixth_holds: bool,
    pub energy_holds: bool,
}

/// Scatters and compares the sixth law with separate energy conservation.
pub fn sixth_law_contrast(p: &Momentum3, q: &Momentum3, cfg: &ScatterConfig) -> Result<SixthLawContrast, ScatterError> {
    let (p2, q2) = scatter(p, q, cfg)?;
    let sixth_residual = conservation_report(p, q, &p2, &q2, cfg).residuals[5];
    let energy_residual = scaled_residual(p2.p0 - q2.p0, p.p0 - q.p0);
    Ok(SixthLawContrast {
        sixth_residual,
        energy_residual,
        sixth_holds: sixth_residual < cfg.tolerance,
        energy_holds: energy_residual < cfg.tolerance,
    })
}

/// Eigenvalues of E_C = 2q^{−iP₀}P₊, F_C = 2q^{iP₀}P₋, H_C = 2iP₀ at ħ = 1/2κ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LetterEigenvalues {
    pub e_c: Complex64,
    pub f_c: Complex64,
    pub h_c: Complex64,
}

pub fn letter_eigenvalues(p: &Momentum3, cfg: &ScatterConfig) -> LetterEigenvalues {
    LetterEigenvalues {
        e_c: 2.0 * phase(-p.p0 / 2.0, cfg) * p.p_plus,
        f_c: 2.0 * phase(p.p0 / 2.0, cfg) * p.p_minus,
        h_c: 2.0 * I * p.p0,
    }
}

/// X = E_CF_C + (q^{H_C/2} − q^{−H_C/2})²/4ħ² on a momentum eigenstate.
pub fn casimir_x_eigenvalue(p: &Momentum3, cfg: &ScatterConfig) -> Complex64 {
    let hbar = 0.5 / cfg.kappa;
    let l = letter_eigenvalues(p, cfg);
    let s = (hbar * l.h_c / 2.0).exp() - (-hbar * l.h_c / 2.0).exp();
    l.e_c * l.f_c + s * s / (4.0 * hbar * hbar)
}

pub const SHADOW_NAMES: [&str; 7] =
    ["e_c_left", "f_c_right", "h_c_left", "h_c_right", "f_c_left", "e_c_right", "e_c_f_c"];

/// The R-matrix conjugation identities with every letter replaced by its
/// eigenvalue: outgoing values on the left, incoming on the right, and
/// W = q^{H_C}E_C ⊗ q^{−H_C}F_C, so that 1 − 4ħ²W = r.
pub fn rmatrix_shadow_residuals(
    p: &Momentum3,
    q: &Momentum3,
    p_out: &Momentum3,
    q_out: &Momentum3,
    cfg: &ScatterConfig,
) -> Result<[f64; 7], ScatterError> {
    let hbar = 0.5 / cfg.kappa;
    let (a, b) = (letter_eigenvalues(p, cfg), letter_eigenvalues(q, cfg));
    let (a2, b2) = (letter_eigenvalues(p_out, cfg), letter_eigenvalues(q_out, cfg));
    let qp = |x: Complex64| (hbar * x).exp();
    let w = qp(a.h_c) * a.e_c * qp(-b.h_c) * b.f_c;
    let den = 1.0 - 4.0 * hbar * hbar * w;
    let log = log_r(den, cfg)?;
    Ok([
        scaled_residual(a2.e_c, a.e_c * qp(-b.h_c)),
        scaled_residual(b2.f_c, qp(a.h_c) * b.f_c),
        scaled_residual(a2.h_c, a.h_c - log / hbar),
        scaled_residual(b2.h_c, b.h_c + log / hbar),
        scaled_residual(a2.f_c, a.f_c * qp(b.h_c) + b.f_c - qp(2.0 * a.h_c) * b.f_c / den),
        scaled_residual(b2.e_c, qp(-a.h_c) * b.e_c + a.e_c - a.e_c * qp(-2.0 * b.h_c) / den),
        scaled_residual(a2.e_c * b2.f_c, w),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    fn sample() -> (Momentum3, Momentum3) {
        (
            Momentum3::new(z(0.3, -0.2), z(0.8, 0.1), z(-0.5, 0.4)).unwrap(),
            Momentum3::new(z(-0.6, 0.1), z(0.2, -0.7), z(0.9, 0.3)).unwrap(),
        )
    }

    #[test]
    fn mass_shell_limits() {
        let cfg = ScatterConfig::real(1e4).unwrap();
        assert_eq!(mass_shell(&Momentum3::zero(), &cfg), z(0.0, 0.0));
        let (p, _) = sample();
        let classical = p.p_plus * p.p_minus - p.p0 * p.p0 / 4.0;
        assert!((mass_shell(&p, &cfg) - classical).norm() < 1e-8);
    }

    #[test]
    fn casimir_is_four_times_the_mass_shell() {
        let (p, _) = sample();
        for k in [z(1.0, 0.0), z(2.0, 0.0), z(0.0, 10.0)] {
            let cfg = ScatterConfig::new(k).unwrap();
            assert!(scaled_residual(casimir_x_eigenvalue(&p, &cfg), 4.0 * mass_shell(&p, &cfg)) < 1e-14);
        }
    }

    #[test]
    fn conservation_and_shadow_at_kappa_two() {
        let cfg = ScatterConfig::real(2.0).unwrap();
        let (p, q) = sample();
        let (p2, q2) = scatter(&p, &q, &cfg).unwrap();
        let rep = conservation_report(&p, &q, &p2, &q2, &cfg);
        assert!(rep.passed, "{rep:?}");
        let shadow = rmatrix_shadow_residuals(&p, &q, &p2, &q2, &cfg).unwrap();
        assert!(shadow.iter().all(|r| *r < 1e-13), "{shadow:?}");
    }

    #[test]
    fn perturbed_energy_is_detected() {
        let cfg = ScatterConfig::real(2.0).unwrap();
        let (p, q) = sample();
        let (mut p2, q2) = scatter(&p, &q, &cfg).unwrap();
        p2.p0 += z(1e-6, 0.0);
        let rep = conservation_report(&p, &q, &p2, &q2, &cfg);
        assert!(!rep.passed);
        assert!((rep.residuals[0] - 1e-6).abs() < 1e-9);
    }

    #[test]
    fn energy_law_fails_where_the_sixth_law_holds() {
        let cfg = ScatterConfig::real(2.0).unwrap();
        let (p, q) = sample();
        let c = sixth_law_contrast(&p, &q, &cfg).unwrap();
        assert!(c.sixth_holds && !c.energy_holds);
        assert!(c.energy_residual > 1e-3);
        let c0 = sixth_law_contrast(&p, &Momentum3::zero(), &cfg).unwrap();
        assert!(c0.sixth_holds && c0.energy_holds);
    }
}
