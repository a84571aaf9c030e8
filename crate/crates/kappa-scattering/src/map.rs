use std::f64::consts::PI;

use num_complex::Complex64;

use crate::momentum::{Branch, Momentum3, ScatterConfig, ScatterError};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `e^{i x / κ}`.
pub(crate) fn phase(x: Complex64, cfg: &ScatterConfig) -> Complex64 {
    (I * x / cfg.kappa).exp()
}

/// r = 1 − (4/κ²) e^{i(p₀−q₀)/2κ} p₊ q₋.
pub fn r_parameter(p: &Momentum3, q: &Momentum3, cfg: &ScatterConfig) -> Complex64 {
    c(1.0) - c(4.0) / (cfg.kappa * cfg.kappa) * phase((p.p0 - q.p0) / 2.0, cfg) * p.p_plus * q.p_minus
}

pub(crate) fn log_r(r: Complex64, cfg: &ScatterConfig) -> Result<Complex64, ScatterError> {
    if r.norm() <= cfg.singular_radius {
        return Err(ScatterError::SingularKinematics { r });
    }
    if r.re < 0.0 && r.im.abs() <= cfg.tolerance * r.norm() {
        return Err(ScatterError::BranchAmbiguity { r });
    }
    let l = r.ln();
    Ok(match cfg.branch {
        Branch::Principal => l,
        Branch::Shifted => l + Complex64::new(0.0, 2.0 * PI),
    })
}

/// Outgoing momenta `(p′, q′)`:
/// p′₊ = e^{−iq₀/κ}r^{−1/2}p₊, q′₋ = e^{ip₀/κ}r^{−1/2}q₋,
/// p′₀ = p₀ + iκ log r, q′₀ = q₀ − iκ log r,
/// p′₋ = e^{iq₀/κ}r^{1/2}p₋ + e^{i(q₀−p₀)/2κ}r^{1/2}q₋ − e^{i(3p₀+q₀)/2κ}r^{−1/2}q₋,
/// q′₊ = e^{−ip₀/κ}r^{1/2}q₊ + e^{i(q₀−p₀)/2κ}r^{1/2}p₊ − e^{−i(p₀+3q₀)/2κ}r^{−1/2}p₊.
pub fn scatter(p: &Momentum3, q: &Momentum3, cfg: &ScatterConfig) -> Result<(Momentum3, Momentum3), ScatterError> {
    p.checked()?;
    q.checked()?;
    let r = r_parameter(p, q, cfg);
    let l = log_r(r, cfg)?;
    let sqrt_r = (l / 2.0).exp();
    let inv_sqrt_r = (-l / 2.0).exp();
    let k = cfg.kappa;
    let (p0, q0) = (p.p0, q.p0);
    let p_out = Momentum3 {
        p0: p0 + I * k * l,
        p_plus: phase(-q0, cfg) * inv_sqrt_r * p.p_plus,
        p_minus: phase(q0, cfg) * sqrt_r * p.p_minus + phase((q0 - p0) / 2.0, cfg) * sqrt_r * q.p_minus
            - phase((3.0 * p0 + q0) / 2.0, cfg) * inv_sqrt_r * q.p_minus,
    };
    let q_out = Momentum3 {
        p0: q0 - I * k * l,
        p_plus: phase(-p0, cfg) * sqrt_r * q.p_plus + phase((q0 - p0) / 2.0, cfg) * sqrt_r * p.p_plus
            - phase(-(p0 + 3.0 * q0) / 2.0, cfg) * inv_sqrt_r * p.p_plus,
        p_minus: phase(p0, cfg) * inv_sqrt_r * q.p_minus,
    };
    Ok((p_out.checked()?, q_out.checked()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: [(f64, f64); 3]) -> Momentum3 {
        let z = |(x, y): (f64, f64)| Complex64::new(x, y);
        Momentum3::new(z(a[0]), z(a[1]), z(a[2])).unwrap()
    }

    #[test]
    fn zero_spectator_is_the_identity() {
        let cfg = ScatterConfig::real(2.0).unwrap();
        let p = m([(0.3, -0.1), (0.7, 0.2), (-0.4, 0.5)]);
        let (p2, q2) = scatter(&p, &Momentum3::zero(), &cfg).unwrap();
        assert_eq!(r_parameter(&p, &Momentum3::zero(), &cfg), c(1.0));
        assert!(p2.max_dist(&p) < 1e-15);
        assert!(q2.max_dist(&Momentum3::zero()) < 1e-15);
    }

    #[test]
    fn r_by_hand() {
        // κ = 1, p₀ = q₀, p₊q₋ = 1/8: r = 1 − 4/8 = 1/2
        let cfg = ScatterConfig::real(1.0).unwrap();
        let p = m([(0.2, 0.0), (0.5, 0.0), (0.0, 0.0)]);
        let q = m([(0.2, 0.0), (0.0, 0.0), (0.25, 0.0)]);
        assert!((r_parameter(&p, &q, &cfg) - c(0.5)).norm() < 1e-15);
        let (p2, q2) = scatter(&p, &q, &cfg).unwrap();
        // p′₀ = p₀ + i log ½
        assert!((p2.p0 - Complex64::new(0.2, 0.5f64.ln())).norm() < 1e-15);
        assert!((p2.p0 + q2.p0 - c(0.4)).norm() < 1e-15);
    }

    #[test]
    fn singular_and_cut_inputs_are_reported() {
        let cfg = ScatterConfig::real(2.0).unwrap();
        // p₊q₋ = κ²/4 with equal energies gives r = 0
        let p = m([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
        let q = m([(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(scatter(&p, &q, &cfg), Err(ScatterError::SingularKinematics { .. })));
        let q = m([(0.0, 0.0), (0.0, 0.0), (2.0, 0.0)]);
        assert!(matches!(scatter(&p, &q, &cfg), Err(ScatterError::BranchAmbiguity { .. })));
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let nan = Complex64::new(f64::NAN, 0.0);
        assert_eq!(Momentum3::new(nan, c(0.0), c(0.0)), Err(ScatterError::NonFinite("p0")));
        assert_eq!(ScatterConfig::real(0.0), Err(ScatterError::BadKappa));
    }
}
