//! iso(d) with rotations L̃_{μν} and translations P_μ, the kappa-Poincaré
//! classical r-matrix r̂_d and its modified classical Yang–Baxter equation.

use scalar_series::ExactScalar;

#[cfg(doc)]
use crate::iso3::build_iso3;
use crate::iso3::{eps_upper, eta};
use crate::lie::{axpy, basis_vector, LieAlgebraSC, Vector};
use crate::linalg::Matrix;
use crate::report::IdentityReport;
use crate::tensor::{schouten_bracket, WedgeTensor};
use crate::ClassicalError;

/// iso(d) together with its index bookkeeping. Rotations `L̃_{μν}`, μ < ν,
/// come first in lexicographic order, then `P_0 … P_{d−1}`.
#[derive(Clone, Debug)]
pub struct Isod {
    pub d: usize,
    pub alg: LieAlgebraSC,
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::int(n)
}

fn pair_index(d: usize, mu: usize, nu: usize) -> usize {
    debug_assert!(mu < nu && nu < d);
    (0..mu).map(|k| d - 1 - k).sum::<usize>() + (nu - mu - 1)
}

impl Isod {
    pub fn dim(&self) -> usize {
        self.d * (self.d - 1) / 2 + self.d
    }

    /// L̃_{μν}, antisymmetric in the indices.
    pub fn l_lower(&self, mu: usize, nu: usize) -> Vector {
        let n = self.dim();
        match mu.cmp(&nu) {
            std::cmp::Ordering::Equal => vec![ExactScalar::zero(); n],
            std::cmp::Ordering::Less => basis_vector(n, pair_index(self.d, mu, nu)),
            std::cmp::Ordering::Greater => basis_vector(n, pair_index(self.d, nu, mu)).iter().map(|c| -c).collect(),
        }
    }

    /// L̃^{μν} = η^{μμ}η^{νν}L̃_{μν}.
    pub fn l_upper(&self, mu: usize, nu: usize) -> Vector {
        let s = int(eta(mu) * eta(nu));
        self.l_lower(mu, nu).iter().map(|c| c * &s).collect()
    }

    pub fn p_lower(&self, mu: usize) -> Vector {
        basis_vector(self.dim(), self.d * (self.d - 1) / 2 + mu)
    }

    pub fn p_upper(&self, mu: usize) -> Vector {
        let s = int(eta(mu));
        self.p_lower(mu).iter().map(|c| c * &s).collect()
    }

    /// `n^μ` from lower components.
    pub fn raise(&self, n: &[ExactScalar]) -> Vec<ExactScalar> {
        n.iter().enumerate().map(|(mu, c)| c * &int(eta(mu))).collect()
    }

    pub fn n_squared(&self, n: &[ExactScalar]) -> ExactScalar {
        n.iter().zip(self.raise(n)).fold(ExactScalar::zero(), |acc, (a, b)| acc + a * &b)
    }
}

fn check_d(d: usize) -> Result<(), ClassicalError> {
    if (2..=6).contains(&d) {
        Ok(())
    } else {
        Err(ClassicalError::Dimension(d))
    }
}

fn check_n(d: usize, n: &[ExactScalar]) -> Result<(), ClassicalError> {
    if n.len() == d {
        Ok(())
    } else {
        Err(ClassicalError::Invalid(format!("n has {} components, expected {d}", n.len())))
    }
}

/// [L̃_{μν}, P_ρ] = η_{νρ}P_μ − η_{μρ}P_ν,
/// [L̃_{μν}, L̃_{ρσ}] = η_{νρ}L̃_{μσ} − η_{μρ}L̃_{νσ} − η_{νσ}L̃_{μρ} + η_{μσ}L̃_{νρ}.
/// For d = 3 this is the algebra of [`build_iso3`] under [`iso3_to_isod`].
pub fn build_isod(d: usize) -> Result<Isod, ClassicalError> {
    check_d(d)?;
    let mut labels = Vec::new();
    for mu in 0..d {
        for nu in mu + 1..d {
            labels.push(format!("L{mu}{nu}"));
        }
    }
    labels.extend((0..d).map(|mu| format!("P{mu}")));
    let shell = Isod { d, alg: LieAlgebraSC::from_brackets(Vec::new(), |_, _| Vec::new()) };
    let dim = shell.dim();
    let nrot = d * (d - 1) / 2;
    let mut rot = vec![(0, 0); nrot];
    for mu in 0..d {
        for nu in mu + 1..d {
            rot[pair_index(d, mu, nu)] = (mu, nu);
        }
    }
    let g = |a: usize, b: usize| -> i64 {
        if a == b {
            eta(a)
        } else {
            0
        }
    };
    let bracket = |a: usize, b: usize| -> Vector {
        let mut out = vec![ExactScalar::zero(); dim];
        match (a < nrot, b < nrot) {
            (false, false) => {}
            (true, false) => {
                let (mu, nu) = rot[a];
                let rho = b - nrot;
                axpy(&mut out, &int(g(nu, rho)), &shell.p_lower(mu));
                axpy(&mut out, &int(-g(mu, rho)), &shell.p_lower(nu));
            }
            (false, true) => {
                let (mu, nu) = rot[b];
                let rho = a - nrot;
                axpy(&mut out, &int(-g(nu, rho)), &shell.p_lower(mu));
                axpy(&mut out, &int(g(mu, rho)), &shell.p_lower(nu));
            }
            (true, true) => {
                let ((mu, nu), (rho, sig)) = (rot[a], rot[b]);
                axpy(&mut out, &int(g(nu, rho)), &shell.l_lower(mu, sig));
                axpy(&mut out, &int(-g(mu, rho)), &shell.l_lower(nu, sig));
                axpy(&mut out, &int(-g(nu, sig)), &shell.l_lower(mu, rho));
                axpy(&mut out, &int(g(mu, sig)), &shell.l_lower(nu, rho));
            }
        }
        out
    };
    Ok(Isod { d, alg: LieAlgebraSC::from_brackets(labels, bracket) })
}

/// n_μ = (−i, 0, …, 0).
pub fn default_n(d: usize) -> Vec<ExactScalar> {
    let mut n = vec![ExactScalar::zero(); d];
    n[0] = -ExactScalar::i();
    n
}

/// r̂_d = n_μ L̃^{μν} ∧ P_ν. This orientation makes the coboundary of r̂_d
/// reproduce [`cobracket_d`] and, for d = 3 and n = (−i, 0, 0), gives the
/// 3D r̂ at ξ = 0.
pub fn build_rhat_d(d: usize, n: &[ExactScalar]) -> Result<WedgeTensor, ClassicalError> {
    let g = build_isod(d)?;
    check_n(d, n)?;
    let mut out = WedgeTensor::zero(2, g.dim());
    for mu in 0..d {
        for nu in 0..d {
            out = out + WedgeTensor::wedge(&g.l_upper(mu, nu), &g.p_lower(nu)).scale(&n[mu]);
        }
    }
    Ok(out)
}

/// ω_d = −½n² P_μ ∧ P_ν ∧ L̃^{μν}.
pub fn build_omega_d(d: usize, n: &[ExactScalar]) -> Result<WedgeTensor, ClassicalError> {
    let g = build_isod(d)?;
    check_n(d, n)?;
    let k = g.n_squared(n).scale(&scalar_series::q(-1, 2));
    let mut out = WedgeTensor::zero(3, g.dim());
    for mu in 0..d {
        for nu in 0..d {
            out = out + WedgeTensor::wedge3(&g.p_lower(mu), &g.p_lower(nu), &g.l_upper(mu, nu));
        }
    }
    Ok(out.scale(&k))
}

/// x_d = P_μ ⊙ P^μ.
pub fn build_casimir_x_d(d: usize) -> Result<WedgeTensor, ClassicalError> {
    let g = build_isod(d)?;
    Ok((0..d).fold(WedgeTensor::zero(2, g.dim()), |acc, mu| acc + WedgeTensor::odot(&g.p_lower(mu), &g.p_upper(mu))))
}

/// Tabulated cobracket on basis element `a`:
/// δ(P_μ) = n^ν P_μ∧P_ν, δ(L̃_{μν}) = −n_μ L̃_{νρ}∧P^ρ + n_ν L̃_{μρ}∧P^ρ.
pub fn cobracket_d(d: usize, n: &[ExactScalar], a: usize) -> Result<WedgeTensor, ClassicalError> {
    let g = build_isod(d)?;
    check_n(d, n)?;
    let nrot = d * (d - 1) / 2;
    if a >= g.dim() {
        return Err(ClassicalError::Invalid(format!("basis index {a} out of range")));
    }
    let nu_up = g.raise(n);
    let mut out = WedgeTensor::zero(2, g.dim());
    if a >= nrot {
        let mu = a - nrot;
        for nu in 0..d {
            out = out + WedgeTensor::wedge(&g.p_lower(mu), &g.p_lower(nu)).scale(&nu_up[nu]);
        }
        return Ok(out);
    }
    let (mu, nu) = (0..d).flat_map(|m| (m + 1..d).map(move |k| (m, k))).nth(a).expect("rotation index");
    for rho in 0..d {
        out = out - WedgeTensor::wedge(&g.l_lower(nu, rho), &g.p_upper(rho)).scale(&n[mu])
            + WedgeTensor::wedge(&g.l_lower(mu, rho), &g.p_upper(rho)).scale(&n[nu]);
    }
    Ok(out)
}

/// [[r̂_d, r̂_d]] = ω_d.
pub fn check_mcybe_d(d: usize, n: &[ExactScalar]) -> Result<IdentityReport, ClassicalError> {
    let g = build_isod(d)?;
    let r = build_rhat_d(d, n)?;
    let res = schouten_bracket(&r, &r, &g.alg) - build_omega_d(d, n)?;
    Ok(IdentityReport::from_residual(&format!("mcybe_d{d}"), &res))
}

/// δ(a) = [a⊗1 + 1⊗a, r̂_d] on every basis element.
pub fn check_coboundary_d(d: usize, n: &[ExactScalar]) -> Result<IdentityReport, ClassicalError> {
    let g = build_isod(d)?;
    let r = build_rhat_d(d, n)?;
    let parts = (0..g.dim())
        .map(|a| {
            let lhs = r.ad_action(&g.alg, &basis_vector(g.dim(), a));
            Ok(IdentityReport::from_residual(&format!("delta({})", g.alg.label(a)), &(lhs - cobracket_d(d, n, a)?)))
        })
        .collect::<Result<Vec<_>, ClassicalError>>()?;
    Ok(IdentityReport::merge(&format!("coboundary_d{d}"), &parts))
}

/// x_d and ω_d are ad-invariant.
pub fn check_casimir_invariance_d(d: usize, n: &[ExactScalar]) -> Result<IdentityReport, ClassicalError> {
    let g = build_isod(d)?;
    let x = build_casimir_x_d(d)?.check_invariant(&g.alg, "casimir_d");
    let w = build_omega_d(d, n)?.check_invariant(&g.alg, "omega_d");
    Ok(IdentityReport::merge(&format!("invariants_d{d}"), &[x, w]))
}

/// Basis change from the Cartesian iso(3) of [`build_iso3`] into iso(d=3)
/// via L̃^{μν} = ε^{μνρ}L_ρ: row `i` expresses iso(3) basis element `i`
/// in the iso(d=3) basis. L_ρ = −½ε_{μνρ}L̃^{μν} since ε_{μνσ}ε^{μνρ} = −2δ_σ^ρ.
pub fn iso3_to_isod() -> Matrix {
    let g = build_isod(3).expect("d = 3");
    let mut rows = Vec::new();
    for rho in 0..3 {
        let mut row = vec![ExactScalar::zero(); g.dim()];
        for mu in 0..3 {
            for nu in 0..3 {
                // ε_{μνρ} = η_{μμ}η_{νν}η_{ρρ}ε^{μνρ}
                let e = eta(mu) * eta(nu) * eta(rho) * eps_upper(mu, nu, rho);
                if e != 0 {
                    axpy(&mut row, &ExactScalar::ratio(-e, 2), &g.l_upper(mu, nu));
                }
            }
        }
        rows.push(row);
    }
    for mu in 0..3 {
        rows.push(g.p_lower(mu));
    }
    rows
}
