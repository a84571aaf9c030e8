//! iso(3) in the Cartesian basis L_μ, P_μ and the classical r-matrix of
//! K_ξ(iso(3)) with its symmetric and antisymmetric parts.

use scalar_series::{ExactScalar, Q};

use crate::lie::{basis_vector, sum, LieAlgebraSC, Vector};
use crate::report::IdentityReport;
use crate::tensor::{schouten_bracket, Symmetry, WedgeTensor};

/// ε^{012}. With this value the brackets agree with the ħ → 0 limit of
/// the K_ξ relations in the P_±, L_± basis, e.g. [L₀, P_±] = ∓iP_±.
const EPS_012: i64 = -1;

pub fn eta(mu: usize) -> i64 {
    if mu == 0 {
        -1
    } else {
        1
    }
}

/// ε^{μνρ}.
pub fn eps_upper(mu: usize, nu: usize, rho: usize) -> i64 {
    let sign = match (mu, nu, rho) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    };
    sign * EPS_012
}

/// ε_{μν}^ρ.
fn eps_mixed(mu: usize, nu: usize, rho: usize) -> i64 {
    eta(mu) * eta(nu) * eps_upper(mu, nu, rho)
}

const DIM: usize = 6;

fn l(mu: usize) -> Vector {
    basis_vector(DIM, mu)
}

fn p(mu: usize) -> Vector {
    basis_vector(DIM, 3 + mu)
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::int(n)
}

/// Basis `L₀, L₁, L₂, P₀, P₁, P₂` with [P,P] = 0, [L_μ,L_ν] = ε_{μν}^ρ L_ρ,
/// [L_μ,P_ν] = ε_{μν}^ρ P_ρ.
pub fn build_iso3() -> LieAlgebraSC {
    let labels = ["L0", "L1", "L2", "P0", "P1", "P2"].map(String::from).to_vec();
    LieAlgebraSC::from_brackets(labels, |a, b| {
        let target: fn(usize) -> Vector = match (a < 3, b < 3) {
            (true, true) => l,
            (false, false) => return vec![ExactScalar::zero(); DIM],
            _ => p,
        };
        let terms: Vec<(ExactScalar, Vector)> =
            (0..3).map(|rho| (int(eps_mixed(a % 3, b % 3, rho)), target(rho))).collect();
        sum(&terms.iter().map(|(c, x)| (c.clone(), x)).collect::<Vec<_>>())
    })
}

/// Generators of the light-cone basis, P_± = ½(P₁ ± iP₂), L_± = ½(L₁ ± iL₂).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Iso3Gen {
    P0,
    PPlus,
    PMinus,
    L0,
    LPlus,
    LMinus,
}

impl Iso3Gen {
    pub const ALL: [Iso3Gen; 6] =
        [Iso3Gen::P0, Iso3Gen::PPlus, Iso3Gen::PMinus, Iso3Gen::L0, Iso3Gen::LPlus, Iso3Gen::LMinus];

    pub fn label(self) -> &'static str {
        match self {
            Iso3Gen::P0 => "P_0",
            Iso3Gen::PPlus => "P_plus",
            Iso3Gen::PMinus => "P_minus",
            Iso3Gen::L0 => "L_0",
            Iso3Gen::LPlus => "L_plus",
            Iso3Gen::LMinus => "L_minus",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.label() == s)
    }

    pub fn vector(self) -> Vector {
        let half = ExactScalar::ratio(1, 2);
        let ihalf = ExactScalar::new(scalar_series::qi(0), scalar_series::q(1, 2));
        let pm =
            |v: fn(usize) -> Vector, s: i64| sum(&[(half.clone(), &v(1)), (ihalf.scale(&scalar_series::qi(s)), &v(2))]);
        match self {
            Iso3Gen::P0 => p(0),
            Iso3Gen::L0 => l(0),
            Iso3Gen::PPlus => pm(p, 1),
            Iso3Gen::PMinus => pm(p, -1),
            Iso3Gen::LPlus => pm(l, 1),
            Iso3Gen::LMinus => pm(l, -1),
        }
    }
}

fn v(g: Iso3Gen) -> Vector {
    g.vector()
}

fn xi_s(xi: &Q) -> ExactScalar {
    ExactScalar::real(xi.clone())
}

/// r̂ = 2(P₊∧L₋ − P₋∧L₊ + ξP₊∧P₋).
pub fn build_rhat(xi: &Q) -> WedgeTensor {
    use Iso3Gen::*;
    let t = WedgeTensor::wedge(&v(PPlus), &v(LMinus)) - WedgeTensor::wedge(&v(PMinus), &v(LPlus))
        + WedgeTensor::wedge(&v(PPlus), &v(PMinus)).scale(&xi_s(xi));
    t.scale(&int(2))
}

/// x = P_μ⊙L^μ + ½ξ P_μ⊙P^μ.
pub fn build_casimir_x(xi: &Q) -> WedgeTensor {
    let half_xi = xi_s(xi).scale(&scalar_series::q(1, 2));
    (0..3).fold(WedgeTensor::zero(2, DIM), |acc, mu| {
        let e = int(eta(mu));
        acc + WedgeTensor::odot(&p(mu), &l(mu)).scale(&e) + WedgeTensor::odot(&p(mu), &p(mu)).scale(&(&e * &half_xi))
    })
}

/// r = r̂ + x.
pub fn build_classical_r(xi: &Q) -> WedgeTensor {
    build_rhat(xi) + build_casimir_x(xi)
}

/// ω = −½ε^{μνρ}(P_μ∧P_ν∧L_ρ + ⅔ξ P_μ∧P_ν∧P_ρ).
pub fn build_omega(xi: &Q) -> WedgeTensor {
    let two_thirds_xi = xi_s(xi).scale(&scalar_series::q(2, 3));
    let mut out = WedgeTensor::zero(3, DIM);
    for mu in 0..3 {
        for nu in 0..3 {
            for rho in 0..3 {
                let e = eps_upper(mu, nu, rho);
                if e == 0 {
                    continue;
                }
                let t = WedgeTensor::wedge3(&p(mu), &p(nu), &l(rho))
                    + WedgeTensor::wedge3(&p(mu), &p(nu), &p(rho)).scale(&two_thirds_xi);
                out = out + t.scale(&ExactScalar::ratio(-e, 2));
            }
        }
    }
    out
}

/// Tabulated cobracket: δ(P₀) = δ(L₀) = 0, δ(P_±) = iP_±∧P₀,
/// δ(L_±) = iL_±∧P₀ + iP_±∧(L₀ + ξP₀).
pub fn cobracket(a: Iso3Gen, xi: &Q) -> WedgeTensor {
    use Iso3Gen::*;
    let i = ExactScalar::i();
    let l0_xi = sum(&[(int(1), &v(L0)), (xi_s(xi), &v(P0))]);
    match a {
        P0 | L0 => WedgeTensor::zero(2, DIM),
        PPlus | PMinus => WedgeTensor::wedge(&v(a), &v(P0)).scale(&i),
        LPlus | LMinus => {
            let p = if a == LPlus { PPlus } else { PMinus };
            (WedgeTensor::wedge(&v(a), &v(P0)) + WedgeTensor::wedge(&v(p), &l0_xi)).scale(&i)
        }
    }
}

/// [a⊗1 + 1⊗a, r].
pub fn coboundary(r: &WedgeTensor, a: Iso3Gen) -> WedgeTensor {
    r.ad_action(&build_iso3(), &a.vector())
}

/// The coboundary of `r` against the tabulated cobracket on all six generators.
pub fn check_coboundary(r: &WedgeTensor, xi: &Q) -> IdentityReport {
    let parts: Vec<IdentityReport> = Iso3Gen::ALL
        .iter()
        .map(|&a| {
            IdentityReport::from_residual(&format!("delta({})", a.label()), &(coboundary(r, a) - cobracket(a, xi)))
        })
        .collect();
    IdentityReport::merge("coboundary", &parts)
}

/// [[r,r]] = 0.
pub fn check_cybe(xi: &Q) -> IdentityReport {
    let g = build_iso3();
    let r = build_classical_r(xi);
    IdentityReport::from_residual("cybe", &schouten_bracket(&r, &r, &g))
}

/// [[r̂,r̂]] = ω.
pub fn check_mcybe(xi: &Q) -> IdentityReport {
    let g = build_iso3();
    let rh = build_rhat(xi);
    IdentityReport::from_residual("mcybe", &(schouten_bracket(&rh, &rh, &g) - build_omega(xi)))
}

/// Dropping 2ξP₊∧P₋ from r leaves a CYBE violation exactly when ξ ≠ 0.
pub fn check_twist_remainder(xi: &Q) -> IdentityReport {
    let g = build_iso3();
    let pp =
        WedgeTensor::wedge(&v(Iso3Gen::PPlus), &v(Iso3Gen::PMinus)).scale(&(xi_s(xi).scale(&scalar_series::qi(2))));
    let r = build_classical_r(xi) - pp;
    let res = schouten_bracket(&r, &r, &g);
    let expect_zero = num_is_zero(xi);
    IdentityReport::flag(
        "twist_remainder",
        res.is_zero() == expect_zero,
        format!("[[r - 2 xi P+^P-, same]] has {} nonzero components", res.len()),
    )
}

fn num_is_zero(x: &Q) -> bool {
    x == &scalar_series::qi(0)
}

/// Every 3D identity at one value of ξ.
pub fn classical_suite(xi: &Q) -> Vec<IdentityReport> {
    let g = build_iso3();
    let rh = build_rhat(xi);
    let x = build_casimir_x(xi);
    let omega = build_omega(xi);
    let r = build_classical_r(xi);
    let (anti, sym) = r.split_rank2();
    let shapes = rh.symmetry() == Symmetry::Antisymmetric && x.symmetry() == Symmetry::Symmetric;
    vec![
        g.check_jacobi(),
        IdentityReport::flag(
            "decomposition",
            shapes && anti == rh && sym == x,
            "r = rhat + x, rhat antisymmetric, x symmetric".into(),
        ),
        check_cybe(xi),
        check_mcybe(xi),
        IdentityReport::from_residual("casimir_cybe", &(schouten_bracket(&x, &x, &g) + omega.clone())),
        IdentityReport::from_residual("cross_terms", &(schouten_bracket(&rh, &x, &g) + schouten_bracket(&x, &rh, &g))),
        x.check_invariant(&g, "casimir_invariant"),
        omega.check_invariant(&g, "omega_invariant"),
        check_coboundary(&r, xi),
        check_twist_remainder(xi),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::scaled;
    use scalar_series::{q, qi};

    fn g() -> LieAlgebraSC {
        build_iso3()
    }

    #[test]
    fn brackets_by_hand() {
        // ε_{01}^2 = η₀₀η₁₁ε^{012} = (−1)(1)(−1) = 1
        let g = g();
        assert_eq!(g.bracket(&l(0), &p(1)), p(2));
        assert_eq!(g.bracket(&l(0), &l(1)), l(2));
        assert_eq!(g.bracket(&l(1), &l(2)), scaled(&int(-1), &l(0)));
        assert_eq!(g.bracket(&p(1), &l(0)), scaled(&int(-1), &p(2)));
        for mu in 0..3 {
            for nu in 0..3 {
                assert!(g.bracket(&p(mu), &p(nu)).iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn jacobi_and_so21_subalgebra() {
        let g = g();
        assert!(g.check_jacobi().passed);
        assert!(g.check_antisymmetry().passed);
        let j = sum(&[
            (int(1), &g.bracket(&l(0), &g.bracket(&l(1), &l(2)))),
            (int(1), &g.bracket(&l(1), &g.bracket(&l(2), &l(0)))),
            (int(1), &g.bracket(&l(2), &g.bracket(&l(0), &l(1)))),
        ]);
        assert!(j.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn light_cone_brackets() {
        use Iso3Gen::*;
        let g = g();
        let i = ExactScalar::i();
        assert_eq!(g.bracket(&v(L0), &v(PPlus)), scaled(&-&i, &v(PPlus)));
        assert_eq!(g.bracket(&v(L0), &v(LMinus)), scaled(&i, &v(LMinus)));
        assert_eq!(g.bracket(&v(LPlus), &v(LMinus)), scaled(&i.scale(&q(1, 2)), &v(L0)));
        assert_eq!(g.bracket(&v(LPlus), &v(PMinus)), scaled(&i.scale(&q(1, 2)), &v(P0)));
    }

    #[test]
    fn rhat_at_xi_zero_and_parts() {
        use Iso3Gen::*;
        let rh = build_rhat(&qi(0));
        let want =
            (WedgeTensor::wedge(&v(PPlus), &v(LMinus)) - WedgeTensor::wedge(&v(PMinus), &v(LPlus))).scale(&int(2));
        assert_eq!(rh, want);
        assert_eq!(build_rhat(&q(3, 5)).symmetry(), Symmetry::Antisymmetric);
        assert_eq!(build_casimir_x(&q(3, 5)).symmetry(), Symmetry::Symmetric);
        assert_eq!(build_omega(&qi(1)).symmetry(), Symmetry::Antisymmetric);
    }

    #[test]
    fn r_in_light_cone_components() {
        // r = 4P₊⊗L₋ + 4L₊⊗P₋ + 4ξP₊⊗P₋ − P₀⊗L₀ − L₀⊗P₀ − ξP₀⊗P₀
        use Iso3Gen::*;
        let xi = q(-2, 1);
        let o = |a: Iso3Gen, b: Iso3Gen| WedgeTensor::outer(&[&v(a), &v(b)]);
        let want = o(PPlus, LMinus).scale(&int(4)) + o(LPlus, PMinus).scale(&int(4)) + o(PPlus, PMinus).scale(&int(-8))
            - o(P0, L0)
            - o(L0, P0)
            + o(P0, P0).scale(&int(2));
        assert_eq!(build_classical_r(&xi), want);
    }

    #[test]
    fn coboundary_at_three_fifths() {
        let xi = q(3, 5);
        assert!(check_coboundary(&build_classical_r(&xi), &xi).passed);
        assert!(check_coboundary(&build_rhat(&xi), &xi).passed);
        assert!(!check_coboundary(&build_classical_r(&xi), &qi(0)).passed);
    }

    #[test]
    fn three_d_suite_passes() {
        for xi in [qi(0), qi(1), qi(-2), q(3, 5)] {
            for rep in classical_suite(&xi) {
                assert!(rep.passed, "xi = {xi}: {rep}");
            }
        }
    }

    #[test]
    fn omega_xi_part_is_linear() {
        let w0 = build_omega(&qi(0));
        let w1 = build_omega(&qi(1));
        let w2 = build_omega(&qi(2));
        assert_eq!(&w2 - &w0, (&w1 - &w0).scale(&int(2)));
        assert!(!(&w1 - &w0).is_zero());
    }
}
