//! Constructors. Every R-matrix is the ordered product of its displayed
//! exponential factors.

use std::sync::Arc;

use algebra_core::{exp_element, qexp_element, Algebra, Element, TensorElement};
use hopf_structures::{
    build_k_xi_iso3, build_max_ext_sl22, build_uq_d21e, build_uq_sl2, h_c, q_minus_qinv, ContractionMap, HopfAlgebraDef,
};
use scalar_series::{qi, ExactScalar, HbarSeries, Q};

use crate::series::{central_series, neumann_inverse, RMatrixSeries};
use crate::RMatrixError;

fn pair(a: &Element, b: &Element) -> TensorElement {
    TensorElement::from_elements(&[a, b])
}

fn gens(alg: &Algebra, a: &str, b: &str) -> Result<TensorElement, RMatrixError> {
    Ok(pair(&alg.gen(a)?, &alg.gen(b)?))
}

fn product(alg: &Algebra, factors: &[TensorElement]) -> Result<TensorElement, RMatrixError> {
    let mut acc = TensorElement::one(2, alg.order());
    for f in factors {
        acc = alg.tensor_mul(&acc, f)?;
    }
    Ok(acc)
}

/// `exp_{−2αħ}[(q^α − q^{−α}) e⊗f]`.
fn qexp_factor(alg: &Algebra, e: &str, f: &str, alpha: &Q) -> Result<TensorElement, RMatrixError> {
    let x = gens(alg, e, f)?.scale(&q_minus_qinv(alpha, alg.order()));
    Ok(qexp_element(alg, &x, &(qi(-2) * alpha))?)
}

/// `exp[c·x]` for a tensor `x` and scalar series `c` of ħ-order ≥ 1.
fn exp_factor(alg: &Algebra, x: &TensorElement, c: &HbarSeries) -> Result<TensorElement, RMatrixError> {
    Ok(exp_element(alg, &x.scale(c))?)
}

fn half_hbar(order: usize) -> HbarSeries {
    HbarSeries::monomial(ExactScalar::ratio(1, 2), 1, order)
}

/// The two sl(2) factors `exp_{−2αħ}[(q^α−q^{−α})E⊗F]·exp[½αħ H⊗H]`.
fn sl2_factors(alg: &Algebra, names: [&str; 3], alpha: &Q) -> Result<[TensorElement; 2], RMatrixError> {
    let [e, h, f] = names;
    let hh = gens(alg, h, h)?.scale_q(alpha);
    Ok([qexp_factor(alg, e, f, alpha)?, exp_factor(alg, &hh, &half_hbar(alg.order()))?])
}

/// R-matrix of U_{αħ}(sl(2)).
pub fn rmat_uq_sl2(alpha: &Q, order: usize) -> Result<RMatrixSeries, RMatrixError> {
    let h = build_uq_sl2(alpha, order)?;
    let value = product(h.algebra(), &sl2_factors(h.algebra(), ["E", "H", "F"], alpha)?)?;
    RMatrixSeries::new(Arc::new(h), value)
}

/// R-matrix of the pair algebra `E,H,F` (parameter ε) times `Et,Ht,Ft`
/// (parameter ε̃) as the product of the two sl(2) R-matrices.
fn pair_rmatrix(h: &HopfAlgebraDef, eps: &Q, tilde: &Q, pairing: Pairing) -> Result<TensorElement, RMatrixError> {
    let alg = h.algebra();
    let r = product(alg, &sl2_factors(alg, ["E", "H", "F"], eps)?)?;
    let rt = product(alg, &sl2_factors(alg, ["Et", "Ht", "Ft"], tilde)?)?;
    let rt = match pairing {
        Pairing::Product => rt,
        Pairing::InverseOpposite => neumann_inverse(alg, &rt.flip(alg.table()))?,
    };
    Ok(alg.tensor_mul(&r, &rt)?)
}

/// R-matrix of U_{εħ}(sl(2)) ⊗ U_{ε̃ħ}(sl(2)) with ε̃ = −ε + ξε².
pub fn rmat_sl2_tensor(epsilon: &Q, xi: &Q, order: usize) -> Result<RMatrixSeries, RMatrixError> {
    let h = hopf_structures::build_sl2_pair(epsilon, xi, -1, order)?;
    let tilde = -epsilon.clone() + xi * epsilon * epsilon;
    let value = pair_rmatrix(&h, epsilon, &tilde, Pairing::Product)?;
    RMatrixSeries::new(Arc::new(h), value)
}

/// How the second sl(2) factor enters the pre-limit R-matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `R·R̃`.
    Product,
    /// `R·(R̃₂₁)⁻¹`, which has no finite limit.
    InverseOpposite,
}

/// The pre-limit R-matrix together with its image in K_ξ letters.
pub struct PrelimitRMatrix {
    pub map: ContractionMap,
    pub series: RMatrixSeries,
    /// The value rewritten through E = E_C/ε, Ẽ = E_A − E_C/ε (likewise F, H).
    pub contracted: TensorElement,
    pub pairing: Pairing,
}

/// Pre-limit R-matrix at rational ε ≠ 0 with ε̃ = −ε + ξε².
pub fn rmat_product_prelimit(
    epsilon: &Q,
    xi: &Q,
    order: usize,
    pairing: Pairing,
) -> Result<PrelimitRMatrix, RMatrixError> {
    let map = ContractionMap::new(epsilon, xi, order)?;
    let value = pair_rmatrix(&map.source, epsilon, &map.tilde_epsilon, pairing)?;
    let contracted = map.substitute_tensor(&value)?;
    let series = RMatrixSeries::new(Arc::new(map.source.clone()), value)?;
    Ok(PrelimitRMatrix { map, series, contracted, pairing })
}

/// The factors shared by K_ξ(iso(3)) and the contracted sl(2|2):
/// exp[−(ξ/2ħ)Li₂(4ħ²X) − (ξ/ħ)log(1−4ħ²X)] and
/// exp[−(1/2ħ)(E_C⊗F_A + E_A⊗F_C)·log(1−4ħ²X)/X] with X = E_C⊗F_C.
fn contracted_factors(alg: &Algebra, xi: &Q) -> Result<[TensorElement; 2], RMatrixError> {
    let x = gens(alg, "E_C", "F_C")?;
    let four_pow = |n: usize| (0..n).fold(qi(1), |a, _| a * qi(4));
    // −(ξ/2ħ)Zⁿ/n² + (ξ/ħ)Zⁿ/n with Z = 4ħ²X, for n ≥ 1.
    let a1 = central_series(alg, &x, |n| {
        if n == 0 {
            return (qi(0), 0);
        }
        let nq = qi(n as i64);
        (xi * four_pow(n) * (nq.recip() - (qi(2) * &nq * &nq).recip()), 2 * n - 1)
    })?;
    // −(1/2ħ)·log(1−Z)/X = Σ_{m≥0} 2·4ᵐ/(m+1) ħ^{2m+1} Xᵐ.
    let g = central_series(alg, &x, |m| (qi(2) * four_pow(m) / qi(m as i64 + 1), 2 * m + 1))?;
    let y = gens(alg, "E_C", "F_A")?.add(&gens(alg, "E_A", "F_C")?)?;
    let a2 = alg.tensor_mul(&y, &g)?;
    Ok([exp_element(alg, &a1)?, exp_element(alg, &a2)?])
}

/// exp[½ħ(H_C⊗H_A + H_A⊗H_C + ξH_C⊗H_C)] plus `extra` inside the bracket.
fn contracted_cartan(
    alg: &Algebra,
    hc: &Element,
    ha: &Element,
    xi: &Q,
    extra: TensorElement,
) -> Result<TensorElement, RMatrixError> {
    let c = pair(hc, ha).add(&pair(ha, hc))?.add(&pair(hc, hc).scale_q(xi))?.add(&extra)?;
    exp_factor(alg, &c, &half_hbar(alg.order()))
}

/// R-matrix of K_ξ(iso(3)).
pub fn rmat_k_xi(xi: &Q, order: usize) -> Result<RMatrixSeries, RMatrixError> {
    let h = build_k_xi_iso3(xi, order)?;
    let alg = h.algebra();
    let [f1, f2] = contracted_factors(alg, xi)?;
    let zero = TensorElement::zero(2, order);
    let f3 = contracted_cartan(alg, &alg.gen("H_C")?, &alg.gen("H_A")?, xi, zero)?;
    let value = product(alg, &[f1, f2, f3])?;
    RMatrixSeries::new(Arc::new(h), value)
}

/// `exp[c·e⊗f]` for odd `e, f`; the series stops after the linear term.
fn odd_factor(alg: &Algebra, e: &str, f: &str, c: &HbarSeries) -> Result<TensorElement, RMatrixError> {
    exp_factor(alg, &gens(alg, e, f)?, c)
}

/// R-matrix of U_ħ(d(2,1;ε)) in the PBW basis E₂ < E₁₂ < E_B < E₃₂ < E₁₃₂ < E₁ < E₃.
pub fn rmat_d21e(epsilon: &Q, order: usize) -> Result<RMatrixSeries, RMatrixError> {
    let h = build_uq_d21e(epsilon, order)?;
    let alg = h.algebra();
    let (s1, s2, s3) = (qi(1), epsilon.clone(), -(qi(1) + epsilon));
    // −(q₂ − q₂⁻¹) with q₂ = q⁻¹.
    let odd = q_minus_qinv(&qi(1), order);
    let hb = alg.gen("H1")?.scale_q(&s1).sub(&alg.gen("H2")?.scale_q(&qi(2))).add(&alg.gen("H3")?.scale_q(&s3));
    // s₂H_B⊗H_B = (s₂H_B)⊗(s₂H_B)/s₂.
    let cartan = gens(alg, "H1", "H1")?
        .scale_q(&s1)
        .add(&pair(&hb, &hb).scale_q(&s2.recip()))?
        .add(&gens(alg, "H3", "H3")?.scale_q(&s3))?;
    let factors = [
        odd_factor(alg, "E2", "F2", &odd)?,
        odd_factor(alg, "E12", "F21", &odd)?,
        qexp_factor(alg, "E_B", "F_B", &s2)?,
        odd_factor(alg, "E32", "F23", &odd)?,
        odd_factor(alg, "E132", "F213", &odd)?,
        qexp_factor(alg, "E1", "F1", &s1)?,
        qexp_factor(alg, "E3", "F3", &s3)?,
        exp_factor(alg, &cartan, &half_hbar(order))?,
    ];
    let value = product(alg, &factors)?;
    RMatrixSeries::new(Arc::new(h), value)
}

/// R-matrix of the contraction of U_ħ(d(2,1;ε)), the centrally extended sl(2|2).
pub fn rmat_max_ext(xi: &Q, order: usize) -> Result<RMatrixSeries, RMatrixError> {
    let h = build_max_ext_sl22(xi, order)?;
    let alg = h.algebra();
    let odd = q_minus_qinv(&qi(1), order);
    let [c1, c2] = contracted_factors(alg, xi)?;
    let extra = gens(alg, "H1", "H1")?.sub(&gens(alg, "H3", "H3")?)?;
    let cartan = contracted_cartan(alg, &h_c(alg)?, &alg.gen("H_A")?, xi, extra)?;
    let factors = [
        odd_factor(alg, "E2", "F2", &odd)?,
        odd_factor(alg, "E12", "F21", &odd)?,
        c1,
        c2,
        odd_factor(alg, "E32", "F23", &odd)?,
        odd_factor(alg, "E132", "F213", &odd)?,
        qexp_factor(alg, "E1", "F1", &qi(1))?,
        qexp_factor(alg, "E3", "F3", &qi(-1))?,
        cartan,
    ];
    let value = product(alg, &factors)?;
    RMatrixSeries::new(Arc::new(h), value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar_series::q;

    fn t(alg: &Algebra, a: &[&str], b: &[&str]) -> TensorElement {
        pair(&alg.word(a).unwrap(), &alg.word(b).unwrap())
    }

    #[test]
    fn sl2_starts_at_the_identity() {
        let r = rmat_uq_sl2(&q(2, 3), 3).unwrap();
        assert_eq!(r.value.hbar_coeff(0), TensorElement::one(2, 3));
    }

    #[test]
    fn sl2_first_order() {
        let alpha = q(2, 3);
        let r = rmat_uq_sl2(&alpha, 3).unwrap();
        let a = r.alg();
        let want = t(a, &["E"], &["F"]).scale_q(&qi(2)).add(&t(a, &["H"], &["H"]).scale_q(&q(1, 2))).unwrap();
        assert_eq!(r.value.hbar_coeff(1), want.scale_q(&alpha));
    }

    #[test]
    fn sl2_second_order_by_hand() {
        // (2ħE⊗F)²/[2]! + (½ħH⊗H)²/2 + (2ħE⊗F)(½ħH⊗H), with F·H = H·F + 2F.
        let r = rmat_uq_sl2(&qi(1), 3).unwrap();
        let a = r.alg();
        let want = t(a, &["E", "E"], &["F", "F"])
            .scale_q(&qi(2))
            .add(&t(a, &["H", "H"], &["H", "H"]).scale_q(&q(1, 8)))
            .unwrap()
            .add(&t(a, &["E", "H"], &["H", "F"]))
            .unwrap()
            .add(&t(a, &["E", "H"], &["F"]).scale_q(&qi(2)))
            .unwrap();
        assert_eq!(r.value.hbar_coeff(2), want.hbar_coeff(0));
    }

    #[test]
    fn k_xi_first_order() {
        let xi = q(3, 5);
        let r = rmat_k_xi(&xi, 2).unwrap();
        let a = r.alg();
        let quarter = t(a, &["H_C"], &["H_A"])
            .add(&t(a, &["H_A"], &["H_C"]))
            .unwrap()
            .add(&t(a, &["H_C"], &["H_C"]).scale_q(&xi))
            .unwrap()
            .scale_q(&q(1, 4));
        let want = t(a, &["E_C"], &["F_A"])
            .add(&t(a, &["E_A"], &["F_C"]))
            .unwrap()
            .add(&t(a, &["E_C"], &["F_C"]).scale_q(&xi))
            .unwrap()
            .add(&quarter)
            .unwrap()
            .scale_q(&qi(2));
        assert_eq!(r.value.hbar_coeff(1), want.hbar_coeff(0));
    }

    #[test]
    fn xi_factor_is_trivial_at_zero() {
        let h = build_k_xi_iso3(&qi(0), 4).unwrap();
        let [f1, _] = contracted_factors(h.algebra(), &qi(0)).unwrap();
        assert_eq!(f1, TensorElement::one(2, 4));
    }

    #[test]
    fn log_ratio_factor_starts_at_two_hbar() {
        // −(1/2ħ)·(−4ħ²)(1 + …) on the mixed terms.
        let h = build_k_xi_iso3(&qi(0), 3).unwrap();
        let a = h.algebra();
        let [_, f2] = contracted_factors(a, &qi(0)).unwrap();
        let y = t(a, &["E_C"], &["F_A"]).add(&t(a, &["E_A"], &["F_C"])).unwrap();
        assert_eq!(f2.hbar_coeff(1), y.scale_q(&qi(2)));
    }

    #[test]
    fn odd_factors_stop_after_the_linear_term() {
        let h = build_uq_d21e(&q(1, 3), 3).unwrap();
        let a = h.algebra();
        let c = q_minus_qinv(&qi(1), 3);
        let f = odd_factor(a, "E2", "F2", &c).unwrap();
        let want = TensorElement::one(2, 3).add(&gens(a, "E2", "F2").unwrap().scale(&c)).unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn prelimit_product_factorises() {
        let p = rmat_product_prelimit(&q(1, 10), &qi(1), 2, Pairing::Product).unwrap();
        let alg = p.series.alg();
        let r = product(alg, &sl2_factors(alg, ["E", "H", "F"], &q(1, 10)).unwrap()).unwrap();
        let rt = product(alg, &sl2_factors(alg, ["Et", "Ht", "Ft"], &p.map.tilde_epsilon).unwrap()).unwrap();
        assert_eq!(p.series.value, alg.tensor_mul(&r, &rt).unwrap());
        assert_eq!(p.series.value.hbar_coeff(0), TensorElement::one(2, 2));
    }

    #[test]
    fn max_ext_cartan_factor_first_order() {
        let xi = q(3, 5);
        let r = rmat_max_ext(&xi, 1).unwrap();
        let a = r.alg();
        let hc = h_c(a).unwrap();
        let ha = a.gen("H_A").unwrap();
        let cartan = gens(a, "H1", "H1")
            .unwrap()
            .sub(&gens(a, "H3", "H3").unwrap())
            .unwrap()
            .add(&pair(&hc, &ha))
            .unwrap()
            .add(&pair(&ha, &hc))
            .unwrap()
            .add(&pair(&hc, &hc).scale_q(&xi))
            .unwrap()
            .scale_q(&q(1, 2));
        let is_cartan = |m: &algebra_core::Monomial| m.letters().iter().all(|&g| a.table().name(g).starts_with('H'));
        let mut got = TensorElement::zero(2, 1);
        for (s, c) in r.value.hbar_coeff(1).terms() {
            if s.iter().all(is_cartan) {
                got.add_term(s.clone(), c);
            }
        }
        assert_eq!(got, cartan);
    }
}
