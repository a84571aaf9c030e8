//! K_ξ(iso(3)) in rotation and momentum generators P₀, P±, L₀, L±, related
//! to the contraction basis by H_C = 2iP₀, H_A = 2iL₀, E_C = 2Ad_T P₊,
//! E_A = 2Ad_T L₊, F_C = 2Ad_T P₋, F_A = 2Ad_T L₋ with T = q^{P₀L₀ + ξP₀²/2}.

use algebra_core::{Algebra, Element, GeneratorTable, Parity, TensorElement};
use scalar_series::{q, qi, ExactScalar, Q};

use crate::checks::{check_hopf_map, CheckReport, Residuals};
use crate::expr::{cosh, qpow, sinh_over_2hbar};
use crate::hopf::HopfAlgebraDef;
use crate::HopfError;

pub const POINCARE_LETTERS: [&str; 6] = ["P_plus", "L_plus", "P_0", "L_0", "P_minus", "L_minus"];

fn i_scalar() -> ExactScalar {
    ExactScalar::i()
}

fn xi_of(h: &HopfAlgebraDef) -> Result<Q, HopfError> {
    h.table()
        .param("xi")
        .map(|x| x.re().clone())
        .ok_or_else(|| HopfError::Invalid(format!("{} has no xi parameter", h.name())))
}

/// `a ↦ T a T⁻¹ = a + [log T, a] + ½[log T,[log T, a]] + …`; `log_t` must
/// carry at least one ħ, so the series stops after `order` commutators.
pub fn ad_t(alg: &Algebra, log_t: &Element, a: &Element) -> Result<Element, HopfError> {
    let mut out = a.clone();
    let mut term = a.clone();
    for k in 1..=alg.order() {
        term = alg.commutator(log_t, &term)?.scale_q(&q(1, k as i64));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// `log T = ħ(P₀L₀ + ξP₀²/2)` in the Poincaré basis.
pub fn log_t(h: &HopfAlgebraDef) -> Result<Element, HopfError> {
    let alg = h.algebra();
    let xi = xi_of(h)?;
    let p0 = alg.gen("P_0")?;
    let l0 = alg.gen("L_0")?;
    let t = alg.mul(&p0, &l0)?.add(&alg.mul(&p0, &p0)?.scale_q(&(xi / qi(2))));
    Ok(t.shift_up(1))
}

/// The Poincaré-basis Hopf algebra with the same ξ and order as `kxi`.
pub fn basis_change_to_poincare(kxi: &HopfAlgebraDef, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    build_poincare(&xi_of(kxi)?, order)
}

/// Relations: [L₊,L₋] = (i/4)(q^{2iP₀}+q^{−2iP₀})(L₀+ξP₀) − (ξ/8ħ)(q^{2iP₀}−q^{−2iP₀}),
/// [L₀,L±] = ∓iL±, [L±,P∓] = ±(q^{2iP₀}−q^{−2iP₀})/8ħ, [L₀,P±] = [P₀,L±] = ∓iP±;
/// ΔP± = P±⊗q^{iP₀} + q^{−iP₀}⊗P±, ΔL± picks up ±iħ tails in L₀+ξP₀.
pub fn build_poincare(xi: &Q, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    if order == 0 {
        return Err(HopfError::Invalid("order must be at least 1".into()));
    }
    let names: Vec<(&str, Parity)> = POINCARE_LETTERS.iter().map(|n| (*n, Parity::Even)).collect();
    let mut table = GeneratorTable::from_names(&names)?;
    table.set_param("xi", ExactScalar::real(xi.clone()));
    let mut alg = Algebra::new(table, order);
    let g = |alg: &Algebra, n: &str| alg.gen(n);
    let (pp, lp, p0, l0, pm, lm) = (
        g(&alg, "P_plus")?,
        g(&alg, "L_plus")?,
        g(&alg, "P_0")?,
        g(&alg, "L_0")?,
        g(&alg, "P_minus")?,
        g(&alg, "L_minus")?,
    );
    let i = i_scalar();
    let z = qi(0);
    let zero = alg.zero();
    let two_ip0 = p0.scale_scalar(&i.scale(&qi(2)));
    // (q^{2iP₀} − q^{−2iP₀})/2ħ
    let s = sinh_over_2hbar(&alg, &two_ip0, &qi(1))?;
    let l_xi = l0.add(&p0.scale_q(xi));
    let ll =
        alg.mul(&cosh(&alg, &two_ip0, &qi(1))?, &l_xi)?.scale_scalar(&i.scale(&q(1, 2))).sub(&s.scale_q(&(xi / qi(4))));
    let quarter_s = s.scale_q(&q(1, 4));

    // Rules `b·a = a·b + [b, a]` in PBW order P₊ < L₊ < P₀ < L₀ < P₋ < L₋.
    alg.add_rule("L_plus", "P_plus", z.clone(), zero.clone())?;
    alg.add_rule("P_0", "P_plus", z.clone(), zero.clone())?;
    alg.add_rule("P_0", "L_plus", z.clone(), pp.scale_scalar(&-i.clone()))?;
    alg.add_rule("L_0", "P_plus", z.clone(), pp.scale_scalar(&-i.clone()))?;
    alg.add_rule("L_0", "L_plus", z.clone(), lp.scale_scalar(&-i.clone()))?;
    alg.add_rule("L_0", "P_0", z.clone(), zero.clone())?;
    alg.add_rule("P_minus", "P_plus", z.clone(), zero.clone())?;
    alg.add_rule("P_minus", "L_plus", z.clone(), quarter_s.neg())?;
    alg.add_rule("P_minus", "P_0", z.clone(), zero.clone())?;
    alg.add_rule("P_minus", "L_0", z.clone(), pm.scale_scalar(&-i.clone()))?;
    alg.add_rule("L_minus", "P_plus", z.clone(), quarter_s.neg())?;
    alg.add_rule("L_minus", "L_plus", z.clone(), ll.neg())?;
    alg.add_rule("L_minus", "P_0", z.clone(), pm.scale_scalar(&-i.clone()))?;
    alg.add_rule("L_minus", "L_0", z.clone(), lm.scale_scalar(&-i.clone()))?;
    alg.add_rule("L_minus", "P_minus", z, zero)?;

    let one = alg.one();
    let ip0 = p0.scale_scalar(&i);
    let qp = qpow(&alg, &ip0, &qi(1))?;
    let qm = qpow(&alg, &ip0, &qi(-1))?;
    let t = |a: &Element, b: &Element| TensorElement::from_elements(&[a, b]);
    let prim = |x: &Element| t(x, &one).add(&t(&one, x));
    let dp = |x: &Element| t(x, &qp).add(&t(&qm, x));
    let right = alg.mul(&qp, &l_xi)?.shift_up(1);
    let left = alg.mul(&l_xi, &qm)?.shift_up(1);
    let dl = |l: &Element, p: &Element, sign: i64| -> Result<TensorElement, HopfError> {
        let tail = t(p, &right).sub(&t(&left, p))?.scale_scalar(&i.scale(&qi(sign)));
        Ok(dp(l)?.add(&tail)?)
    };
    let coproduct = vec![dp(&pp)?, dl(&lp, &pp, 1)?, prim(&p0)?, prim(&l0)?, dp(&pm)?, dl(&lm, &pm, 1)?];
    let mut hopf = HopfAlgebraDef::new("k_xi_iso3_poincare", alg, coproduct, vec![ExactScalar::zero(); 6])?;
    hopf.set_metadata("xi", &xi.to_string());
    Ok(hopf)
}

/// Images of the K_ξ letters `E_A, E_C, H_A, H_C, F_A, F_C` in the Poincaré
/// algebra, by the Ad_T series.
pub fn kxi_images_by_ad_t(p: &HopfAlgebraDef) -> Result<Vec<Element>, HopfError> {
    let alg = p.algebra();
    let lt = log_t(p)?;
    let two_i = i_scalar().scale(&qi(2));
    let ad2 = |n: &str| -> Result<Element, HopfError> { Ok(ad_t(alg, &lt, &alg.gen(n)?)?.scale_q(&qi(2))) };
    Ok(vec![
        ad2("L_plus")?,
        ad2("P_plus")?,
        alg.gen("L_0")?.scale_scalar(&two_i),
        alg.gen("P_0")?.scale_scalar(&two_i),
        ad2("L_minus")?,
        ad2("P_minus")?,
    ])
}

/// The same images in closed form: 2q^{∓iP₀}P±, 2q^{−iP₀}(L₊ − iħP₊(L₀+ξP₀)),
/// 2q^{iP₀}(L₋ + iħP₋(L₀+ξP₀)).
pub fn kxi_images_closed(p: &HopfAlgebraDef) -> Result<Vec<Element>, HopfError> {
    let alg = p.algebra();
    let xi = xi_of(p)?;
    let i = i_scalar();
    let g = |n: &str| alg.gen(n);
    let l_xi = g("L_0")?.add(&g("P_0")?.scale_q(&xi));
    let ip0 = g("P_0")?.scale_scalar(&i);
    let qp = qpow(alg, &ip0, &qi(1))?;
    let qm = qpow(alg, &ip0, &qi(-1))?;
    let two = qi(2);
    let lp = g("L_plus")?.sub(&alg.mul(&g("P_plus")?, &l_xi)?.shift_up(1).scale_scalar(&i));
    let lm = g("L_minus")?.add(&alg.mul(&g("P_minus")?, &l_xi)?.shift_up(1).scale_scalar(&i));
    Ok(vec![
        alg.mul(&qm, &lp)?.scale_q(&two),
        alg.mul(&qm, &g("P_plus")?)?.scale_q(&two),
        g("L_0")?.scale_scalar(&i.scale(&two)),
        g("P_0")?.scale_scalar(&i.scale(&two)),
        alg.mul(&qp, &lm)?.scale_q(&two),
        alg.mul(&qp, &g("P_minus")?)?.scale_q(&two),
    ])
}

/// Images of the Poincaré letters in K_ξ: P₀ = H_C/2i, L₀ = H_A/2i,
/// P₊ = ½q^{H_C/2}E_C, P₋ = ½q^{−H_C/2}F_C, L₊ = ½q^{H_C/2}E_A + iħP₊(L₀+ξP₀),
/// L₋ = ½q^{−H_C/2}F_A − iħP₋(L₀+ξP₀).
pub fn poincare_images(kxi: &HopfAlgebraDef) -> Result<Vec<Element>, HopfError> {
    let alg = kxi.algebra();
    let xi = xi_of(kxi)?;
    let g = |n: &str| alg.gen(n);
    let i = i_scalar();
    let minus_half_i = i.scale(&q(-1, 2));
    let p0 = g("H_C")?.scale_scalar(&minus_half_i);
    let l0 = g("H_A")?.scale_scalar(&minus_half_i);
    let hc = g("H_C")?;
    let qp = qpow(alg, &hc, &q(1, 2))?;
    let qm = qpow(alg, &hc, &q(-1, 2))?;
    let half = q(1, 2);
    let pp = alg.mul(&qp, &g("E_C")?)?.scale_q(&half);
    let pm = alg.mul(&qm, &g("F_C")?)?.scale_q(&half);
    let l_xi = l0.add(&p0.scale_q(&xi));
    let lp = alg.mul(&qp, &g("E_A")?)?.scale_q(&half).add(&alg.mul(&pp, &l_xi)?.shift_up(1).scale_scalar(&i));
    let lm = alg.mul(&qm, &g("F_A")?)?.scale_q(&half).sub(&alg.mul(&pm, &l_xi)?.shift_up(1).scale_scalar(&i));
    Ok(vec![pp, lp, p0, l0, pm, lm])
}

/// Both directions of the basis change are Hopf maps, and the Ad_T series
/// agrees with its closed form.
pub fn check_poincare_basis(kxi: &HopfAlgebraDef, p: &HopfAlgebraDef) -> Result<Vec<CheckReport>, HopfError> {
    let by_series = kxi_images_by_ad_t(p)?;
    let closed = kxi_images_closed(p)?;
    let mut res = Residuals::new();
    for (k, (a, b)) in by_series.iter().zip(&closed).enumerate() {
        res.add_element(&format!("Ad_T image of {}", kxi.table().name(k as u8)), &a.sub(b));
    }
    let mut series = res.report("ad_t_closed_form");
    series.detail = format!("{} ({} images)", series.detail, closed.len());
    let mut to_p = check_hopf_map(kxi, p, &closed);
    to_p.check = "kxi_to_poincare".into();
    let mut to_k = check_hopf_map(p, kxi, &poincare_images(kxi)?);
    to_k.check = "poincare_to_kxi".into();
    Ok(vec![series, to_p, to_k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kxi::build_k_xi_iso3;

    #[test]
    fn both_directions_are_hopf_maps() {
        let k = build_k_xi_iso3(&q(3, 5), 3).unwrap();
        let p = basis_change_to_poincare(&k, 3).unwrap();
        for r in check_poincare_basis(&k, &p).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn round_trip_is_the_identity() {
        let k = build_k_xi_iso3(&qi(1), 3).unwrap();
        let p = build_poincare(&qi(1), 3).unwrap();
        let to_p = kxi_images_closed(&p).unwrap();
        for (g, img) in poincare_images(&k).unwrap().iter().enumerate() {
            let back = crate::remap::substitute(p.algebra(), &to_p, img).unwrap();
            assert_eq!(back, p.algebra().gen(POINCARE_LETTERS[g]).unwrap(), "{}", POINCARE_LETTERS[g]);
        }
    }

    #[test]
    fn ad_t_fixes_the_cartan_pair() {
        let p = build_poincare(&q(3, 5), 3).unwrap();
        let lt = log_t(&p).unwrap();
        assert_eq!(lt.valuation(), Some(1));
        for n in ["P_0", "L_0"] {
            let x = p.gen(n).unwrap();
            assert_eq!(ad_t(p.algebra(), &lt, &x).unwrap(), x);
        }
    }

    /// At ħ⁰ the brackets are those of iso(3) with L_μ → −L_μ against the
    /// usual orientation.
    #[test]
    fn classical_brackets() {
        let p = build_poincare(&q(3, 5), 2).unwrap();
        let a = p.algebra();
        let g = |n: &str| a.gen(n).unwrap();
        let i = ExactScalar::i();
        let c0 = |x: &str, y: &str| a.commutator(&g(x), &g(y)).unwrap().hbar_coeff(0);
        assert_eq!(c0("L_0", "L_plus"), g("L_plus").scale_scalar(&i.scale(&qi(-1))));
        assert_eq!(c0("L_0", "L_minus"), g("L_minus").scale_scalar(&i));
        assert_eq!(c0("L_plus", "L_minus"), g("L_0").scale_scalar(&i.scale(&q(1, 2))));
        assert_eq!(c0("L_plus", "P_minus"), g("P_0").scale_scalar(&i.scale(&q(1, 2))));
        assert_eq!(c0("L_minus", "P_plus"), g("P_0").scale_scalar(&i.scale(&q(-1, 2))));
        assert_eq!(c0("L_0", "P_plus"), g("P_plus").scale_scalar(&i.scale(&qi(-1))));
        assert!(c0("P_plus", "P_minus").is_zero());
    }
}
