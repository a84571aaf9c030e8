//! Central elements of K_ξ(iso(3)) and the redefinition of E_A, F_A that
//! removes ξ from [E_A, F_A].

use algebra_core::Element;
use scalar_series::{q, qi, ExactScalar, Q};

use crate::checks::{CheckReport, Residuals};
use crate::expr::{cosh, sinh_half_squared_over_hbar2, sinh_over_2hbar};
use crate::hopf::HopfAlgebraDef;
use crate::poincare::poincare_images;
use crate::remap::substitute;
use crate::HopfError;

fn is_poincare(h: &HopfAlgebraDef) -> bool {
    h.table().index("P_0").is_ok()
}

fn xi_of(h: &HopfAlgebraDef) -> Result<Q, HopfError> {
    h.table()
        .param("xi")
        .map(|x| x.re().clone())
        .ok_or_else(|| HopfError::Invalid(format!("{} has no xi parameter", h.name())))
}

/// X = E_CF_C + (q^{H_C/2} − q^{−H_C/2})²/4ħ², or 4P₊P₋ + (q^{iP₀} − q^{−iP₀})²/4ħ²
/// in the Poincaré basis.
pub fn invariant_x(h: &HopfAlgebraDef) -> Result<Element, HopfError> {
    let alg = h.algebra();
    let g = |n: &str| alg.gen(n);
    if is_poincare(h) {
        let two_ip0 = g("P_0")?.scale_scalar(&ExactScalar::imag(qi(2)));
        let pp = alg.mul(&g("P_plus")?, &g("P_minus")?)?.scale_q(&qi(4));
        return Ok(pp.add(&sinh_half_squared_over_hbar2(alg, &two_ip0)?));
    }
    let ef = alg.mul(&g("E_C")?, &g("F_C")?)?;
    Ok(ef.add(&sinh_half_squared_over_hbar2(alg, &g("H_C")?)?))
}

/// X̃ = 4P₊L₋ + 4P₋L₊ + (i/2ħ)(q^{2iP₀} − q^{−2iP₀})(L₀+ξP₀) − (ξ/2ħ²)(q^{iP₀} − q^{−iP₀})²;
/// on K_ξ it is transported through the basis change.
pub fn invariant_xtilde(h: &HopfAlgebraDef) -> Result<Element, HopfError> {
    let alg = h.algebra();
    let xi = xi_of(h)?;
    if !is_poincare(h) {
        let p = crate::poincare::build_poincare(&xi, h.order())?;
        let xt = invariant_xtilde(&p)?;
        return substitute(alg, &poincare_images(h)?, &xt);
    }
    let g = |n: &str| alg.gen(n);
    let i = ExactScalar::i();
    let two_ip0 = g("P_0")?.scale_scalar(&i.scale(&qi(2)));
    let l_xi = g("L_0")?.add(&g("P_0")?.scale_q(&xi));
    let a = alg.mul(&g("P_plus")?, &g("L_minus")?)?;
    let b = alg.mul(&g("P_minus")?, &g("L_plus")?)?;
    let c = alg.mul(&sinh_over_2hbar(alg, &two_ip0, &qi(1))?, &l_xi)?.scale_scalar(&i);
    let d = sinh_half_squared_over_hbar2(alg, &two_ip0)?.scale_q(&(qi(-2) * &xi));
    Ok(a.add(&b).scale_q(&qi(4)).add(&c).add(&d))
}

/// [x, g] = 0 for every generator g.
pub fn check_centrality(h: &HopfAlgebraDef, x: &Element) -> Result<CheckReport, HopfError> {
    let alg = h.algebra();
    let mut res = Residuals::new();
    for g in 0..h.table().len() as u8 {
        let c = alg.commutator(x, &Element::generator(g, h.order()))?;
        res.add_element(&format!("[x, {}]", h.table().name(g)), &c);
    }
    Ok(res.report("centrality"))
}

/// `c_n = 4ⁿ(n!)²/(2n+1)!`, the coefficients of arsinh(x)/√(1+x²) = Σ(−1)ⁿc_n x^{2n+1}.
fn arsinh_ratio_coefficient(n: usize) -> Q {
    let mut num = qi(1);
    for k in 1..=n as i64 {
        num *= qi(4 * k * k);
    }
    let mut den = qi(1);
    for k in 1..=(2 * n as i64 + 1) {
        den *= qi(k);
    }
    num / den
}

/// Coefficients `g_m`, m = 0…m_max, of g(w) = √w √(1+w) arsinh √w = Σ g_m wᵐ.
pub fn y_series_coefficients(m_max: usize) -> Vec<Q> {
    let c = |k: i64| if k < 0 { qi(0) } else { arsinh_ratio_coefficient(k as usize) };
    (0..=m_max as i64)
        .map(|m| {
            if m == 0 {
                return qi(0);
            }
            let s = if (m - 1) % 2 == 0 { qi(1) } else { qi(-1) };
            s * (c(m - 1) - c(m - 2))
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> Q {
    (0..k).fold(qi(1), |acc, j| acc * qi((n - j) as i64) / qi(j as i64 + 1))
}

/// Y = (g(w₀ + a) − g(w₀))/a − 1 with w₀ = sinh²(ħH_C/2), a = ħ²E_CF_C;
/// all ingredients commute, so the divided difference is expanded as
/// Σ_m g_m Σ_{j≥1} C(m,j) w₀^{m−j} a^{j−1}.
pub fn y_element(h: &HopfAlgebraDef) -> Result<Element, HopfError> {
    let alg = h.algebra();
    let order = h.order();
    let w0 = sinh_half_squared_over_hbar2(alg, &alg.gen("H_C")?)?.shift_up(2);
    let a = alg.mul(&alg.gen("E_C")?, &alg.gen("F_C")?)?.shift_up(2);
    let m_max = order / 2 + 1;
    let gm = y_series_coefficients(m_max);
    let mut w_pows = vec![alg.one()];
    let mut a_pows = vec![alg.one()];
    for k in 1..=m_max {
        w_pows.push(alg.mul(&w_pows[k - 1], &w0)?);
        a_pows.push(alg.mul(&a_pows[k - 1], &a)?);
    }
    let mut y = alg.one().neg();
    for (m, g) in gm.iter().enumerate().skip(1) {
        for j in 1..=m {
            let term = alg.mul(&w_pows[m - j], &a_pows[j - 1])?;
            y = y.add(&term.scale_q(&(g * binomial(m, j))));
        }
    }
    Ok(y.truncate(order))
}

/// With E′_A = E_A − ξY E_C and F′_A = F_A − ξY F_C, checks
/// [E′_A, F′_A] = ½(q^{H_C} + q^{−H_C})H_A.
pub fn y_transform_check(h: &HopfAlgebraDef) -> Result<CheckReport, HopfError> {
    let alg = h.algebra();
    let xi = xi_of(h)?;
    let y = y_element(h)?;
    let g = |n: &str| alg.gen(n);
    let ea = g("E_A")?.sub(&alg.mul(&y, &g("E_C")?)?.scale_q(&xi));
    let fa = g("F_A")?.sub(&alg.mul(&y, &g("F_C")?)?.scale_q(&xi));
    let lhs = alg.commutator(&ea, &fa)?;
    let rhs = alg.mul(&cosh(alg, &g("H_C")?, &qi(1))?, &g("H_A")?)?;
    let mut res = Residuals::new();
    res.add_element("[E'_A, F'_A]", &lhs.sub(&rhs));
    Ok(res.report("y_transform"))
}

/// ħ² coefficient predicted for Y: (E_CF_C + ½H_C²)/3.
pub fn y_leading_term(h: &HopfAlgebraDef) -> Result<Element, HopfError> {
    let alg = h.algebra();
    let hc = alg.gen("H_C")?;
    let ef = alg.mul(&alg.gen("E_C")?, &alg.gen("F_C")?)?;
    Ok(ef.add(&alg.mul(&hc, &hc)?.scale_q(&q(1, 2))).scale_q(&q(1, 3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kxi::build_k_xi_iso3;
    use crate::poincare::build_poincare;

    /// Truncated Cauchy product.
    fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
        let n = a.len().min(b.len());
        (0..n).map(|k| (0..=k).map(|j| &a[j] * &b[k - j]).sum()).collect()
    }

    #[test]
    fn y_coefficients_square_to_the_arsinh_series() {
        // g² = w(1+w)·arsinh²(√w), and arsinh²(√w) = Σ_{n≥1} (−1)^{n−1} 2^{2n−1}((n−1)!)²/(2n)! wⁿ.
        let m = 10;
        let g = y_series_coefficients(m);
        let fact = |n: i64| (1..=n).fold(qi(1), |a, k| a * qi(k));
        let mut asq = vec![qi(0); m + 1];
        for n in 1..=m as i64 {
            let s = if n % 2 == 1 { qi(1) } else { qi(-1) };
            asq[n as usize] = s * qi(1 << (2 * n - 1)) * fact(n - 1) * fact(n - 1) / fact(2 * n);
        }
        let mut w1w = vec![qi(0); m + 1];
        w1w[1] = qi(1);
        w1w[2] = qi(1);
        assert_eq!(mul(&g, &g), mul(&w1w, &asq));
        assert_eq!(&g[..4], [qi(0), qi(1), q(1, 3), q(-2, 15)]);
    }

    #[test]
    fn y_starts_at_hbar_squared() {
        let k = build_k_xi_iso3(&qi(1), 4).unwrap();
        let y = y_element(&k).unwrap();
        assert_eq!(y.valuation(), Some(2));
        assert!(y.hbar_coeff(2).sub(&y_leading_term(&k).unwrap()).is_zero());
        assert!(y.hbar_coeff(3).is_zero());
    }

    #[test]
    fn xtilde_classical_limit() {
        let p = build_poincare(&q(3, 5), 2).unwrap();
        let a = p.algebra();
        let g = |n: &str| a.gen(n).unwrap();
        let want = a
            .mul(&g("P_plus"), &g("L_minus"))
            .unwrap()
            .add(&a.mul(&g("P_minus"), &g("L_plus")).unwrap())
            .scale_q(&qi(4))
            .sub(&a.mul(&g("P_0"), &g("L_0")).unwrap().scale_q(&qi(2)));
        assert_eq!(invariant_xtilde(&p).unwrap().hbar_coeff(0), want.hbar_coeff(0));
    }

    #[test]
    fn x_in_both_bases_is_central() {
        let k = build_k_xi_iso3(&q(-2, 1), 3).unwrap();
        let p = build_poincare(&q(-2, 1), 3).unwrap();
        assert!(check_centrality(&k, &invariant_x(&k).unwrap()).unwrap().passed);
        assert!(check_centrality(&p, &invariant_x(&p).unwrap()).unwrap().passed);
    }

    #[test]
    fn xtilde_is_central_in_kxi() {
        let k = build_k_xi_iso3(&q(3, 5), 3).unwrap();
        assert!(check_centrality(&k, &invariant_xtilde(&k).unwrap()).unwrap().passed);
    }

    #[test]
    fn y_removes_xi_from_the_e_a_f_a_bracket() {
        let k = build_k_xi_iso3(&qi(1), 4).unwrap();
        assert!(y_transform_check(&k).unwrap().passed);
    }

    #[test]
    fn missing_xi_is_reported() {
        let h = crate::sl2::build_uq_sl2(&qi(1), 1).unwrap();
        assert!(matches!(y_transform_check(&h), Err(HopfError::Invalid(_))));
    }
}
