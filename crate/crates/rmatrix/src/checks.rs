//! Quasi-triangularity and the momentum-conjugation identities, all exact
//! to the truncation order.

use algebra_core::{Element, TensorElement};
use hopf_structures::{qpow, CheckReport, Residuals};
use rayon::prelude::*;
use scalar_series::{qi, Q};

use crate::build::{rmat_product_prelimit, Pairing};
use crate::series::{central_series, RMatrixSeries};
use crate::RMatrixError;

fn collect(check: &str, items: Vec<Result<(String, TensorElement), RMatrixError>>) -> CheckReport {
    let mut res = Residuals::new();
    for item in items {
        match item {
            Ok((label, r)) => res.add(&label, &r),
            Err(e) => return CheckReport::fail(check, e.to_string()),
        }
    }
    res.report(check)
}

/// R·R⁻¹ = R⁻¹·R = 1⊗1.
pub fn check_inverse(r: &RMatrixSeries) -> CheckReport {
    let alg = r.alg();
    let one = TensorElement::one(2, r.order);
    let items = vec![
        alg.tensor_mul(&r.value, &r.inverse).and_then(|x| x.sub(&one)).map(|x| ("R R^-1".to_string(), x)),
        alg.tensor_mul(&r.inverse, &r.value).and_then(|x| x.sub(&one)).map(|x| ("R^-1 R".to_string(), x)),
    ];
    collect("inverse", items.into_iter().map(|i| i.map_err(Into::into)).collect())
}

/// R·Δ(g) = Δ^cop(g)·R for every generator g.
pub fn check_quasi_cocommutativity(r: &RMatrixSeries) -> CheckReport {
    let h = &r.algebra;
    let alg = h.algebra();
    let items = (0..h.table().len() as u8)
        .into_par_iter()
        .map(|g| {
            let d = h.coproduct_of(g);
            let lhs = alg.tensor_mul(&r.value, d)?;
            let rhs = alg.tensor_mul(&d.flip(h.table()), &r.value)?;
            Ok((format!("R Delta({})", h.table().name(g)), lhs.sub(&rhs)?))
        })
        .collect();
    collect("quasi_cocommutativity", items)
}

/// `R₁₂, R₁₃, R₂₃` as rank-3 tensors.
fn legs(r: &TensorElement) -> [TensorElement; 3] {
    [r.insert_identity(2), r.insert_identity(1), r.insert_identity(0)]
}

/// R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂.
pub fn check_ybe(r: &RMatrixSeries) -> CheckReport {
    let alg = r.alg();
    let [r12, r13, r23] = legs(&r.value);
    let (lhs, rhs) = rayon::join(
        || alg.tensor_mul(&alg.tensor_mul(&r12, &r13)?, &r23),
        || alg.tensor_mul(&alg.tensor_mul(&r23, &r13)?, &r12),
    );
    let item = lhs.and_then(|l| rhs.and_then(|r| l.sub(&r))).map(|x| ("R12 R13 R23 - R23 R13 R12".to_string(), x));
    collect("ybe", vec![item.map_err(Into::into)])
}

/// (Δ⊗id)R = R₁₃R₂₃ and (id⊗Δ)R = R₁₃R₁₂.
pub fn check_hexagon(r: &RMatrixSeries) -> CheckReport {
    let h = &r.algebra;
    let alg = h.algebra();
    let [r12, r13, r23] = legs(&r.value);
    let sides = [(0usize, &r13, &r23, "(Delta x id)R"), (1, &r13, &r12, "(id x Delta)R")];
    let items = sides
        .par_iter()
        .map(|(slot, a, b, label)| {
            let lhs = h.delta_on_slot(&r.value, *slot)?;
            let rhs = alg.tensor_mul(a, b)?;
            Ok((label.to_string(), lhs.sub(&rhs)?))
        })
        .collect();
    collect("hexagon", items)
}

fn pair(a: &Element, b: &Element) -> TensorElement {
    TensorElement::from_elements(&[a, b])
}

/// `R⁻¹ x R` minus the predicted right side for the six C-sector
/// identities of K_ξ(iso(3)). With W = q^{H_C}E_C ⊗ q^{−H_C}F_C:
/// E_C⊗1 ↦ E_C⊗q^{−H_C}, 1⊗F_C ↦ q^{H_C}⊗F_C, H_C⊗1 ↦ H_C⊗1 − ħ⁻¹log(1−4ħ²W),
/// 1⊗H_C ↦ 1⊗H_C + ħ⁻¹log(1−4ħ²W),
/// F_C⊗1 ↦ F_C⊗q^{H_C} + 1⊗F_C − (q^{2H_C}⊗F_C)(1−4ħ²W)⁻¹,
/// 1⊗E_C ↦ q^{−H_C}⊗E_C + E_C⊗1 − (E_C⊗q^{−2H_C})(1−4ħ²W)⁻¹.
pub fn momentum_conjugation_residuals(r: &RMatrixSeries) -> Result<Vec<(String, TensorElement)>, RMatrixError> {
    let alg = r.alg();
    let g = |n: &str| alg.gen(n);
    let (ec, fc, hc) = (g("E_C")?, g("F_C")?, g("H_C")?);
    let one = alg.one();
    let qh = |a: i64| qpow(alg, &hc, &qi(a));
    let w = pair(&alg.mul(&qh(1)?, &ec)?, &alg.mul(&qh(-1)?, &fc)?);
    let four_pow = |n: usize| (0..n).fold(qi(1), |a, _| a * qi(4));
    // −ħ⁻¹log(1−4ħ²W) = Σ_{n≥1} 4ⁿ ħ^{2n−1} Wⁿ/n.
    let log_term =
        central_series(alg, &w, |n| if n == 0 { (qi(0), 0) } else { (four_pow(n) / qi(n as i64), 2 * n - 1) })?;
    let geometric = central_series(alg, &w, |n| (four_pow(n), 2 * n))?;
    let conj = |x: &TensorElement| -> Result<TensorElement, RMatrixError> {
        Ok(alg.tensor_mul(&alg.tensor_mul(&r.inverse, x)?, &r.value)?)
    };
    let cases: Vec<(&str, TensorElement, TensorElement)> = vec![
        ("E_C (x) 1", pair(&ec, &one), pair(&ec, &qh(-1)?)),
        ("1 (x) F_C", pair(&one, &fc), pair(&qh(1)?, &fc)),
        ("H_C (x) 1", pair(&hc, &one), pair(&hc, &one).add(&log_term)?),
        ("1 (x) H_C", pair(&one, &hc), pair(&one, &hc).sub(&log_term)?),
        (
            "F_C (x) 1",
            pair(&fc, &one),
            pair(&fc, &qh(1)?).add(&pair(&one, &fc))?.sub(&alg.tensor_mul(&pair(&qh(2)?, &fc), &geometric)?)?,
        ),
        (
            "1 (x) E_C",
            pair(&one, &ec),
            pair(&qh(-1)?, &ec).add(&pair(&ec, &one))?.sub(&alg.tensor_mul(&pair(&ec, &qh(-2)?), &geometric)?)?,
        ),
    ];
    cases.into_par_iter().map(|(label, x, rhs)| Ok((format!("R^-1 ({label}) R"), conj(&x)?.sub(&rhs)?))).collect()
}

pub fn check_momentum_conjugation(r: &RMatrixSeries) -> CheckReport {
    match momentum_conjugation_residuals(r) {
        Ok(items) => collect("momentum_conjugation", items.into_iter().map(Ok).collect()),
        Err(e) => CheckReport::fail("momentum_conjugation", e.to_string()),
    }
}

/// Norms of the contracted pre-limit R-matrix minus the K_ξ R-matrix at
/// ε, ε/2, ε/4 and their successive ratios (≈ 2 for an O(ε) residual).
#[derive(Clone, Debug)]
pub struct PrelimitResidual {
    pub pairing: Pairing,
    pub epsilons: Vec<Q>,
    pub norms: Vec<Q>,
    pub ratios: Vec<Option<Q>>,
}

impl PrelimitResidual {
    pub fn within(&self, lo: &Q, hi: &Q) -> bool {
        self.ratios.iter().all(|r| r.as_ref().is_some_and(|r| r >= lo && r <= hi))
    }
}

pub fn prelimit_ratio_test(
    epsilon: &Q,
    xi: &Q,
    order: usize,
    pairing: Pairing,
) -> Result<PrelimitResidual, RMatrixError> {
    let limit = crate::build::rmat_k_xi(xi, order)?;
    let epsilons: Vec<Q> = (0..3).map(|k| epsilon / qi(1 << k)).collect();
    let norms = epsilons
        .par_iter()
        .map(|e| Ok(rmat_product_prelimit(e, xi, order, pairing)?.contracted.sub(&limit.value)?.max_abs()))
        .collect::<Result<Vec<Q>, RMatrixError>>()?;
    let ratios = norms.windows(2).map(|w| (w[1] != qi(0)).then(|| &w[0] / &w[1])).collect();
    Ok(PrelimitResidual { pairing, epsilons, norms, ratios })
}
