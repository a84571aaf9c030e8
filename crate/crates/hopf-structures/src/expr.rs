//! Cartan-type series: q-powers, hyperbolic combinations and q-brackets of
//! an element `h` whose powers commute (a combination of Cartan letters or
//! a central element). Here q = e^ħ.

use algebra_core::{exp_element, Algebra, Element};
use scalar_series::{qi, ExactScalar, HbarSeries, Q};

use crate::HopfError;

fn factorial(k: usize) -> Q {
    (1..=k as i64).fold(qi(1), |acc, j| acc * qi(j))
}

/// `Σ_k c_k ħ^{k+shift} hᵏ` for the coefficient function `c`.
fn power_series(
    alg: &Algebra,
    h: &Element,
    max_power: usize,
    shift: impl Fn(usize) -> Option<(usize, Q)>,
) -> Result<Element, HopfError> {
    let order = alg.order();
    let mut out = alg.zero();
    let mut pw = alg.one();
    for k in 0..=max_power {
        if k > 0 {
            pw = alg.mul(&pw, h)?;
        }
        if let Some((hbar, c)) = shift(k) {
            if hbar <= order && !c.eq(&qi(0)) {
                out = out.add(&pw.shift_up(hbar).scale_q(&c));
            }
        }
    }
    Ok(out)
}

/// `q^{a h} = e^{aħh}`.
pub fn qpow(alg: &Algebra, h: &Element, a: &Q) -> Result<Element, HopfError> {
    Ok(exp_element(alg, &h.shift_up(1).scale_q(a))?)
}

/// `(q^{ah} − q^{−ah})/(2ħ) = Σ_{k odd} aᵏ ħ^{k−1} hᵏ/k!`.
pub fn sinh_over_2hbar(alg: &Algebra, h: &Element, a: &Q) -> Result<Element, HopfError> {
    let n = alg.order() + 1;
    power_series(alg, h, n, |k| (k % 2 == 1).then(|| (k - 1, pow_q(a, k) / factorial(k))))
}

/// `(q^{ah} + q^{−ah})/2`.
pub fn cosh(alg: &Algebra, h: &Element, a: &Q) -> Result<Element, HopfError> {
    power_series(alg, h, alg.order(), |k| (k % 2 == 0).then(|| (k, pow_q(a, k) / factorial(k))))
}

/// `(q^{ah} − q^{−ah})/(q^a − q^{−a})`; equals `h` at `a = 0`.
pub fn q_bracket(alg: &Algebra, h: &Element, a: &Q) -> Result<Element, HopfError> {
    let order = alg.order();
    let num = power_series(alg, h, order + 1, |k| (k % 2 == 1).then(|| (k - 1, pow_q(a, k - 1) / factorial(k))))?;
    let den = sinh_ratio_series(a, order);
    Ok(num.scale(&den.inverse()?))
}

/// `sinh(aħ)/(aħ)` as a scalar series (1 at a = 0).
pub fn sinh_ratio_series(a: &Q, order: usize) -> HbarSeries {
    let coeffs = (0..=order)
        .map(|k| if k % 2 == 0 { ExactScalar::real(pow_q(a, k) / factorial(k + 1)) } else { ExactScalar::zero() })
        .collect();
    HbarSeries::from_coeffs(coeffs)
}

/// `(q^{h/2} − q^{−h/2})²/(4ħ²) = Σ_{k≥1} ħ^{2k−2} h^{2k}/(2·(2k)!)`.
pub fn sinh_half_squared_over_hbar2(alg: &Algebra, h: &Element) -> Result<Element, HopfError> {
    let order = alg.order();
    power_series(alg, h, order + 2, |k| (k >= 2 && k % 2 == 0).then(|| (k - 2, (qi(2) * factorial(k)).recip())))
}

pub fn pow_q(a: &Q, k: usize) -> Q {
    (0..k).fold(qi(1), |acc, _| acc * a)
}

/// `q^a` as a scalar series.
pub fn qs(a: &Q, order: usize) -> HbarSeries {
    HbarSeries::q_pow(a, order)
}

/// `q^a − q^{−a}` as a scalar series.
pub fn q_minus_qinv(a: &Q, order: usize) -> HbarSeries {
    &qs(a, order) - &qs(&-a.clone(), order)
}
