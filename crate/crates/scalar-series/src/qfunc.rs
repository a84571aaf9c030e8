//! q-numbers, q-factorials and the coefficient tables of the q-exponential,
//! its logarithm, Li₂ and log(1−x)/x. Throughout, q = e^{αħ}.

use crate::scalar::{q, qi, ExactScalar, Q};
use crate::series::HbarSeries;

/// `[n] = (1 − qⁿ)/(1 − q)` expanded in ħ. At α = 0 this is the constant `n`.
pub fn q_number(n: i64, alpha: &Q, order: usize) -> HbarSeries {
    // Both (qⁿ−1) and (q−1) are divisible by αħ; divide first so that
    // α = 0 needs no special case.
    let nq = qi(n);
    let mut num = Vec::with_capacity(order + 1);
    let mut den = Vec::with_capacity(order + 1);
    let mut fact = qi(1);
    let mut a_pow = qi(1);
    let mut n_pow = nq.clone();
    for k in 1..=order + 1 {
        fact *= qi(k as i64);
        num.push(ExactScalar::real(&n_pow * &a_pow / &fact));
        den.push(ExactScalar::real(&a_pow / &fact));
        a_pow *= alpha;
        n_pow *= &nq;
    }
    let den = HbarSeries::from_coeffs(den);
    HbarSeries::from_coeffs(num).checked_div(&den).expect("denominator has constant term 1")
}

/// `[n]! = [1][2]⋯[n]`, with `[0]! = 1`.
pub fn q_factorial(n: u32, alpha: &Q, order: usize) -> HbarSeries {
    (1..=n as i64).fold(HbarSeries::one(order), |acc, k| acc.mul_ref(&q_number(k, alpha, order)))
}

/// Coefficients `1/[n]!` of `exp_q[X] = Σ Xⁿ/[n]!` for `n = 0…n_max`.
pub fn qexp_coefficients(n_max: usize, alpha: &Q, order: usize) -> Vec<HbarSeries> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut fact = HbarSeries::one(order);
    out.push(fact.clone());
    for n in 1..=n_max {
        fact = fact.mul_ref(&q_number(n as i64, alpha, order));
        out.push(fact.inverse().expect("[n]! has constant term n!"));
    }
    out
}

/// Coefficients `c_n = (1−q)^{n−1}/(n[n])` of `log exp_q[X] = Σ c_n Xⁿ`,
/// returned for `n = 1…n_max` (entry `k` holds `c_{k+1}`).
pub fn qdilog_coefficients(n_max: usize, alpha: &Q, order: usize) -> Vec<HbarSeries> {
    let one_minus_q = &HbarSeries::one(order) - &HbarSeries::q_pow(alpha, order);
    let mut out = Vec::with_capacity(n_max);
    let mut pow = HbarSeries::one(order);
    for n in 1..=n_max {
        let denom = q_number(n as i64, alpha, order).scale_q(&qi(n as i64));
        out.push(pow.checked_div(&denom).expect("[n] has constant term n"));
        pow = pow.mul_ref(&one_minus_q);
    }
    out
}

/// Near q = 1 the coefficient `c_n` starts as `(−αħ)^{n−1}/n²`, which sums to
/// `−Li₂(−αħX)/(αħ)`. Returns that leading prediction for `n = 1…n_max`.
pub fn qdilog_leading_terms(n_max: usize, alpha: &Q, order: usize) -> Vec<HbarSeries> {
    dilog_series(n_max)
        .into_iter()
        .enumerate()
        .map(|(k, li)| {
            // k = n − 1; −Li₂(−εX)/ε contributes −(−ε)ⁿ/(ε n²) = (−ε)^{n−1}/n².
            let mut c = li;
            for _ in 0..k {
                c = c.scale(&-alpha.clone());
            }
            HbarSeries::monomial(c, k, order)
        })
        .collect()
}

/// Li₂(x) = Σ_{n≥1} xⁿ/n². Entry `k` is the coefficient of x^{k+1}.
pub fn dilog_series(n_max: usize) -> Vec<ExactScalar> {
    (1..=n_max as i64).map(|n| ExactScalar::real(q(1, n * n))).collect()
}

/// log(1−x)/x = −Σ_{n≥0} xⁿ/(n+1). Entry `k` is the coefficient of xᵏ.
pub fn log1m_over_x_series(n_max: usize) -> Vec<ExactScalar> {
    (0..n_max as i64).map(|n| ExactScalar::real(q(-1, n + 1))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[(i64, i64)]) -> HbarSeries {
        HbarSeries::from_coeffs(cs.iter().map(|&(n, d)| ExactScalar::ratio(n, d)).collect())
    }

    #[test]
    fn q_number_two_is_one_plus_q() {
        let one_plus_q = &HbarSeries::one(4) + &HbarSeries::q_pow(&qi(1), 4);
        assert_eq!(q_number(2, &qi(1), 4), one_plus_q);
    }

    #[test]
    fn q_number_three() {
        assert_eq!(q_number(3, &qi(1), 2), s(&[(3, 1), (3, 1), (5, 2)]));
    }

    #[test]
    fn q_number_at_alpha_zero_is_n() {
        for n in 0..6 {
            assert_eq!(q_number(n, &qi(0), 3), HbarSeries::constant(ExactScalar::int(n), 3));
        }
    }

    #[test]
    fn q_factorial_small() {
        assert_eq!(q_factorial(0, &qi(1), 3), HbarSeries::one(3));
        assert_eq!(q_factorial(1, &qi(1), 3), HbarSeries::one(3));
        // [2][3] = (2 + ħ)(3 + 3ħ)
        assert_eq!(q_factorial(3, &qi(1), 1), s(&[(6, 1), (9, 1)]));
    }

    #[test]
    fn qdilog_low_coefficients() {
        let c = qdilog_coefficients(3, &qi(1), 2);
        assert_eq!(c[0], HbarSeries::one(2));
        assert_eq!(c[1].coeff(0), ExactScalar::zero());
        assert_eq!(c[1].coeff(1), ExactScalar::ratio(-1, 4));
    }

    #[test]
    fn dilog_tables() {
        let li = dilog_series(3);
        assert_eq!(li, vec![ExactScalar::one(), ExactScalar::ratio(1, 4), ExactScalar::ratio(1, 9)]);
        assert_eq!(log1m_over_x_series(1)[0], ExactScalar::int(-1));
    }
}
