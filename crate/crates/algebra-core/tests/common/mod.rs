#![allow(dead_code)]

use algebra_core::scalar_series::{q, qi, ExactScalar, HbarSeries, Q};
use algebra_core::*;

/// `sinh(αħH)/sinh(αħ)` as a polynomial in H.
pub fn sl2_bracket(alg: &Algebra, alpha: &Q) -> Element {
    let n = alg.order();
    let h = alg.gen("H").unwrap();
    let mut num = Element::zero(n);
    let mut hk = alg.one();
    let mut fact = qi(1);
    let mut apow = qi(1);
    for k in 1..=n + 1 {
        fact *= qi(k as i64);
        hk = alg.mul(&hk, &h).unwrap();
        if k % 2 == 1 {
            // α^{k−1} ħ^{k−1} H^k / k!
            let c = HbarSeries::monomial(ExactScalar::real(&apow / &fact), k - 1, n);
            num.add_scaled(&hk, &c);
        }
        apow *= alpha;
    }
    let mut den = Vec::with_capacity(n + 1);
    let mut fact = qi(1);
    for j in 0..=n {
        if j > 0 {
            fact *= qi(j as i64);
        }
        let c = if j % 2 == 0 { alpha.pow(j as i32) / (&fact * qi(j as i64 + 1)) } else { qi(0) };
        den.push(ExactScalar::real(c));
    }
    let den = HbarSeries::from_coeffs(den).inverse().unwrap();
    num.scale(&den)
}

/// Rewrite system of the q-deformed sl(2) in the order E < H < F.
pub fn sl2(alpha: Q, order: usize) -> Algebra {
    let t = GeneratorTable::from_names(&[("E", Parity::Even), ("H", Parity::Even), ("F", Parity::Even)]).unwrap();
    let mut a = Algebra::new(t, order);
    let e = a.gen("E").unwrap();
    let f = a.gen("F").unwrap();
    a.add_rule("H", "E", qi(0), e.scale_q(&qi(2))).unwrap();
    a.add_rule("F", "H", qi(0), f.scale_q(&qi(2))).unwrap();
    let br = sl2_bracket(&a, &alpha);
    a.add_rule("F", "E", qi(0), br.neg()).unwrap();
    a
}

pub fn q12() -> Q {
    q(1, 2)
}
