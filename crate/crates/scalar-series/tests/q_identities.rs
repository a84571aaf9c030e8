use proptest::prelude::*;
use scalar_series::*;

/// Polynomials in a commuting formal variable X with series coefficients,
/// truncated above X^n_max.
fn poly_mul(a: &[HbarSeries], b: &[HbarSeries], n_max: usize, order: usize) -> Vec<HbarSeries> {
    let mut out = vec![HbarSeries::zero(order); n_max + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= n_max {
                out[i + j] += &x.mul_ref(y);
            }
        }
    }
    out
}

fn poly_exp(p: &[HbarSeries], n_max: usize, order: usize) -> Vec<HbarSeries> {
    assert!(p[0].is_zero());
    let mut out = vec![HbarSeries::zero(order); n_max + 1];
    let mut term = vec![HbarSeries::zero(order); n_max + 1];
    term[0] = HbarSeries::one(order);
    for k in 0..=n_max {
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
        term = poly_mul(&term, p, n_max, order);
        let inv = q(1, k as i64 + 1);
        term = term.iter().map(|t| t.scale_q(&inv)).collect();
    }
    out
}

/// [n] as the explicit geometric sum 1 + q + … + q^{n−1}.
fn q_number_oracle(n: i64, alpha: &Q, order: usize) -> HbarSeries {
    (0..n).fold(HbarSeries::zero(order), |acc, k| &acc + &HbarSeries::q_pow(&(alpha * qi(k)), order))
}

#[test]
fn q_exponential_is_exp_of_q_dilog() {
    let (order, n_max) = (6, 8);
    for alpha in [qi(1), q(-2, 1), q(3, 7)] {
        let c = qdilog_coefficients(n_max, &alpha, order);
        let mut p = vec![HbarSeries::zero(order)];
        p.extend(c);
        let lhs = poly_exp(&p, n_max, order);
        let rhs = qexp_coefficients(n_max, &alpha, order);
        assert_eq!(lhs, rhs, "alpha = {alpha}");
    }
}

#[test]
fn q_numbers_match_geometric_sums() {
    for alpha in [qi(1), q(-1, 2), q(5, 3)] {
        for n in 0..9 {
            assert_eq!(q_number(n, &alpha, 6), q_number_oracle(n, &alpha, 6));
        }
    }
}

#[test]
fn q_number_times_one_minus_q() {
    let order = 6;
    for alpha in [qi(1), q(-3, 4)] {
        let one = HbarSeries::one(order);
        let qa = HbarSeries::q_pow(&alpha, order);
        for n in 0..9 {
            let lhs = q_number(n, &alpha, order).mul_ref(&(&one - &qa));
            let rhs = &one - &HbarSeries::q_pow(&(&alpha * qi(n)), order);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn q_factorial_has_constant_term_n_factorial() {
    let mut f = 1;
    for n in 0..9u32 {
        if n > 0 {
            f *= n as i64;
        }
        assert_eq!(q_factorial(n, &q(2, 3), 6).coeff(0), ExactScalar::int(f));
    }
}

#[test]
fn q_dilog_near_one_reduces_to_dilogarithm() {
    let (order, n_max) = (6, 8);
    for alpha in [qi(1), q(1, 10), q(-7, 3)] {
        let c = qdilog_coefficients(n_max, &alpha, order);
        let lead = qdilog_leading_terms(n_max, &alpha, order);
        for (k, (ck, lk)) in c.iter().zip(&lead).enumerate() {
            // c_{k+1} = (−αħ)^k/(k+1)² + O(ħ^{k+1}).
            for j in 0..=k.min(order) {
                assert_eq!(ck.coeff(j), lk.coeff(j), "n={} j={j}", k + 1);
            }
        }
    }
    // At α = 0 only the linear term survives.
    let c0 = qdilog_coefficients(n_max, &qi(0), order);
    assert_eq!(c0[0], HbarSeries::one(order));
    assert!(c0[1..].iter().all(HbarSeries::is_zero));
}

#[test]
fn log_over_x_is_minus_dilog_derivative() {
    let li = dilog_series(10);
    let lg = log1m_over_x_series(10);
    for k in 0..10 {
        assert_eq!(lg[k], -li[k].scale(&qi(k as i64 + 1)));
    }
}

fn arb_series(order: usize) -> impl Strategy<Value = HbarSeries> {
    prop::collection::vec((-20i64..20, 1i64..6, -5i64..5), order + 1).prop_map(|v| {
        HbarSeries::from_coeffs(v.into_iter().map(|(n, d, m)| ExactScalar::new(q(n, d), q(m, d))).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_series(8), b in arb_series(8), c in arb_series(8)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn exp_is_a_homomorphism(a in arb_series(6), b in arb_series(6)) {
        let mut a = a;
        let mut b = b;
        a.set_coeff(0, ExactScalar::zero());
        b.set_coeff(0, ExactScalar::zero());
        let lhs = (&a + &b).exp().unwrap();
        prop_assert_eq!(lhs, &a.exp().unwrap() * &b.exp().unwrap());
        let back = (&a.exp().unwrap() - &HbarSeries::one(6)).log1p().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn inverse_multiplies_to_one(a in arb_series(6)) {
        prop_assume!(!a.coeff(0).is_zero());
        prop_assert_eq!(&a * &a.inverse().unwrap(), HbarSeries::one(6));
    }
}
