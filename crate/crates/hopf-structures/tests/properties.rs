use hopf_structures::algebra_core::Element;
use hopf_structures::*;
use proptest::prelude::*;
use scalar_series::{q, Q};

fn rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

fn word(len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..6, 0..=len)
}

fn letters(h: &HopfAlgebraDef, w: &[u8]) -> Element {
    let a = h.algebra();
    w.iter().fold(a.one(), |acc, &g| a.mul(&acc, &Element::generator(g, h.order())).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kxi_is_a_hopf_algebra_for_any_xi(xi in rational()) {
        let mut h = build_k_xi_iso3(&xi, 3).unwrap();
        for r in hopf_suite(&mut h) {
            prop_assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn delta_is_an_algebra_map(xi in rational(), u in word(3), v in word(3)) {
        let h = build_k_xi_iso3(&xi, 3).unwrap();
        let a = h.algebra();
        let (x, y) = (letters(&h, &u), letters(&h, &v));
        let lhs = h.delta(&a.mul(&x, &y).unwrap()).unwrap();
        let rhs = a.tensor_mul(&h.delta(&x).unwrap(), &h.delta(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_reverses_products(xi in rational(), u in word(2), v in word(2)) {
        let mut h = build_k_xi_iso3(&xi, 3).unwrap();
        let s = derive_antipode(&h).unwrap();
        h.set_antipode(s);
        let a = h.algebra();
        let (x, y) = (letters(&h, &u), letters(&h, &v));
        let lhs = h.antipode_apply(&a.mul(&x, &y).unwrap()).unwrap();
        let rhs = a.mul(&h.antipode_apply(&y).unwrap(), &h.antipode_apply(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ad_t_is_inverted_by_minus_log_t(xi in rational(), u in word(3)) {
        let p = build_poincare(&xi, 3).unwrap();
        let a = p.algebra();
        let lt = log_t(&p).unwrap();
        let x = letters(&p, &u);
        let there = ad_t(a, &lt, &x).unwrap();
        prop_assert_eq!(ad_t(a, &lt.neg(), &there).unwrap(), x);
    }

    #[test]
    fn x_is_central_for_any_xi(xi in rational()) {
        let h = build_k_xi_iso3(&xi, 3).unwrap();
        prop_assert!(check_centrality(&h, &invariant_x(&h).unwrap()).unwrap().passed);
    }

    #[test]
    fn contraction_residuals_shrink(num in 1i64..=3, xi in rational()) {
        let eps = q(num, 20);
        for r in ratio_test(&eps, &xi, -1, 2).unwrap() {
            prop_assert!(r.converges(&q(3, 2)), "{r:?}");
        }
    }
}
