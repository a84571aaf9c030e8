use proptest::prelude::*;
use rmatrix::*;
use scalar_series::{q, Q};

fn rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn k_xi_is_quasitriangular_for_any_xi(xi in rational()) {
        let r = rmat_k_xi(&xi, 2).unwrap();
        prop_assert!(check_inverse(&r).passed);
        prop_assert!(check_quasi_cocommutativity(&r).passed);
        prop_assert!(check_ybe(&r).passed);
    }

    #[test]
    fn sl2_is_quasitriangular_for_any_deformation(alpha in rational()) {
        let r = rmat_uq_sl2(&alpha, 3).unwrap();
        prop_assert!(check_quasi_cocommutativity(&r).passed);
        prop_assert!(check_ybe(&r).passed);
    }

    #[test]
    fn first_order_is_affine_in_xi(a in rational(), b in rational()) {
        let ra = classical_limit_extract(&rmat_k_xi(&a, 1).unwrap()).unwrap();
        let rb = classical_limit_extract(&rmat_k_xi(&b, 1).unwrap()).unwrap();
        let r0 = classical_limit_extract(&rmat_k_xi(&q(0, 1), 1).unwrap()).unwrap();
        for (l, r) in [("E_C", "F_C"), ("H_C", "H_C")] {
            let da = ra.get(l, r).re().clone() - r0.get(l, r).re();
            let db = rb.get(l, r).re().clone() - r0.get(l, r).re();
            prop_assert_eq!(da * &b, db * &a);
        }
    }

    #[test]
    fn momentum_identities_for_any_xi(xi in rational()) {
        prop_assert!(check_momentum_conjugation(&rmat_k_xi(&xi, 2).unwrap()).passed);
    }
}
