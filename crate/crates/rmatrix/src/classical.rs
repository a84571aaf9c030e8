use algebra_core::Monomial;
use scalar_series::ExactScalar;

use crate::series::RMatrixSeries;
use crate::RMatrixError;

/// A rank-2 tensor over generator names with constant coefficients,
/// sorted by `(left, right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderTensor {
    pub entries: Vec<(String, String, ExactScalar)>,
}

impl FirstOrderTensor {
    pub fn get(&self, a: &str, b: &str) -> ExactScalar {
        self.entries
            .iter()
            .find(|(x, y, _)| x == a && y == b)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(ExactScalar::zero)
    }
}

fn single_letter(m: &Monomial) -> Option<u8> {
    match m.pairs() {
        [(g, 1)] => Some(*g),
        _ => None,
    }
}

/// `r` in `R = 1⊗1 + 2ħr + O(ħ²)`: the ħ¹ coefficient halved. Every term
/// must be a product of one letter in each slot.
pub fn classical_limit_extract(r: &RMatrixSeries) -> Result<FirstOrderTensor, RMatrixError> {
    if r.order < 1 {
        return Err(RMatrixError::Invalid("needs order at least 1".into()));
    }
    let t = r.algebra.table();
    let half = scalar_series::q(1, 2);
    let mut entries = Vec::new();
    for (slots, c) in r.value.terms() {
        let c1 = c.coeff(1);
        if c1.is_zero() {
            continue;
        }
        match (single_letter(&slots[0]), single_letter(&slots[1])) {
            (Some(a), Some(b)) => entries.push((t.name(a).to_string(), t.name(b).to_string(), c1.scale(&half))),
            _ => return Err(RMatrixError::NonlinearFirstOrder(slots[0].degree(), slots[1].degree())),
        }
    }
    entries.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    Ok(FirstOrderTensor { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{rmat_k_xi, rmat_uq_sl2};
    use algebra_core::TensorElement;
    use hopf_structures::build_uq_sl2;
    use scalar_series::{q, qi, HbarSeries};
    use std::sync::Arc;

    #[test]
    fn sl2_r_is_alpha_times_the_first_order_bracket_over_two() {
        let r = classical_limit_extract(&rmat_uq_sl2(&q(2, 3), 2).unwrap()).unwrap();
        assert_eq!(r.get("E", "F"), ExactScalar::real(q(2, 3)));
        assert_eq!(r.get("H", "H"), ExactScalar::real(q(1, 6)));
        assert_eq!(r.entries.len(), 2);
    }

    #[test]
    fn identity_gives_zero() {
        let h = build_uq_sl2(&qi(1), 2).unwrap();
        let r = RMatrixSeries::new(Arc::new(h), TensorElement::one(2, 2)).unwrap();
        assert!(classical_limit_extract(&r).unwrap().entries.is_empty());
    }

    #[test]
    fn quadratic_first_order_is_rejected() {
        let h = build_uq_sl2(&qi(1), 2).unwrap();
        let a = h.algebra();
        let x = TensorElement::from_elements(&[&a.word(&["E", "E"]).unwrap(), &a.gen("F").unwrap()]);
        let r = TensorElement::one(2, 2).add(&x.scale(&HbarSeries::hbar(2))).unwrap();
        let r = RMatrixSeries::new(Arc::new(h), r).unwrap();
        assert_eq!(classical_limit_extract(&r), Err(RMatrixError::NonlinearFirstOrder(2, 1)));
    }

    #[test]
    fn k_xi_entries() {
        let r = classical_limit_extract(&rmat_k_xi(&qi(-2), 2).unwrap()).unwrap();
        assert_eq!(r.get("E_C", "F_C"), ExactScalar::int(-2));
        assert_eq!(r.get("H_C", "H_C"), ExactScalar::ratio(-1, 2));
        assert_eq!(r.get("H_A", "H_C"), ExactScalar::ratio(1, 4));
        assert_eq!(r.get("E_A", "F_A"), ExactScalar::zero());
    }
}
