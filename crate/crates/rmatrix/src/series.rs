use std::sync::Arc;

use algebra_core::{compose, Algebra, TensorElement};
use hopf_structures::HopfAlgebraDef;
use scalar_series::{ExactScalar, HbarSeries, Q};

use crate::RMatrixError;

/// An R-matrix with its inverse, truncated at the order of its algebra.
#[derive(Clone, Debug)]
pub struct RMatrixSeries {
    pub value: TensorElement,
    pub inverse: TensorElement,
    pub algebra: Arc<HopfAlgebraDef>,
    pub order: usize,
}

impl RMatrixSeries {
    /// Wraps `value`, computing the inverse by a Neumann series.
    pub fn new(algebra: Arc<HopfAlgebraDef>, value: TensorElement) -> Result<Self, RMatrixError> {
        let order = algebra.order();
        let inverse = neumann_inverse(algebra.algebra(), &value)?;
        Ok(Self { value, inverse, algebra, order })
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn alg(&self) -> &Algebra {
        self.algebra.algebra()
    }
}

/// `(1 + d)⁻¹ = Σ (−d)ᵏ` for `x = 1 + d`, `d` of ħ-order ≥ 1.
pub fn neumann_inverse(alg: &Algebra, x: &TensorElement) -> Result<TensorElement, RMatrixError> {
    let order = x.order();
    let one = TensorElement::one(x.rank(), order);
    let d = x.sub(&one)?;
    if d.valuation() == Some(0) {
        return Err(RMatrixError::Invalid("ħ-order-0 term is not the identity".into()));
    }
    let coeffs: Vec<HbarSeries> =
        (0..=order).map(|k| HbarSeries::constant(ExactScalar::int(if k % 2 == 0 { 1 } else { -1 }), order)).collect();
    Ok(compose(alg, &coeffs, &d)?)
}

/// `Σ_n c_n ħ^{k_n} xⁿ` over `n ≥ 0`, with `term(n) = (c_n, k_n)` and
/// `k_n` increasing; stops once `k_n` exceeds the order.
pub fn central_series<F>(alg: &Algebra, x: &TensorElement, mut term: F) -> Result<TensorElement, RMatrixError>
where
    F: FnMut(usize) -> (Q, usize),
{
    let order = alg.order();
    let mut out = TensorElement::zero(x.rank(), order);
    let mut power = TensorElement::one(x.rank(), order);
    for n in 0.. {
        let (c, k) = term(n);
        if k > order {
            break;
        }
        if n > 0 {
            power = alg.tensor_mul(&power, x)?;
        }
        out.add_scaled(&power, &HbarSeries::monomial(ExactScalar::real(c), k, order));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopf_structures::build_k_xi_iso3;
    use scalar_series::qi;

    #[test]
    fn neumann_inverts_one_plus_hbar_x() {
        let h = build_k_xi_iso3(&qi(1), 3).unwrap();
        let a = h.algebra();
        let x = TensorElement::from_elements(&[&a.gen("E_A").unwrap(), &a.gen("F_A").unwrap()]);
        let r = TensorElement::one(2, 3).add(&x.scale(&HbarSeries::hbar(3))).unwrap();
        let inv = neumann_inverse(a, &r).unwrap();
        assert_eq!(a.tensor_mul(&r, &inv).unwrap(), TensorElement::one(2, 3));
    }

    #[test]
    fn order_zero_deformation_is_rejected() {
        let h = build_k_xi_iso3(&qi(1), 2).unwrap();
        let a = h.algebra();
        let x = TensorElement::from_elements(&[&a.gen("E_A").unwrap(), &a.one()]);
        assert!(neumann_inverse(a, &x).is_err());
    }

    #[test]
    fn central_series_places_powers_at_their_orders() {
        let h = build_k_xi_iso3(&qi(0), 4).unwrap();
        let a = h.algebra();
        let x = TensorElement::from_elements(&[&a.gen("E_C").unwrap(), &a.gen("F_C").unwrap()]);
        let s = central_series(a, &x, |n| (qi(n as i64 + 1), 2 * n)).unwrap();
        let x2 = a.tensor_mul(&x, &x).unwrap();
        assert_eq!(s.hbar_coeff(0), TensorElement::one(2, 4));
        assert_eq!(s.hbar_coeff(2), x.hbar_coeff(0).scale_q(&qi(2)));
        assert_eq!(s.hbar_coeff(4), x2.scale_q(&qi(3)));
        assert!(s.hbar_coeff(1).is_zero());
    }
}
