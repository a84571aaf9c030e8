//! Power series of algebra and tensor elements: exp, the q-exponential and
//! substitution into a coefficient table.

use scalar_series::{qexp_coefficients, ExactScalar, HbarSeries, Q};

use crate::algebra::Algebra;
use crate::element::Element;
use crate::tensor::TensorElement;
use crate::AlgebraError;

/// Elements that can be multiplied by an [`Algebra`].
pub trait AlgebraValued: Clone {
    fn unit_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn add_scaled(&mut self, other: &Self, c: &HbarSeries);
    fn valuation(&self) -> Option<usize>;
    fn order(&self) -> usize;
    fn product(alg: &Algebra, a: &Self, b: &Self) -> Result<Self, AlgebraError>;
}

impl AlgebraValued for Element {
    fn unit_like(&self) -> Self {
        Element::one(self.order())
    }
    fn zero_like(&self) -> Self {
        Element::zero(self.order())
    }
    fn add_scaled(&mut self, other: &Self, c: &HbarSeries) {
        Element::add_scaled(self, other, c)
    }
    fn valuation(&self) -> Option<usize> {
        Element::valuation(self)
    }
    fn order(&self) -> usize {
        Element::order(self)
    }
    fn product(alg: &Algebra, a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        alg.mul(a, b)
    }
}

impl AlgebraValued for TensorElement {
    fn unit_like(&self) -> Self {
        TensorElement::one(self.rank(), self.order())
    }
    fn zero_like(&self) -> Self {
        TensorElement::zero(self.rank(), self.order())
    }
    fn add_scaled(&mut self, other: &Self, c: &HbarSeries) {
        TensorElement::add_scaled(self, other, c)
    }
    fn valuation(&self) -> Option<usize> {
        TensorElement::valuation(self)
    }
    fn order(&self) -> usize {
        TensorElement::order(self)
    }
    fn product(alg: &Algebra, a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        alg.tensor_mul(a, b)
    }
}

/// `Σ_k f_k xᵏ` for the listed coefficients. Powers whose coefficient is
/// zero are still formed (they feed later powers) but contribute nothing;
/// the loop stops once every remaining term is beyond the truncation order.
pub fn compose<T: AlgebraValued>(alg: &Algebra, coeffs: &[HbarSeries], x: &T) -> Result<T, AlgebraError> {
    let order = x.order();
    let vx = x.valuation().unwrap_or(order + 1);
    let mut acc = x.zero_like();
    let mut power = x.unit_like();
    for (k, f) in coeffs.iter().enumerate() {
        if k > 0 {
            if vx * k > order && vx > 0 {
                break;
            }
            power = T::product(alg, &power, x)?;
        }
        if !f.is_zero() {
            acc.add_scaled(&power, f);
        }
    }
    Ok(acc)
}

fn check_nilpotent<T: AlgebraValued>(x: &T) -> Result<(), AlgebraError> {
    match x.valuation() {
        Some(0) => Err(AlgebraError::NonNilpotentOrderZero),
        _ => Ok(()),
    }
}

/// `exp(x) = Σ xᵏ/k!`; needs every term of `x` to carry at least one ħ.
pub fn exp_element<T: AlgebraValued>(alg: &Algebra, x: &T) -> Result<T, AlgebraError> {
    check_nilpotent(x)?;
    let order = x.order();
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = Q::from_integer(1.into());
    for k in 0..=order {
        if k > 0 {
            fact *= Q::from_integer((k as i64).into());
        }
        coeffs.push(HbarSeries::constant(ExactScalar::real(fact.recip()), order));
    }
    compose(alg, &coeffs, x)
}

/// `exp_q[x] = Σ xⁿ/[n]!` with `q = e^{αħ}`; same precondition as [`exp_element`].
pub fn qexp_element<T: AlgebraValued>(alg: &Algebra, x: &T, alpha: &Q) -> Result<T, AlgebraError> {
    check_nilpotent(x)?;
    let order = x.order();
    compose(alg, &qexp_coefficients(order, alpha, order), x)
}
