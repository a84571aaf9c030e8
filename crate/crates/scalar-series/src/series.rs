//! Truncated power series in ħ with exact coefficients.
//!
//! A series of order `N` stores the coefficients of ħ⁰ … ħᴺ. Binary
//! operations truncate to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::Zero;

use crate::scalar::{ExactScalar, Q};
use crate::SeriesError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HbarSeries {
    coeffs: Vec<ExactScalar>,
}

impl HbarSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![ExactScalar::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactScalar::one(), order)
    }

    pub fn constant(c: ExactScalar, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·ħᵏ`, or zero when `k` exceeds the order.
    pub fn monomial(c: ExactScalar, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series ħ.
    pub fn hbar(order: usize) -> Self {
        Self::monomial(ExactScalar::one(), 1, order)
    }

    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<ExactScalar>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the ħ⁰ coefficient");
        Self { coeffs }
    }

    /// `e^{αħ}`.
    pub fn q_pow(alpha: &Q, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = ExactScalar::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term.scale(&(alpha / Q::from_integer((k as i64).into())));
            coeffs.push(term.clone());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Coefficient of ħᵏ; zero beyond the order.
    pub fn coeff(&self, k: usize) -> ExactScalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn set_coeff(&mut self, k: usize, c: ExactScalar) {
        if k <= self.order() {
            self.coeffs[k] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ExactScalar::is_zero)
    }

    /// Lowest power of ħ with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lower the order to `min(order, self.order())`.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    /// Multiply by ħᵏ, dropping what falls beyond the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut s = Self::zero(n);
        for j in 0..=n {
            if j + k <= n {
                s.coeffs[j + k] = self.coeffs[j].clone();
            }
        }
        s
    }

    /// Divide by ħᵏ. The result has order `N - k` because the top `k`
    /// coefficients of the quotient are unknown.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByHbar(k));
        }
        if k > self.order() {
            return Err(SeriesError::NotDivisibleByHbar(k));
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![ExactScalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += &(a * b);
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero ħ⁰ coefficient.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.inv()?;
        let n = self.order();
        let mut b = vec![ExactScalar::zero(); n + 1];
        b[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = ExactScalar::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !b[k - j].is_zero() {
                    acc += &(&self.coeffs[j] * &b[k - j]);
                }
            }
            b[k] = -(&acc * &inv0);
        }
        Ok(Self { coeffs: b })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul_ref(&o.inverse()?))
    }

    /// Substitute `self` (no constant term) into `Σ f_k xᵏ`.
    pub fn compose(&self, f: &[ExactScalar]) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut acc = Self::zero(n);
        let mut power = Self::one(n);
        for (k, fk) in f.iter().enumerate() {
            if k > n {
                break;
            }
            if !fk.is_zero() {
                acc += &power.scale(fk);
            }
            power = power.mul_ref(self);
        }
        Ok(acc)
    }

    pub fn exp(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        let mut f = Vec::with_capacity(n + 1);
        let mut fact = Q::from_integer(1.into());
        for k in 0..=n {
            if k > 0 {
                fact *= Q::from_integer((k as i64).into());
            }
            f.push(ExactScalar::real(fact.recip()));
        }
        self.compose(&f)
    }

    /// `log(1 + a)`.
    pub fn log1p(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        let mut f = vec![ExactScalar::zero()];
        for k in 1..=n as i64 {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            f.push(ExactScalar::ratio(sign, k));
        }
        self.compose(&f)
    }

    /// Largest `max(|re|,|im|)` over the coefficients.
    pub fn max_abs(&self) -> Q {
        self.coeffs.iter().map(ExactScalar::max_abs).fold(Q::zero(), |a, b| if b > a { b } else { a })
    }
}

impl fmt::Display for HbarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})h")?,
                _ => write!(f, "({c})h^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

fn zip_with(a: &HbarSeries, b: &HbarSeries, sub: bool) -> HbarSeries {
    let n = a.order().min(b.order());
    let coeffs = (0..=n).map(|k| if sub { &a.coeffs[k] - &b.coeffs[k] } else { &a.coeffs[k] + &b.coeffs[k] }).collect();
    HbarSeries { coeffs }
}

impl Add<&HbarSeries> for &HbarSeries {
    type Output = HbarSeries;
    fn add(self, o: &HbarSeries) -> HbarSeries {
        zip_with(self, o, false)
    }
}

impl Sub<&HbarSeries> for &HbarSeries {
    type Output = HbarSeries;
    fn sub(self, o: &HbarSeries) -> HbarSeries {
        zip_with(self, o, true)
    }
}

impl Mul<&HbarSeries> for &HbarSeries {
    type Output = HbarSeries;
    fn mul(self, o: &HbarSeries) -> HbarSeries {
        self.mul_ref(o)
    }
}

impl Neg for &HbarSeries {
    type Output = HbarSeries;
    fn neg(self) -> HbarSeries {
        HbarSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for HbarSeries {
    type Output = HbarSeries;
    fn neg(self) -> HbarSeries {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<HbarSeries> for HbarSeries {
            type Output = HbarSeries;
            fn $m(self, o: HbarSeries) -> HbarSeries {
                (&self).$m(&o)
            }
        }
        impl $tr<&HbarSeries> for HbarSeries {
            type Output = HbarSeries;
            fn $m(self, o: &HbarSeries) -> HbarSeries {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&HbarSeries> for HbarSeries {
    fn add_assign(&mut self, o: &HbarSeries) {
        if o.order() < self.order() {
            self.coeffs.truncate(o.order() + 1);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&HbarSeries> for HbarSeries {
    fn sub_assign(&mut self, o: &HbarSeries) {
        if o.order() < self.order() {
            self.coeffs.truncate(o.order() + 1);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a -= b;
        }
    }
}
