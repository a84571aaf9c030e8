//! Gaussian rationals `re + i·im` with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::SeriesError;

/// Exact rational number.
pub type Q = BigRational;

/// Build the rational `n/d`. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parse `a`, `-a/b` into a rational.
pub fn parse_rational(s: &str) -> Result<Q, SeriesError> {
    let s = s.trim();
    let bad = || SeriesError::Parse(format!("invalid rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(SeriesError::DivisionByZero);
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// An exact element of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactScalar {
    re: Q,
    im: Q,
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ExactScalar {
    pub fn new(re: Q, im: Q) -> Self {
        Self { re, im }
    }

    pub fn real(re: Q) -> Self {
        Self { re, im: Q::zero() }
    }

    pub fn imag(im: Q) -> Self {
        Self { re: Q::zero(), im }
    }

    pub fn int(n: i64) -> Self {
        Self::real(qi(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::real(q(n, d))
    }

    pub fn zero() -> Self {
        Self { re: Q::zero(), im: Q::zero() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::imag(qi(1))
    }

    pub fn re(&self) -> &Q {
        &self.re
    }

    pub fn im(&self) -> &Q {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|re|² + |im|²`.
    pub fn norm_sqr(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `max(|re|, |im|)`, an exact size measure used by residual reports.
    pub fn max_abs(&self) -> Q {
        let a = self.re.abs();
        let b = self.im.abs();
        if a >= b {
            a
        } else {
            b
        }
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self { re: &self.re * k, im: &self.im * k }
    }

    pub fn inv(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Nearest `(re, im)` in double precision.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl From<Q> for ExactScalar {
    fn from(re: Q) -> Self {
        Self::real(re)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

fn fmt_q(x: &Q, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if x.denom().is_one() {
        write!(f, "{}", x.numer())
    } else {
        write!(f, "{}/{}", x.numer(), x.denom())
    }
}

/// Canonical text: `3`, `-1/2`, `2/3i`, `1/2-3i`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_q(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_q(&self.re, f)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        fmt_q(&self.im, f)?;
        write!(f, "i")
    }
}

impl FromStr for ExactScalar {
    type Err = SeriesError;

    /// Accepts `a/b`, `c/di`, `a/b+c/di`, `a/b - c/d i`, `i`, `-i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(SeriesError::Parse("empty scalar".into()));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&compact)?));
        };
        // Split at the last sign that is not the leading one.
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => qi(1),
            "-" => qi(-1),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
        };
        let re = if re_part.is_empty() { Q::zero() } else { parse_rational(re_part)? };
        Ok(Self { re, im })
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.is_zero() || o.is_zero() {
            return ExactScalar::zero();
        }
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => ExactScalar::real(&self.re * &o.re),
            (true, false) => ExactScalar { re: &self.re * &o.re, im: &self.re * &o.im },
            (false, true) => ExactScalar { re: &self.re * &o.re, im: &self.im * &o.re },
            (false, false) => {
                ExactScalar { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                (&self).$m(o)
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, o: &ExactScalar) {
        if o.is_zero() {
            return;
        }
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, o: &ExactScalar) {
        if o.is_zero() {
            return;
        }
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, o: &ExactScalar) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3", "-1/2", "2/3i", "1/2-3i", "-7+1/5i", "i", "-i", "0"] {
            let x: ExactScalar = s.parse().unwrap();
            let back: ExactScalar = x.to_string().parse().unwrap();
            assert_eq!(x, back, "{s}");
        }
        let x: ExactScalar = "1/2 + 3/4 i".parse().unwrap();
        assert_eq!(x, ExactScalar::new(q(1, 2), q(3, 4)));
        assert_eq!("-i".parse::<ExactScalar>().unwrap(), -ExactScalar::i());
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("abc".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = ExactScalar::i();
        assert_eq!(&i * &i, ExactScalar::int(-1));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let z = ExactScalar::new(q(1, 2), q(-3, 1));
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(matches!(ExactScalar::zero().inv(), Err(SeriesError::DivisionByZero)));
    }
}
