//! Linear combinations of PBW monomials with ħ-series coefficients.

use std::collections::BTreeMap;

use scalar_series::{ExactScalar, HbarSeries, Q};

use crate::monomial::Monomial;
use crate::table::GeneratorTable;

/// An element of the algebra in normal form. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    order: usize,
    terms: BTreeMap<Monomial, HbarSeries>,
}

impl Element {
    pub fn zero(order: usize) -> Self {
        Self { order, terms: BTreeMap::new() }
    }

    pub fn one(order: usize) -> Self {
        Self::scalar(HbarSeries::one(order))
    }

    pub fn scalar(c: HbarSeries) -> Self {
        Self::term(Monomial::identity(), c)
    }

    pub fn term(m: Monomial, c: HbarSeries) -> Self {
        let mut e = Self::zero(c.order());
        e.add_term(m, &c);
        e
    }

    pub fn generator(g: u8, order: usize) -> Self {
        Self::term(Monomial::letter(g), HbarSeries::one(order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, HbarSeries> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> HbarSeries {
        self.terms.get(m).cloned().unwrap_or_else(|| HbarSeries::zero(self.order))
    }

    pub fn add_term(&mut self, m: Monomial, c: &HbarSeries) {
        if c.is_zero() {
            return;
        }
        let c = c.truncate(self.order);
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Element, c: &HbarSeries) {
        for (m, x) in &other.terms {
            let y = x.mul_ref(c);
            if !y.is_zero() {
                self.add_term(m.clone(), &y);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Element {
        self.scale_scalar(&ExactScalar::int(-1))
    }

    pub fn scale(&self, c: &HbarSeries) -> Element {
        let mut out = Element::zero(self.order.min(c.order()));
        out.add_scaled(self, c);
        out
    }

    pub fn scale_scalar(&self, c: &ExactScalar) -> Element {
        let mut out = Element::zero(self.order);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &x.scale(c));
        }
        out
    }

    pub fn scale_q(&self, c: &Q) -> Element {
        self.scale_scalar(&ExactScalar::real(c.clone()))
    }

    /// Multiply every coefficient by ħᵏ.
    pub fn shift_up(&self, k: usize) -> Element {
        let mut out = Element::zero(self.order);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &x.shift_up(k));
        }
        out
    }

    /// Smallest ħ-valuation over all coefficients; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(HbarSeries::valuation).min()
    }

    /// The ħᵏ coefficient as an element with constant coefficients.
    pub fn hbar_coeff(&self, k: usize) -> Element {
        let mut out = Element::zero(self.order);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &HbarSeries::constant(x.coeff(k), self.order));
        }
        out
    }

    pub fn truncate(&self, order: usize) -> Element {
        let mut out = Element::zero(order.min(self.order));
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x);
        }
        out
    }

    /// Largest coefficient size over all terms and orders.
    pub fn max_abs(&self) -> Q {
        self.terms.values().map(HbarSeries::max_abs).max().unwrap_or_default()
    }

    /// Lowest ħ-order at which `self` is nonzero.
    pub fn first_nonzero_order(&self) -> Option<usize> {
        self.valuation()
    }

    pub fn format(&self, table: &GeneratorTable) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(m, c)| format!("[{c}] {}", m.format(table))).collect::<Vec<_>>().join(" + ")
    }
}
