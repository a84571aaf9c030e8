//! Graded tensor products of PBW monomials.

use std::collections::BTreeMap;

use scalar_series::{ExactScalar, HbarSeries, Q};

use crate::element::Element;
use crate::monomial::Monomial;
use crate::table::GeneratorTable;
use crate::AlgebraError;

pub type Slots = Vec<Monomial>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    rank: usize,
    order: usize,
    terms: BTreeMap<Slots, HbarSeries>,
}

/// `(−1)^{Σ_{i>j} |x_i||y_j|}`: the sign picked up by moving each `y_j` past
/// the `x_i` standing to its right.
pub fn koszul_sign(xs: &[Monomial], ys: &[Monomial], table: &GeneratorTable) -> bool {
    let mut odd_to_right = 0usize;
    let mut flips = 0usize;
    for k in (0..xs.len()).rev() {
        if ys[k].is_odd(table) {
            flips += odd_to_right;
        }
        if xs[k].is_odd(table) {
            odd_to_right += 1;
        }
    }
    flips % 2 == 1
}

impl TensorElement {
    pub fn zero(rank: usize, order: usize) -> Self {
        Self { rank, order, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, order: usize) -> Self {
        let mut t = Self::zero(rank, order);
        t.add_term(vec![Monomial::identity(); rank], &HbarSeries::one(order));
        t
    }

    /// `x₁ ⊗ x₂ ⊗ …`.
    pub fn from_elements(xs: &[&Element]) -> Self {
        let order = xs.iter().map(|x| x.order()).min().unwrap_or(0);
        let mut acc = Self::one(0, order);
        for x in xs {
            acc = acc.extend_with(x);
        }
        acc
    }

    fn extend_with(&self, x: &Element) -> Self {
        let mut out = Self::zero(self.rank + 1, self.order.min(x.order()));
        for (slots, c) in &self.terms {
            for (m, d) in x.terms() {
                let mut s = slots.clone();
                s.push(m.clone());
                out.add_term(s, &c.mul_ref(d));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Slots, HbarSeries> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &[Monomial]) -> HbarSeries {
        self.terms.get(s).cloned().unwrap_or_else(|| HbarSeries::zero(self.order))
    }

    pub fn add_term(&mut self, s: Slots, c: &HbarSeries) {
        debug_assert_eq!(s.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let c = c.truncate(self.order);
        match self.terms.get_mut(&s) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &HbarSeries) {
        for (s, x) in &other.terms {
            let y = x.mul_ref(c);
            if !y.is_zero() {
                self.add_term(s.clone(), &y);
            }
        }
    }

    pub fn add(&self, o: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_rank(o)?;
        let mut out = self.clone();
        out.add_scaled(o, &HbarSeries::one(o.order));
        Ok(out)
    }

    pub fn sub(&self, o: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_rank(o)?;
        let mut out = self.clone();
        out.add_scaled(o, &HbarSeries::constant(ExactScalar::int(-1), o.order));
        Ok(out)
    }

    pub(crate) fn check_rank(&self, o: &TensorElement) -> Result<(), AlgebraError> {
        if self.rank != o.rank {
            return Err(AlgebraError::RankMismatch(self.rank, o.rank));
        }
        Ok(())
    }

    pub fn scale(&self, c: &HbarSeries) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order.min(c.order()));
        out.add_scaled(self, c);
        out
    }

    pub fn scale_scalar(&self, c: &ExactScalar) -> TensorElement {
        self.scale(&HbarSeries::constant(c.clone(), self.order))
    }

    pub fn scale_q(&self, c: &Q) -> TensorElement {
        self.scale_scalar(&ExactScalar::real(c.clone()))
    }

    pub fn neg(&self) -> TensorElement {
        self.scale_scalar(&ExactScalar::int(-1))
    }

    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(HbarSeries::valuation).min()
    }

    pub fn max_abs(&self) -> Q {
        self.terms.values().map(HbarSeries::max_abs).max().unwrap_or_else(|| Q::from_integer(0.into()))
    }

    pub fn hbar_coeff(&self, k: usize) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order);
        for (s, x) in &self.terms {
            out.add_term(s.clone(), &HbarSeries::constant(x.coeff(k), self.order));
        }
        out
    }

    pub fn truncate(&self, order: usize) -> TensorElement {
        let mut out = Self::zero(self.rank, order.min(self.order));
        for (s, x) in &self.terms {
            out.add_term(s.clone(), x);
        }
        out
    }

    /// Reorder slots: slot `k` of the result is slot `perm[k]` of `self`,
    /// with the Koszul sign of the permutation.
    pub fn permute(&self, perm: &[usize], table: &GeneratorTable) -> TensorElement {
        assert_eq!(perm.len(), self.rank);
        let mut out = Self::zero(self.rank, self.order);
        for (s, c) in &self.terms {
            let odd: Vec<bool> = s.iter().map(|m| m.is_odd(table)).collect();
            let mut flips = 0;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] && odd[perm[i]] && odd[perm[j]] {
                        flips += 1;
                    }
                }
            }
            let new: Slots = perm.iter().map(|&p| s[p].clone()).collect();
            let c = if flips % 2 == 1 { -c } else { c.clone() };
            out.add_term(new, &c);
        }
        out
    }

    /// Graded flip of a rank-2 tensor: `a⊗b ↦ (−1)^{|a||b|} b⊗a`.
    pub fn flip(&self, table: &GeneratorTable) -> TensorElement {
        self.permute(&[1, 0], table)
    }

    /// Insert an identity factor so that it becomes slot `pos`.
    pub fn insert_identity(&self, pos: usize) -> TensorElement {
        let mut out = Self::zero(self.rank + 1, self.order);
        for (s, c) in &self.terms {
            let mut s = s.clone();
            s.insert(pos, Monomial::identity());
            out.add_term(s, c);
        }
        out
    }

    /// Replace slot `slot` by the tensor `f(m)` of rank `r`, giving rank
    /// `rank − 1 + r`. The map must be even.
    pub fn map_slot<F>(&self, slot: usize, r: usize, mut f: F) -> Result<TensorElement, AlgebraError>
    where
        F: FnMut(&Monomial) -> Result<TensorElement, AlgebraError>,
    {
        let mut out = Self::zero(self.rank - 1 + r, self.order);
        for (s, c) in &self.terms {
            let image = f(&s[slot])?;
            for (t, d) in &image.terms {
                let mut new = Vec::with_capacity(out.rank);
                new.extend_from_slice(&s[..slot]);
                new.extend_from_slice(t);
                new.extend_from_slice(&s[slot + 1..]);
                out.add_term(new, &c.mul_ref(d));
            }
        }
        Ok(out)
    }

    /// Apply a scalar-valued map to slot `slot`, lowering the rank by one.
    pub fn contract_slot_scalar<F>(&self, slot: usize, mut f: F) -> TensorElement
    where
        F: FnMut(&Monomial) -> ExactScalar,
    {
        let mut out = Self::zero(self.rank - 1, self.order);
        for (s, c) in &self.terms {
            let k = f(&s[slot]);
            if k.is_zero() {
                continue;
            }
            let mut new = s.clone();
            new.remove(slot);
            out.add_term(new, &c.scale(&k));
        }
        out
    }

    /// View a rank-1 tensor as an element.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.rank, 1);
        let mut e = Element::zero(self.order);
        for (s, c) in &self.terms {
            e.add_term(s[0].clone(), c);
        }
        e
    }

    /// View a rank-0 tensor as a scalar series.
    pub fn to_scalar(&self) -> HbarSeries {
        assert_eq!(self.rank, 0);
        self.coeff(&[])
    }

    pub fn from_element(x: &Element) -> TensorElement {
        Self::from_elements(&[x])
    }

    pub fn format(&self, table: &GeneratorTable) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(s, c)| {
                let w: Vec<String> = s.iter().map(|m| m.format(table)).collect();
                format!("[{c}] {}", w.join(" | "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Parity;

    #[test]
    fn sign_counts_odd_pairs_crossing() {
        let t = GeneratorTable::from_names(&[("a", Parity::Odd), ("x", Parity::Even)]).unwrap();
        let a = Monomial::letter(0);
        let x = Monomial::letter(1);
        let id = Monomial::identity();
        // (1⊗a)(a⊗1): a moves past a.
        assert!(koszul_sign(&[id.clone(), a.clone()], &[a.clone(), id.clone()], &t));
        assert!(!koszul_sign(&[a.clone(), id.clone()], &[id.clone(), a.clone()], &t));
        assert!(!koszul_sign(&[id, x.clone()], &[a, x], &t));
    }

    #[test]
    fn flip_of_odd_pair_is_negative() {
        let t = GeneratorTable::from_names(&[("a", Parity::Odd), ("b", Parity::Odd)]).unwrap();
        let ab = TensorElement::from_elements(&[&Element::generator(0, 1), &Element::generator(1, 1)]);
        let ba = TensorElement::from_elements(&[&Element::generator(1, 1), &Element::generator(0, 1)]);
        assert_eq!(ab.flip(&t), ba.neg());
        assert_eq!(ab.flip(&t).flip(&t), ab);
    }
}
