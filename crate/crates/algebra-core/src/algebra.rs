//! The rewriting engine: PBW normal ordering driven by a rule table.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use scalar_series::{ExactScalar, HbarSeries, Q};

use crate::element::Element;
use crate::monomial::Monomial;
use crate::table::GeneratorTable;
use crate::tensor::{koszul_sign, TensorElement};
use crate::AlgebraError;

/// `b·a → (−1)^{|a||b|} e^{αħ} a·b + tail`, for `b` after `a` in PBW order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub b: u8,
    pub a: u8,
    pub alpha: Q,
    pub tail: Element,
}

#[derive(Debug)]
struct CompiledRule {
    rule: RewriteRule,
    lead: HbarSeries,
}

const MAX_DEPTH: usize = 4096;

/// A generator table with its rewrite rules, at a fixed truncation order.
#[derive(Debug)]
pub struct Algebra {
    table: GeneratorTable,
    order: usize,
    rules: HashMap<(u8, u8), CompiledRule>,
    gen_cache: RwLock<HashMap<(Monomial, u8), Arc<Element>>>,
    mono_cache: RwLock<HashMap<(Monomial, Monomial), Arc<Element>>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        let mut a = Algebra::new(self.table.clone(), self.order);
        for r in self.rules() {
            a.rules.insert((r.b, r.a), CompiledRule { lead: self.rules[&(r.b, r.a)].lead.clone(), rule: r.clone() });
        }
        a
    }
}

impl Algebra {
    pub fn new(table: GeneratorTable, order: usize) -> Self {
        Self {
            table,
            order,
            rules: HashMap::new(),
            gen_cache: RwLock::new(HashMap::new()),
            mono_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    pub fn table_mut(&mut self) -> &mut GeneratorTable {
        &mut self.table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gen(&self, name: &str) -> Result<Element, AlgebraError> {
        Ok(Element::generator(self.table.index(name)?, self.order))
    }

    pub fn one(&self) -> Element {
        Element::one(self.order)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.order)
    }

    pub fn scalar(&self, c: ExactScalar) -> Element {
        Element::scalar(HbarSeries::constant(c, self.order))
    }

    /// Rules in a deterministic order (by `(b, a)`).
    pub fn rules(&self) -> Vec<&RewriteRule> {
        let mut keys: Vec<_> = self.rules.keys().copied().collect();
        keys.sort();
        keys.into_iter().map(|k| &self.rules[&k].rule).collect()
    }

    pub fn rule(&self, b: u8, a: u8) -> Option<&RewriteRule> {
        self.rules.get(&(b, a)).map(|r| &r.rule)
    }

    pub fn has_rule(&self, b: u8, a: u8) -> bool {
        self.rules.contains_key(&(b, a))
    }

    /// Install or replace a rule. Cached products are discarded.
    pub fn set_rule(&mut self, rule: RewriteRule) -> Result<(), AlgebraError> {
        let n = self.table.len();
        if rule.b as usize >= n || rule.a as usize >= n {
            return Err(AlgebraError::UnknownGenerator(format!("#{}", rule.b.max(rule.a))));
        }
        if rule.b <= rule.a {
            return Err(AlgebraError::Invalid(format!(
                "rule {}·{} is not out of order",
                self.table.name(rule.b),
                self.table.name(rule.a)
            )));
        }
        let sign = if self.table.is_odd(rule.a) && self.table.is_odd(rule.b) { -1 } else { 1 };
        let lead = HbarSeries::q_pow(&rule.alpha, self.order).scale(&ExactScalar::int(sign));
        let tail = rule.tail.truncate(self.order);
        self.rules.insert((rule.b, rule.a), CompiledRule { rule: RewriteRule { tail, ..rule }, lead });
        self.clear_cache();
        Ok(())
    }

    /// Convenience form of [`set_rule`](Self::set_rule) using names.
    pub fn add_rule(&mut self, b: &str, a: &str, alpha: Q, tail: Element) -> Result<(), AlgebraError> {
        let rule = RewriteRule { b: self.table.index(b)?, a: self.table.index(a)?, alpha, tail };
        self.set_rule(rule)
    }

    pub fn remove_rule(&mut self, b: u8, a: u8) {
        self.rules.remove(&(b, a));
        self.clear_cache();
    }

    /// Number of memoised `monomial·letter` products; each entry is one
    /// distinct reduction performed.
    pub fn cache_size(&self) -> usize {
        self.gen_cache.read().unwrap().len()
    }

    pub fn clear_cache(&self) {
        self.gen_cache.write().unwrap().clear();
        self.mono_cache.write().unwrap().clear();
    }

    /// `m·g` in normal form.
    pub fn mul_mono_gen(&self, m: &Monomial, g: u8) -> Result<Arc<Element>, AlgebraError> {
        self.mono_gen(m, g, 0)
    }

    fn mono_gen(&self, m: &Monomial, g: u8, depth: usize) -> Result<Arc<Element>, AlgebraError> {
        if depth > MAX_DEPTH {
            return Err(AlgebraError::NonTermination);
        }
        let key = (m.clone(), g);
        if let Some(hit) = self.gen_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let one = HbarSeries::one(self.order);
        let result = match m.last() {
            None => Element::term(Monomial::letter(g), one),
            Some((x, _)) if x < g => Element::term(m.push(g), one),
            Some((x, _)) if x == g => {
                if self.table.is_odd(g) {
                    Element::zero(self.order)
                } else {
                    Element::term(m.push(g), one)
                }
            }
            Some((x, _)) => {
                let rule = self.rules.get(&(x, g)).ok_or_else(|| AlgebraError::MissingRule {
                    b: self.table.name(x).to_string(),
                    a: self.table.name(g).to_string(),
                })?;
                // m = p·x, so m·g = lead·(p·g)·x + p·tail.
                let p = m.pop();
                let mut out = Element::zero(self.order);
                let pg = self.mono_gen(&p, g, depth + 1)?;
                for (mm, c) in pg.terms() {
                    let t = self.mono_gen(mm, x, depth + 1)?;
                    out.add_scaled(&t, &c.mul_ref(&rule.lead));
                }
                for (tm, c) in rule.rule.tail.terms() {
                    let t = self.mono_mono(&p, tm, depth + 1)?;
                    out.add_scaled(&t, c);
                }
                out
            }
        };
        let result = Arc::new(result);
        self.gen_cache.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    /// `m₁·m₂` in normal form.
    pub fn mul_mono_mono(&self, m1: &Monomial, m2: &Monomial) -> Result<Arc<Element>, AlgebraError> {
        self.mono_mono(m1, m2, 0)
    }

    fn mono_mono(&self, m1: &Monomial, m2: &Monomial, depth: usize) -> Result<Arc<Element>, AlgebraError> {
        if m2.is_identity() {
            return Ok(Arc::new(Element::term(m1.clone(), HbarSeries::one(self.order))));
        }
        if m2.degree() == 1 {
            return self.mono_gen(m1, m2.pairs()[0].0, depth);
        }
        let key = (m1.clone(), m2.clone());
        if let Some(hit) = self.mono_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        // m₁·(m₂' ·g) = (m₁·m₂')·g with g the last letter of m₂.
        let (g, _) = m2.last().unwrap();
        let head = self.mono_mono(m1, &m2.pop(), depth + 1)?;
        let mut out = Element::zero(self.order);
        for (m, c) in head.terms() {
            let t = self.mono_gen(m, g, depth + 1)?;
            out.add_scaled(&t, c);
        }
        let out = Arc::new(out);
        self.mono_cache.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.order.min(x.order()).min(y.order()));
        for (mx, cx) in x.terms() {
            let vx = cx.valuation().unwrap_or(0);
            for (my, cy) in y.terms() {
                if vx + cy.valuation().unwrap_or(0) > out.order() {
                    continue;
                }
                let c = cx.mul_ref(cy);
                if c.is_zero() {
                    continue;
                }
                let p = self.mono_mono(mx, my, 0)?;
                out.add_scaled(&p, &c);
            }
        }
        Ok(out)
    }

    /// Product of several factors, left to right.
    pub fn mul_all(&self, xs: &[&Element]) -> Result<Element, AlgebraError> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Normal form of a word given as generator names, e.g. `["F", "E", "E"]`.
    pub fn word(&self, names: &[&str]) -> Result<Element, AlgebraError> {
        let mut acc = self.one();
        for n in names {
            let g = self.table.index(n)?;
            acc = self.mul(&acc, &Element::generator(g, self.order))?;
        }
        Ok(acc)
    }

    /// Normal form of a raw letter sequence.
    pub fn normal_form_letters(&self, letters: &[u8]) -> Result<Element, AlgebraError> {
        let mut acc = Element::term(Monomial::identity(), HbarSeries::one(self.order));
        for &g in letters {
            let mut next = Element::zero(self.order);
            for (m, c) in acc.terms() {
                next.add_scaled(&*self.mono_gen(m, g, 0)?, c);
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &Element, e: u32) -> Result<Element, AlgebraError> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Graded q-commutator `xy − (−1)^{|x||y|} e^{αħ} yx`, bilinear over
    /// parity-homogeneous terms.
    pub fn q_commutator(&self, x: &Element, y: &Element, alpha: &Q) -> Result<Element, AlgebraError> {
        let q = HbarSeries::q_pow(alpha, self.order);
        let mut out = Element::zero(self.order);
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                let c = cx.mul_ref(cy);
                if c.is_zero() {
                    continue;
                }
                let xy = self.mono_mono(mx, my, 0)?;
                let yx = self.mono_mono(my, mx, 0)?;
                let odd = mx.is_odd(&self.table) && my.is_odd(&self.table);
                out.add_scaled(&xy, &c);
                let k = if odd { q.clone() } else { -&q };
                out.add_scaled(&yx, &c.mul_ref(&k));
            }
        }
        Ok(out)
    }

    /// Graded commutator (α = 0).
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.q_commutator(x, y, &Q::from_integer(0.into()))
    }

    /// Product in the graded tensor power: `(x₁⊗x₂)(y₁⊗y₂) = (−1)^{|x₂||y₁|} x₁y₁ ⊗ x₂y₂`.
    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement, AlgebraError> {
        x.check_rank(y)?;
        let rank = x.rank();
        let order = self.order.min(x.order()).min(y.order());
        let mut out = TensorElement::zero(rank, order);
        for (xs, cx) in x.terms() {
            let vx = cx.valuation().unwrap_or(0);
            for (ys, cy) in y.terms() {
                if vx + cy.valuation().unwrap_or(0) > order {
                    continue;
                }
                let mut c = cx.mul_ref(cy);
                if c.is_zero() {
                    continue;
                }
                if koszul_sign(xs, ys, &self.table) {
                    c = -c;
                }
                let mut partial: Vec<(Vec<Monomial>, HbarSeries)> = vec![(Vec::with_capacity(rank), c)];
                for k in 0..rank {
                    let p = self.mono_mono(&xs[k], &ys[k], 0)?;
                    let mut next = Vec::with_capacity(partial.len() * p.len());
                    for (slots, d) in &partial {
                        let vd = d.valuation().unwrap_or(0);
                        for (m, e) in p.terms() {
                            if vd + e.valuation().unwrap_or(0) > order {
                                continue;
                            }
                            let f = d.mul_ref(e);
                            if f.is_zero() {
                                continue;
                            }
                            let mut s = slots.clone();
                            s.push(m.clone());
                            next.push((s, f));
                        }
                    }
                    partial = next;
                }
                for (s, f) in partial {
                    out.add_term(s, &f);
                }
            }
        }
        Ok(out)
    }

    /// Graded commutator of tensors of equal rank.
    pub fn tensor_commutator(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.tensor_mul(x, y)?.sub(&self.tensor_mul(y, x)?)
    }

    /// Multiply adjacent slots `slot` and `slot + 1`, with no sign (the
    /// multiplication map is even and the slots are already adjacent).
    pub fn contract_slots(&self, t: &TensorElement, slot: usize) -> Result<TensorElement, AlgebraError> {
        let mut out = TensorElement::zero(t.rank() - 1, t.order());
        for (s, c) in t.terms() {
            let p = self.mono_mono(&s[slot], &s[slot + 1], 0)?;
            for (m, d) in p.terms() {
                let mut new = Vec::with_capacity(t.rank() - 1);
                new.extend_from_slice(&s[..slot]);
                new.push(m.clone());
                new.extend_from_slice(&s[slot + 2..]);
                out.add_term(new, &c.mul_ref(d));
            }
        }
        Ok(out)
    }
}
