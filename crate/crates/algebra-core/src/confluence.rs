//! Local confluence of a rule table over all overlap words.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::monomial::Monomial;
use crate::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapFailure {
    /// The overlap word, as generator names.
    pub word: Vec<String>,
    /// Lowest ħ-order of the discrepancy, or the error text.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub overlaps_checked: usize,
    pub failures: Vec<OverlapFailure>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rule_nf(alg: &Algebra, b: u8, a: u8) -> Result<Element, AlgebraError> {
    let rule = alg.rule(b, a).ok_or_else(|| AlgebraError::MissingRule {
        b: alg.table().name(b).to_string(),
        a: alg.table().name(a).to_string(),
    })?;
    let sign = if alg.table().is_odd(a) && alg.table().is_odd(b) { -1 } else { 1 };
    let lead = scalar_series::HbarSeries::q_pow(&rule.alpha, alg.order()).scale(&scalar_series::ExactScalar::int(sign));
    let mut e = rule.tail.clone();
    e.add_term(Monomial::from_pairs(&[(a, 1), (b, 1)], alg.table())?, &lead);
    Ok(e)
}

fn left_first(alg: &Algebra, c: u8, b: u8, a: u8) -> Result<Element, AlgebraError> {
    // (c·b)·a
    let cb = if c == b { zero_or_square(alg, c)? } else { rule_nf(alg, c, b)? };
    alg.mul(&cb, &Element::generator(a, alg.order()))
}

fn right_first(alg: &Algebra, c: u8, b: u8, a: u8) -> Result<Element, AlgebraError> {
    // c·(b·a)
    let ba = if b == a { zero_or_square(alg, b)? } else { rule_nf(alg, b, a)? };
    alg.mul(&Element::generator(c, alg.order()), &ba)
}

fn zero_or_square(alg: &Algebra, g: u8) -> Result<Element, AlgebraError> {
    if alg.table().is_odd(g) {
        Ok(Element::zero(alg.order()))
    } else {
        Ok(Element::term(Monomial::from_pairs(&[(g, 2)], alg.table())?, scalar_series::HbarSeries::one(alg.order())))
    }
}

/// Check every overlap `c·b·a` with `c > b > a`, plus the nilpotency
/// overlaps `b·b·a` and `b·a·a` for odd letters.
pub fn check_local_confluence(alg: &Algebra) -> ConfluenceReport {
    let n = alg.table().len() as u8;
    let mut report = ConfluenceReport::default();
    let mut words = Vec::new();
    for c in 0..n {
        for b in 0..c {
            for a in 0..b {
                words.push((c, b, a));
            }
            if alg.table().is_odd(c) {
                words.push((c, c, b));
            }
            if alg.table().is_odd(b) {
                words.push((c, b, b));
            }
        }
    }
    for (c, b, a) in words {
        report.overlaps_checked += 1;
        let name = |g: u8| alg.table().name(g).to_string();
        let word = vec![name(c), name(b), name(a)];
        match (left_first(alg, c, b, a), right_first(alg, c, b, a)) {
            (Ok(l), Ok(r)) => {
                let d = l.sub(&r);
                if !d.is_zero() {
                    let k = d.valuation().unwrap_or(0);
                    report.failures.push(OverlapFailure { word, detail: format!("differ at hbar^{k}") });
                }
            }
            (Err(e), _) | (_, Err(e)) => report.failures.push(OverlapFailure { word, detail: e.to_string() }),
        }
    }
    report
}
