//! Word-level rewriting with a caller-chosen redex. Independent of the
//! memoised engine, so it serves as a cross-check of strategy independence.

use std::collections::BTreeMap;

use scalar_series::{ExactScalar, HbarSeries};

use crate::algebra::Algebra;
use crate::element::Element;
use crate::monomial::Monomial;
use crate::AlgebraError;

/// Reduce a raw word to normal form. At each step `choose` is given the
/// number of reducible positions in the current word and picks one.
/// Returns the normal form and the number of rewrite steps taken.
pub fn reduce_word_by<F>(
    alg: &Algebra,
    word: &[u8],
    mut choose: F,
    max_steps: usize,
) -> Result<(Element, usize), AlgebraError>
where
    F: FnMut(usize) -> usize,
{
    let table = alg.table();
    let order = alg.order();
    let mut pending: BTreeMap<Vec<u8>, HbarSeries> = BTreeMap::new();
    pending.insert(word.to_vec(), HbarSeries::one(order));
    let mut out = Element::zero(order);
    let mut steps = 0usize;
    while let Some((w, c)) = pending.pop_first() {
        let redexes: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && table.is_odd(w[i])))
            .collect();
        if redexes.is_empty() {
            let mut pairs: Vec<(u8, u32)> = Vec::new();
            for &g in &w {
                match pairs.last_mut() {
                    Some((x, e)) if *x == g => *e += 1,
                    _ => pairs.push((g, 1)),
                }
            }
            out.add_term(Monomial::from_pairs(&pairs, table)?, &c);
            continue;
        }
        steps += 1;
        if steps > max_steps {
            return Err(AlgebraError::NonTermination);
        }
        let i = redexes[choose(redexes.len()) % redexes.len()];
        let (b, a) = (w[i], w[i + 1]);
        if b == a {
            continue;
        }
        let rule = alg
            .rule(b, a)
            .ok_or_else(|| AlgebraError::MissingRule { b: table.name(b).to_string(), a: table.name(a).to_string() })?;
        let sign = if table.is_odd(a) && table.is_odd(b) { -1 } else { 1 };
        let lead = HbarSeries::q_pow(&rule.alpha, order).scale(&ExactScalar::int(sign));
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        push(&mut pending, swapped, &c.mul_ref(&lead));
        for (m, d) in rule.tail.terms() {
            let mut nw = w[..i].to_vec();
            nw.extend(m.letters());
            nw.extend_from_slice(&w[i + 2..]);
            push(&mut pending, nw, &c.mul_ref(d));
        }
    }
    Ok((out, steps))
}

fn push(pending: &mut BTreeMap<Vec<u8>, HbarSeries>, w: Vec<u8>, c: &HbarSeries) {
    if c.is_zero() {
        return;
    }
    match pending.get_mut(&w) {
        Some(old) => {
            *old += c;
            if old.is_zero() {
                pending.remove(&w);
            }
        }
        None => {
            pending.insert(w, c.clone());
        }
    }
}

/// Leftmost-innermost reduction of a raw word.
pub fn reduce_word(alg: &Algebra, word: &[u8]) -> Result<Element, AlgebraError> {
    Ok(reduce_word_by(alg, word, |_| 0, 1_000_000)?.0)
}
