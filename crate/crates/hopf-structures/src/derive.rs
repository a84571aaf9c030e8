//! Completion of a rule table from q-commutator definitions of composite
//! letters, by the graded q-Jacobi identity.
//!
//! A composite letter `c = s·[x, y]_γ` lets any product `c·a` be expanded
//! as `s(x·y·a − σe^{γħ} y·x·a)`, and any `b·c` as `s(b·x·y − σe^{γħ} b·y·x)`,
//! where σ = (−1)^{|x||y|}. Triple products are evaluated by moving the
//! outer letter across, never by rewriting the defining pair itself; when
//! that needs a pair in the wrong order the existing rule is inverted. Each
//! pass installs every product that can be evaluated with the rules known
//! so far; passes repeat until nothing changes.

use algebra_core::{Algebra, AlgebraError, Element, Monomial, RewriteRule};
use scalar_series::{ExactScalar, HbarSeries, Q};

use crate::HopfError;

/// `letter = scale · [x, y]_γ`.
#[derive(Clone, Debug)]
pub struct Definitional {
    pub letter: u8,
    pub x: u8,
    pub y: u8,
    pub gamma: Q,
    pub scale: HbarSeries,
    /// Install the defining pair as a rule; otherwise the identity is only
    /// used for expansion.
    pub seed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct DeriveLog {
    pub passes: usize,
    pub derived: Vec<(String, String)>,
    pub unresolved: Vec<(String, String)>,
}

fn gen(alg: &Algebra, g: u8) -> Element {
    Element::generator(g, alg.order())
}

fn sigma(alg: &Algebra, x: u8, y: u8) -> i64 {
    if alg.table().is_odd(x) && alg.table().is_odd(y) {
        -1
    } else {
        1
    }
}

/// `±e^{αħ}` of an installed rule.
fn lead(alg: &Algebra, b: u8, a: u8) -> Result<(HbarSeries, Element), AlgebraError> {
    let r = alg.rule(b, a).ok_or_else(|| AlgebraError::MissingRule {
        b: alg.table().name(b).to_string(),
        a: alg.table().name(a).to_string(),
    })?;
    let s = sigma(alg, b, a);
    Ok((HbarSeries::q_pow(&r.alpha, alg.order()).scale(&ExactScalar::int(s)), r.tail.clone()))
}

/// `lhs·rhs` where `lhs·rhs` with `lhs < rhs` is already normal; otherwise
/// the engine product.
fn mul_gen(alg: &Algebra, u: u8, v: &Element) -> Result<Element, AlgebraError> {
    alg.mul(&gen(alg, u), v)
}

/// `u·v·a`, avoiding the rewrite of `u·v`.
fn pull(alg: &Algebra, u: u8, v: u8, a: u8) -> Result<Element, AlgebraError> {
    if v >= a {
        let va = alg.mul(&gen(alg, v), &gen(alg, a))?;
        return mul_gen(alg, u, &va);
    }
    // v·a = lead⁻¹(a·v − tail) for the installed rule a·v.
    let (l, tail) = lead(alg, a, v)?;
    let ua = mul_gen(alg, u, &gen(alg, a))?;
    let uav = alg.mul(&ua, &gen(alg, v))?;
    let ut = mul_gen(alg, u, &tail)?;
    Ok(uav.sub(&ut).scale(&l.inverse()?))
}

/// `b·x·y`, avoiding the rewrite of `x·y`.
fn push(alg: &Algebra, b: u8, x: u8, y: u8) -> Result<Element, AlgebraError> {
    if b >= x {
        let bx = alg.mul(&gen(alg, b), &gen(alg, x))?;
        return alg.mul(&bx, &gen(alg, y));
    }
    // b·x = lead⁻¹(x·b − tail) for the installed rule x·b.
    let (l, tail) = lead(alg, x, b)?;
    let by = alg.mul(&gen(alg, b), &gen(alg, y))?;
    let xby = mul_gen(alg, x, &by)?;
    let ty = alg.mul(&tail, &gen(alg, y))?;
    Ok(xby.sub(&ty).scale(&l.inverse()?))
}

fn expand(
    alg: &Algebra,
    d: &Definitional,
    f: impl Fn(u8, u8) -> Result<Element, AlgebraError>,
) -> Result<Element, AlgebraError> {
    let q = HbarSeries::q_pow(&d.gamma, alg.order()).scale(&ExactScalar::int(sigma(alg, d.x, d.y)));
    let xy = f(d.x, d.y)?;
    let yx = f(d.y, d.x)?;
    Ok(xy.sub(&yx.scale(&q)).scale(&d.scale))
}

/// Normal form of `b·a` (b > a) by any applicable expansion.
fn try_pair(alg: &Algebra, defs: &[Definitional], b: u8, a: u8) -> Option<Element> {
    for d in defs.iter().filter(|d| d.letter == b) {
        if let Ok(v) = expand(alg, d, |x, y| pull(alg, x, y, a)) {
            return Some(v);
        }
    }
    for d in defs.iter().filter(|d| d.letter == a) {
        if let Ok(v) = expand(alg, d, |x, y| push(alg, b, x, y)) {
            return Some(v);
        }
    }
    None
}

/// Split the normal form of `b·a` into a rule.
fn to_rule(alg: &Algebra, b: u8, a: u8, nf: &Element) -> Result<RewriteRule, HopfError> {
    let ab = Monomial::from_pairs(&[(a, 1), (b, 1)], alg.table())?;
    let c = nf.coeff(&ab);
    let s = ExactScalar::int(sigma(alg, b, a));
    if c.coeff(0) != s {
        return Err(HopfError::Invalid(format!(
            "{}·{} does not reorder to ±{}·{}",
            alg.table().name(b),
            alg.table().name(a),
            alg.table().name(a),
            alg.table().name(b)
        )));
    }
    let alpha = (&c.coeff(1) * &s).re().clone();
    let lead = HbarSeries::q_pow(&alpha, alg.order()).scale(&s);
    let mut tail = nf.clone();
    tail.add_term(ab, &-lead);
    Ok(RewriteRule { b, a, alpha, tail })
}

/// Install the seed rules of `defs`, then derive every missing pair.
pub fn derive_rules(alg: &mut Algebra, defs: &[Definitional]) -> Result<DeriveLog, HopfError> {
    let order = alg.order();
    for d in defs.iter().filter(|d| d.seed) {
        // letter = s(xy − σq^γ yx)  ⇒  the out-of-order product in terms of the other.
        let c = gen(alg, d.letter).scale(&d.scale.inverse()?);
        let sg = sigma(alg, d.x, d.y);
        let rule = if d.x > d.y {
            RewriteRule { b: d.x, a: d.y, alpha: d.gamma.clone(), tail: c }
        } else {
            let k = HbarSeries::q_pow(&-d.gamma.clone(), order).scale(&ExactScalar::int(-sg));
            RewriteRule { b: d.y, a: d.x, alpha: -d.gamma.clone(), tail: c.scale(&k) }
        };
        alg.set_rule(rule)?;
    }
    let n = alg.table().len() as u8;
    let mut log = DeriveLog::default();
    loop {
        log.passes += 1;
        let missing: Vec<(u8, u8)> =
            (0..n).flat_map(|b| (0..b).map(move |a| (b, a))).filter(|&(b, a)| !alg.has_rule(b, a)).collect();
        if missing.is_empty() {
            break;
        }
        let mut progress = false;
        for (b, a) in missing {
            if let Some(nf) = try_pair(alg, defs, b, a) {
                let rule = to_rule(alg, b, a, &nf)?;
                alg.set_rule(rule)?;
                log.derived.push((alg.table().name(b).to_string(), alg.table().name(a).to_string()));
                progress = true;
            }
        }
        if !progress {
            log.unresolved = (0..n)
                .flat_map(|b| (0..b).map(move |a| (b, a)))
                .filter(|&(b, a)| !alg.has_rule(b, a))
                .map(|(b, a)| (alg.table().name(b).to_string(), alg.table().name(a).to_string()))
                .collect();
            break;
        }
    }
    Ok(log)
}
