//! Hopf-axiom verification. Every check reports the lowest ħ-order at which
//! a residual survives and how many tensor terms it has there.

use algebra_core::{check_local_confluence, Element, TensorElement};
use rayon::prelude::*;
use scalar_series::HbarSeries;

use crate::hopf::HopfAlgebraDef;
use crate::remap::{substitute, substitute_tensor};
use crate::HopfError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub first_failing_order: Option<usize>,
    pub failing_term_count: usize,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(check: &str, detail: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            passed: true,
            first_failing_order: None,
            failing_term_count: 0,
            detail: detail.into(),
        }
    }

    pub fn fail(check: &str, detail: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            passed: false,
            first_failing_order: None,
            failing_term_count: 0,
            detail: detail.into(),
        }
    }
}

/// Accumulates labelled residual tensors into one report.
#[derive(Default)]
pub struct Residuals {
    checked: usize,
    worst: Option<(usize, usize, String)>,
}

impl Residuals {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, label: &str, r: &TensorElement) {
        self.checked += 1;
        if let Some(v) = r.valuation() {
            let n = r.hbar_coeff(v).len();
            match &mut self.worst {
                Some((w, _, _)) if *w < v => {}
                Some((w, count, _)) if *w == v => *count += n,
                _ => self.worst = Some((v, n, label.to_string())),
            }
        }
    }

    pub fn add_element(&mut self, label: &str, r: &Element) {
        self.add(label, &TensorElement::from_element(r));
    }

    pub fn report(self, check: &str) -> CheckReport {
        match self.worst {
            None => CheckReport::pass(check, format!("{} identities hold exactly", self.checked)),
            Some((v, n, label)) => CheckReport {
                check: check.into(),
                passed: false,
                first_failing_order: Some(v),
                failing_term_count: n,
                detail: format!("{label} fails at hbar^{v}"),
            },
        }
    }
}

fn collect(check: &str, items: Vec<Result<(String, TensorElement), HopfError>>) -> CheckReport {
    let mut res = Residuals::new();
    for item in items {
        match item {
            Ok((label, r)) => res.add(&label, &r),
            Err(e) => return CheckReport::fail(check, e.to_string()),
        }
    }
    res.report(check)
}

pub fn check_confluence(h: &HopfAlgebraDef) -> CheckReport {
    let r = check_local_confluence(h.algebra());
    if r.is_confluent() {
        CheckReport::pass("confluence", format!("{} overlaps resolve", r.overlaps_checked))
    } else {
        let f = &r.failures[0];
        CheckReport {
            check: "confluence".into(),
            passed: false,
            first_failing_order: None,
            failing_term_count: r.failures.len(),
            detail: format!("overlap {} does not resolve: {}", f.word.join("·"), f.detail),
        }
    }
}

/// (Δ⊗id)Δ(g) = (id⊗Δ)Δ(g) for every generator.
pub fn check_coassociativity(h: &HopfAlgebraDef) -> CheckReport {
    let n = h.table().len() as u8;
    let items = (0..n)
        .into_par_iter()
        .map(|g| {
            let d = h.coproduct_of(g);
            let left = h.delta_on_slot(d, 0)?;
            let right = h.delta_on_slot(d, 1)?;
            Ok((format!("Δ{}", h.table().name(g)), left.sub(&right)?))
        })
        .collect();
    collect("coassociativity", items)
}

/// (ε⊗id)Δ(g) = g = (id⊗ε)Δ(g).
pub fn check_counit(h: &HopfAlgebraDef) -> CheckReport {
    let n = h.table().len() as u8;
    let mut res = Residuals::new();
    for g in 0..n {
        let x = Element::generator(g, h.order());
        for slot in 0..2 {
            let r = h.counit_on_slot(h.coproduct_of(g), slot).to_element().sub(&x);
            res.add_element(&format!("counit slot {slot} on {}", h.table().name(g)), &r);
        }
    }
    res.report("counit")
}

/// Δ respects every rewrite rule `b·a = lead·a·b + tail` and the odd
/// nilpotency `x² = 0`.
pub fn check_coproduct_homomorphism(h: &HopfAlgebraDef) -> CheckReport {
    let alg = h.algebra();
    let t = h.table();
    let order = h.order();
    let rules: Vec<_> = alg.rules().into_iter().cloned().collect();
    let mut items: Vec<Result<(String, TensorElement), HopfError>> = rules
        .par_iter()
        .map(|r| {
            let db = h.coproduct_of(r.b);
            let da = h.coproduct_of(r.a);
            let sign = if t.is_odd(r.a) && t.is_odd(r.b) { -1 } else { 1 };
            let lead = HbarSeries::q_pow(&r.alpha, order).scale(&sign.into());
            let lhs = alg.tensor_mul(db, da)?;
            let rhs = alg.tensor_mul(da, db)?.scale(&lead).add(&h.delta(&r.tail)?)?;
            Ok((format!("rule {}·{}", t.name(r.b), t.name(r.a)), lhs.sub(&rhs)?))
        })
        .collect();
    for g in 0..t.len() as u8 {
        if t.is_odd(g) {
            let d = h.coproduct_of(g);
            items.push(alg.tensor_mul(d, d).map(|sq| (format!("square of {}", t.name(g)), sq)).map_err(Into::into));
        }
    }
    collect("coproduct_homomorphism", items)
}

/// m(S⊗id)Δ(g) = ε(g) = m(id⊗S)Δ(g), using the stored antipode.
pub fn check_antipode(h: &HopfAlgebraDef) -> CheckReport {
    if h.antipode().is_none() {
        return CheckReport::fail("antipode", "antipode not derived");
    }
    let n = h.table().len() as u8;
    let items = (0..n)
        .into_par_iter()
        .flat_map_iter(|g| {
            (0..2).map(move |side| -> Result<(String, TensorElement), HopfError> {
                let r = crate::antipode::antipode_axiom_residual(h, g, side)?;
                Ok((format!("antipode side {side} on {}", h.table().name(g)), TensorElement::from_element(&r)))
            })
        })
        .collect();
    collect("antipode", items)
}

/// Confluence, coassociativity, counit, homomorphism and antipode, with the
/// antipode derived first when absent.
pub fn hopf_suite(h: &mut HopfAlgebraDef) -> Vec<CheckReport> {
    let mut out = vec![check_confluence(h), check_coassociativity(h), check_counit(h), check_coproduct_homomorphism(h)];
    if h.antipode().is_none() {
        match crate::antipode::derive_antipode(h) {
            Ok(s) => h.set_antipode(s),
            Err(e) => {
                out.push(CheckReport::fail("antipode", e.to_string()));
                return out;
            }
        }
    }
    out.push(check_antipode(h));
    out
}

/// The letter images `images` (elements of `target`) define a Hopf map from
/// `source`: every rule of `source` holds for the images, and
/// Δ(image(g)) = (image⊗image)(Δg).
pub fn check_hopf_map(source: &HopfAlgebraDef, target: &HopfAlgebraDef, images: &[Element]) -> CheckReport {
    let alg = target.algebra();
    let order = source.order().min(target.order());
    let t = source.table();
    let rules: Vec<_> = source.algebra().rules().into_iter().cloned().collect();
    let mut items: Vec<Result<(String, TensorElement), HopfError>> = rules
        .par_iter()
        .map(|r| {
            let sign = if t.is_odd(r.a) && t.is_odd(r.b) { -1 } else { 1 };
            let lead = HbarSeries::q_pow(&r.alpha, order).scale(&sign.into());
            let (ib, ia) = (&images[r.b as usize], &images[r.a as usize]);
            let lhs = alg.mul(ib, ia)?;
            let rhs = alg.mul(ia, ib)?.scale(&lead).add(&substitute(alg, images, &r.tail)?);
            let label = format!("rule {}·{}", t.name(r.b), t.name(r.a));
            Ok((label, TensorElement::from_element(&lhs.sub(&rhs).truncate(order))))
        })
        .collect();
    for g in 0..t.len() as u8 {
        let item = (|| {
            let lhs = target.delta(&images[g as usize])?;
            let rhs = substitute_tensor(alg, images, source.coproduct_of(g))?;
            Ok((format!("Δ{}", t.name(g)), lhs.sub(&rhs)?.truncate(order)))
        })();
        items.push(item);
    }
    collect("hopf_map", items)
}
