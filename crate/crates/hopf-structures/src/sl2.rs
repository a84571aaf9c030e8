//! U_{αħ}(sl(2)) and graded tensor products of Hopf algebras.

use algebra_core::{Algebra, Element, Generator, GeneratorTable, Parity, RewriteRule, TensorElement};
use scalar_series::{qi, ExactScalar, Q};

use crate::expr::{q_bracket, qpow};
use crate::hopf::HopfAlgebraDef;
use crate::remap::{remap_element, remap_tensor};
use crate::HopfError;

/// U_{αħ}(sl(2)) with the default letters `E < H < F`.
pub fn build_uq_sl2(alpha: &Q, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    build_uq_sl2_named(alpha, order, ["E", "H", "F"])
}

/// U_{αħ}(sl(2)) with letters `[e, h, f]`:
/// [h,e] = 2e, [h,f] = −2f, [e,f] = (q^{αh} − q^{−αh})/(q^α − q^{−α}),
/// Δe = e⊗1 + q^{−αh}⊗e, Δf = f⊗q^{αh} + 1⊗f, Δh primitive.
pub fn build_uq_sl2_named(alpha: &Q, order: usize, names: [&str; 3]) -> Result<HopfAlgebraDef, HopfError> {
    if order == 0 {
        return Err(HopfError::Invalid("order must be at least 1".into()));
    }
    let [e, h, f] = names;
    let mut table = GeneratorTable::from_names(&[(e, Parity::Even), (h, Parity::Even), (f, Parity::Even)])?;
    table.set_param("alpha", ExactScalar::real(alpha.clone()));
    let mut alg = Algebra::new(table, order);
    let (ge, gh, gf) = (alg.gen(e)?, alg.gen(h)?, alg.gen(f)?);
    let zero = qi(0);
    alg.add_rule(h, e, zero.clone(), ge.scale_q(&qi(2)))?;
    alg.add_rule(f, h, zero.clone(), gf.scale_q(&qi(2)))?;
    let bracket = q_bracket(&alg, &gh, alpha)?;
    alg.add_rule(f, e, zero, bracket.neg())?;

    let one = alg.one();
    let qm = qpow(&alg, &gh, &-alpha.clone())?;
    let qp = qpow(&alg, &gh, alpha)?;
    let de = TensorElement::from_elements(&[&ge, &one]).add(&TensorElement::from_elements(&[&qm, &ge]))?;
    let dh = TensorElement::from_elements(&[&gh, &one]).add(&TensorElement::from_elements(&[&one, &gh]))?;
    let df = TensorElement::from_elements(&[&gf, &qp]).add(&TensorElement::from_elements(&[&one, &gf]))?;
    let mut hopf = HopfAlgebraDef::new("uq_sl2", alg, vec![de, dh, df], vec![ExactScalar::zero(); 3])?;
    hopf.set_metadata("alpha", &alpha.to_string());
    Ok(hopf)
}

/// Graded tensor product: letters of `a` and `b` interleave by PBW position
/// (a's k-th letter before b's k-th), cross pairs supercommute, Hopf data
/// is taken factorwise.
pub fn build_tensor_hopf(a: &HopfAlgebraDef, b: &HopfAlgebraDef) -> Result<HopfAlgebraDef, HopfError> {
    let mut gens = Vec::new();
    for (factor, h) in [a, b].into_iter().enumerate() {
        for (k, g) in h.table().generators().iter().enumerate() {
            gens.push(Generator { name: g.name.clone(), parity: g.parity, sort_key: 2 * k as i64 + factor as i64 });
        }
    }
    let mut table = GeneratorTable::new(gens)?;
    for (prefix, h) in [("left_", a), ("right_", b)] {
        for (k, v) in h.table().params() {
            table.set_param(&format!("{prefix}{k}"), v.clone());
        }
    }
    let order = a.order().min(b.order());
    let maps: Vec<Vec<u8>> = [a, b]
        .iter()
        .map(|h| h.table().generators().iter().map(|g| table.index(&g.name)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let mut alg = Algebra::new(table.clone(), order);
    for (h, map) in [a, b].iter().zip(&maps) {
        for r in h.algebra().rules() {
            let tail = remap_element(&r.tail, map, &table)?.truncate(order);
            alg.set_rule(RewriteRule { b: map[r.b as usize], a: map[r.a as usize], alpha: r.alpha.clone(), tail })?;
        }
    }
    for &x in &maps[0] {
        for &y in &maps[1] {
            let (hi, lo) = if x > y { (x, y) } else { (y, x) };
            alg.set_rule(RewriteRule { b: hi, a: lo, alpha: qi(0), tail: Element::zero(order) })?;
        }
    }
    let n = table.len();
    let mut coproduct = vec![TensorElement::zero(2, order); n];
    let mut counit = vec![ExactScalar::zero(); n];
    for (h, map) in [a, b].iter().zip(&maps) {
        for g in 0..h.table().len() as u8 {
            coproduct[map[g as usize] as usize] = remap_tensor(h.coproduct_of(g), map, &table)?.truncate(order);
            counit[map[g as usize] as usize] = h.counit_of(g).clone();
        }
    }
    HopfAlgebraDef::new(&format!("{}_x_{}", a.name(), b.name()), alg, coproduct, counit)
}
