//! Transport of elements and tensors between generator tables.

use algebra_core::{Algebra, Element, GeneratorTable, Monomial, TensorElement};
use scalar_series::HbarSeries;

use crate::HopfError;

/// Rename letters by `map` (old index → new index). The image of a normal
/// monomial must again be normal in `target`.
fn remap_monomial(m: &Monomial, map: &[u8], target: &GeneratorTable) -> Result<Monomial, HopfError> {
    let pairs: Vec<(u8, u32)> = m.pairs().iter().map(|&(g, e)| (map[g as usize], e)).collect();
    Ok(Monomial::from_pairs(&pairs, target)?)
}

pub fn remap_element(x: &Element, map: &[u8], target: &GeneratorTable) -> Result<Element, HopfError> {
    let mut out = Element::zero(x.order());
    for (m, c) in x.terms() {
        out.add_term(remap_monomial(m, map, target)?, c);
    }
    Ok(out)
}

pub fn remap_tensor(t: &TensorElement, map: &[u8], target: &GeneratorTable) -> Result<TensorElement, HopfError> {
    let mut out = TensorElement::zero(t.rank(), t.order());
    for (s, c) in t.terms() {
        let s = s.iter().map(|m| remap_monomial(m, map, target)).collect::<Result<Vec<_>, _>>()?;
        out.add_term(s, c);
    }
    Ok(out)
}

/// Algebra homomorphism given by letter images in `alg`: a normal monomial
/// maps to the ordered product of its letters' images.
pub fn substitute(alg: &Algebra, images: &[Element], x: &Element) -> Result<Element, HopfError> {
    let mut out = Element::zero(x.order());
    for (m, c) in x.terms() {
        let mut acc = alg.one();
        for g in m.letters() {
            acc = alg.mul(&acc, &images[g as usize])?;
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// [`substitute`] applied slotwise; images must preserve parity.
pub fn substitute_tensor(alg: &Algebra, images: &[Element], t: &TensorElement) -> Result<TensorElement, HopfError> {
    let mut out = TensorElement::zero(t.rank(), t.order());
    for (slots, c) in t.terms() {
        let parts: Vec<Element> = slots
            .iter()
            .map(|m| substitute(alg, images, &Element::term(m.clone(), HbarSeries::one(t.order()))))
            .collect::<Result<_, _>>()?;
        let refs: Vec<&Element> = parts.iter().collect();
        out.add_scaled(&TensorElement::from_elements(&refs), c);
    }
    Ok(out)
}
