//! Hopf data attached to a rewriting algebra: coproduct and counit on
//! generators, extended multiplicatively, and an optional antipode.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use algebra_core::{Algebra, Definition, Element, GeneratorTable, Monomial, TensorElement};
use scalar_series::{ExactScalar, HbarSeries};

use crate::HopfError;

#[derive(Debug)]
pub struct HopfAlgebraDef {
    name: String,
    algebra: Algebra,
    coproduct: Vec<TensorElement>,
    counit: Vec<ExactScalar>,
    antipode: Option<Vec<Element>>,
    metadata: BTreeMap<String, String>,
    delta_cache: RwLock<HashMap<Monomial, Arc<TensorElement>>>,
}

impl Clone for HopfAlgebraDef {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            algebra: self.algebra.clone(),
            coproduct: self.coproduct.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            metadata: self.metadata.clone(),
            delta_cache: RwLock::new(HashMap::new()),
        }
    }
}

impl HopfAlgebraDef {
    /// `coproduct[g]` and `counit[g]` are indexed by generator position.
    pub fn new(
        name: &str,
        algebra: Algebra,
        coproduct: Vec<TensorElement>,
        counit: Vec<ExactScalar>,
    ) -> Result<Self, HopfError> {
        let n = algebra.table().len();
        if coproduct.len() != n || counit.len() != n {
            return Err(HopfError::Invalid(format!(
                "{n} generators but {} coproducts and {} counits",
                coproduct.len(),
                counit.len()
            )));
        }
        if let Some(bad) = coproduct.iter().position(|t| t.rank() != 2) {
            return Err(HopfError::Invalid(format!("coproduct of {} is not rank 2", algebra.table().name(bad as u8))));
        }
        let order = algebra.order();
        let coproduct = coproduct.iter().map(|t| t.truncate(order)).collect();
        Ok(Self {
            name: name.to_string(),
            algebra,
            coproduct,
            counit,
            antipode: None,
            metadata: BTreeMap::new(),
            delta_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn table(&self) -> &GeneratorTable {
        self.algebra.table()
    }

    pub fn order(&self) -> usize {
        self.algebra.order()
    }

    pub fn gen(&self, name: &str) -> Result<Element, HopfError> {
        Ok(self.algebra.gen(name)?)
    }

    pub fn index(&self, name: &str) -> Result<u8, HopfError> {
        Ok(self.table().index(name)?)
    }

    pub fn coproduct_of(&self, g: u8) -> &TensorElement {
        &self.coproduct[g as usize]
    }

    pub fn counit_of(&self, g: u8) -> &ExactScalar {
        &self.counit[g as usize]
    }

    pub fn antipode(&self) -> Option<&[Element]> {
        self.antipode.as_deref()
    }

    pub fn set_antipode(&mut self, s: Vec<Element>) {
        self.antipode = Some(s);
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn set_metadata(&mut self, key: &str, value: &str) {
        self.metadata.insert(key.to_string(), value.to_string());
    }

    /// Δ of a normal monomial, as the ordered product of letter coproducts.
    pub fn delta_monomial(&self, m: &Monomial) -> Result<Arc<TensorElement>, HopfError> {
        if let Some(hit) = self.delta_cache.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let out = match m.last() {
            None => TensorElement::one(2, self.order()),
            Some((g, _)) => {
                let head = self.delta_monomial(&m.pop())?;
                self.algebra.tensor_mul(&head, &self.coproduct[g as usize])?
            }
        };
        let out = Arc::new(out);
        self.delta_cache.write().unwrap().insert(m.clone(), out.clone());
        Ok(out)
    }

    pub fn delta(&self, x: &Element) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(2, x.order().min(self.order()));
        for (m, c) in x.terms() {
            out.add_scaled(&*self.delta_monomial(m)?, c);
        }
        Ok(out)
    }

    /// Apply Δ to slot `slot` of `t`, raising the rank by one.
    pub fn delta_on_slot(&self, t: &TensorElement, slot: usize) -> Result<TensorElement, HopfError> {
        Ok(t.map_slot(slot, 2, |m| Ok((*self.delta_monomial(m).map_err(into_alg)?).clone()))?)
    }

    pub fn counit_monomial(&self, m: &Monomial) -> ExactScalar {
        let mut acc = ExactScalar::one();
        for (g, e) in m.pairs() {
            let c = &self.counit[*g as usize];
            for _ in 0..*e {
                acc = &acc * c;
            }
        }
        acc
    }

    pub fn counit(&self, x: &Element) -> HbarSeries {
        let mut out = HbarSeries::zero(x.order());
        for (m, c) in x.terms() {
            out += &c.scale(&self.counit_monomial(m));
        }
        out
    }

    /// `(ε⊗id)` (slot 0) or `(id⊗ε)` (slot 1) of a rank-2 tensor.
    pub fn counit_on_slot(&self, t: &TensorElement, slot: usize) -> TensorElement {
        t.contract_slot_scalar(slot, |m| self.counit_monomial(m))
    }

    /// S on a normal monomial using the stored generator images:
    /// S(x₁⋯x_k) = (−1)^{o(o−1)/2} S(x_k)⋯S(x₁), o the number of odd letters.
    pub fn antipode_monomial(&self, m: &Monomial) -> Result<Element, HopfError> {
        let s = self.antipode.as_ref().ok_or_else(|| HopfError::Invalid("antipode not derived".into()))?;
        apply_antihom(&self.algebra, s, m)
    }

    pub fn antipode_apply(&self, x: &Element) -> Result<Element, HopfError> {
        let mut out = Element::zero(x.order());
        for (m, c) in x.terms() {
            out.add_scaled(&self.antipode_monomial(m)?, c);
        }
        Ok(out)
    }

    /// Export for the algebra-definition file format.
    pub fn to_definition(&self) -> Definition {
        let n = self.table().len() as u8;
        Definition {
            name: self.name.clone(),
            algebra: self.algebra.clone(),
            coproduct: (0..n).map(|g| (g, self.coproduct[g as usize].clone())).collect(),
            counit: (0..n).map(|g| (g, self.counit[g as usize].clone())).collect(),
        }
    }

    /// Rebuild from a loaded definition; every generator needs a coproduct.
    /// Missing counits default to zero.
    pub fn from_definition(def: Definition) -> Result<Self, HopfError> {
        let n = def.algebra.table().len();
        let mut coproduct: Vec<Option<TensorElement>> = vec![None; n];
        for (g, t) in def.coproduct {
            coproduct[g as usize] = Some(t);
        }
        let mut counit = vec![ExactScalar::zero(); n];
        for (g, c) in def.counit {
            counit[g as usize] = c;
        }
        let coproduct = coproduct
            .into_iter()
            .enumerate()
            .map(|(g, t)| {
                t.ok_or_else(|| HopfError::Invalid(format!("no coproduct for {}", def.algebra.table().name(g as u8))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&def.name, def.algebra, coproduct, counit)
    }
}

/// Antihomomorphic extension of generator images `s` to a monomial.
pub(crate) fn apply_antihom(alg: &Algebra, s: &[Element], m: &Monomial) -> Result<Element, HopfError> {
    let letters = m.letters();
    let odd = letters.iter().filter(|&&g| alg.table().is_odd(g)).count();
    let mut acc = alg.one();
    for &g in letters.iter().rev() {
        acc = alg.mul(&acc, &s[g as usize])?;
    }
    if (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
        acc = acc.neg();
    }
    Ok(acc)
}

fn into_alg(e: HopfError) -> algebra_core::AlgebraError {
    match e {
        HopfError::Algebra(a) => a,
        other => algebra_core::AlgebraError::Invalid(other.to_string()),
    }
}
