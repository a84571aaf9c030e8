//! Generator tables: names, parities and PBW order.

use std::collections::BTreeMap;

use scalar_series::ExactScalar;

use crate::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
    pub sort_key: i64,
}

/// Generators sorted by `sort_key`; a generator's index is its PBW position.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
    params: BTreeMap<String, ExactScalar>,
}

impl GeneratorTable {
    pub fn new(mut gens: Vec<Generator>) -> Result<Self, AlgebraError> {
        if gens.len() > u8::MAX as usize {
            return Err(AlgebraError::Invalid("too many generators".into()));
        }
        gens.sort_by_key(|g| g.sort_key);
        for w in gens.windows(2) {
            if w[0].sort_key == w[1].sort_key {
                return Err(AlgebraError::Invalid(format!("duplicate sort key {}", w[0].sort_key)));
            }
        }
        for (i, g) in gens.iter().enumerate() {
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(AlgebraError::Invalid(format!("bad generator name `{}`", g.name)));
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::NameCollision(g.name.clone()));
            }
        }
        Ok(Self { gens, params: BTreeMap::new() })
    }

    /// Convenience constructor; sort keys follow the slice order.
    pub fn from_names(names: &[(&str, Parity)]) -> Result<Self, AlgebraError> {
        Self::new(
            names
                .iter()
                .enumerate()
                .map(|(k, &(n, p))| Generator { name: n.to_string(), parity: p, sort_key: k as i64 })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, g: u8) -> &Generator {
        &self.gens[g as usize]
    }

    pub fn name(&self, g: u8) -> &str {
        &self.gens[g as usize].name
    }

    pub fn is_odd(&self, g: u8) -> bool {
        self.gens[g as usize].parity.is_odd()
    }

    pub fn index(&self, name: &str) -> Result<u8, AlgebraError> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .map(|k| k as u8)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn params(&self) -> &BTreeMap<String, ExactScalar> {
        &self.params
    }

    pub fn set_param(&mut self, name: &str, value: ExactScalar) {
        self.params.insert(name.to_string(), value);
    }

    pub fn param(&self, name: &str) -> Option<&ExactScalar> {
        self.params.get(name)
    }
}
