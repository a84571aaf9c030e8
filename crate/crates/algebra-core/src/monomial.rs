//! PBW monomials: letters in strictly increasing generator order.

use std::fmt::Write as _;

use smallvec::SmallVec;

use crate::table::GeneratorTable;
use crate::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(SmallVec<[(u8, u32); 4]>);

impl Monomial {
    pub fn identity() -> Self {
        Self(SmallVec::new())
    }

    pub fn letter(g: u8) -> Self {
        let mut v = SmallVec::new();
        v.push((g, 1));
        Self(v)
    }

    /// Build from `(generator, exponent)` pairs, which must already be in
    /// normal order with odd exponents equal to one.
    pub fn from_pairs(pairs: &[(u8, u32)], table: &GeneratorTable) -> Result<Self, AlgebraError> {
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(AlgebraError::Invalid("monomial letters out of order".into()));
            }
        }
        for &(g, e) in pairs {
            if g as usize >= table.len() {
                return Err(AlgebraError::UnknownGenerator(format!("#{g}")));
            }
            if e == 0 || (e > 1 && table.is_odd(g)) {
                return Err(AlgebraError::Invalid(format!("bad exponent {e} on {}", table.name(g))));
            }
        }
        Ok(Self(pairs.iter().copied().collect()))
    }

    pub fn pairs(&self) -> &[(u8, u32)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_odd(&self, table: &GeneratorTable) -> bool {
        self.0.iter().filter(|&&(g, e)| table.is_odd(g) && e % 2 == 1).count() % 2 == 1
    }

    pub fn last(&self) -> Option<(u8, u32)> {
        self.0.last().copied()
    }

    /// Expanded letter sequence, e.g. `x²y` → `[x, x, y]`.
    pub fn letters(&self) -> Vec<u8> {
        self.0.iter().flat_map(|&(g, e)| std::iter::repeat(g).take(e as usize)).collect()
    }

    /// Append `g` assuming it sorts after every letter, or equals the last
    /// (even) letter.
    pub fn push(&self, g: u8) -> Self {
        let mut v = self.0.clone();
        match v.last_mut() {
            Some((x, e)) if *x == g => *e += 1,
            _ => v.push((g, 1)),
        }
        Self(v)
    }

    /// Remove one copy of the last letter.
    pub fn pop(&self) -> Self {
        let mut v = self.0.clone();
        if let Some((_, e)) = v.last_mut() {
            if *e > 1 {
                *e -= 1;
            } else {
                v.pop();
            }
        }
        Self(v)
    }

    pub fn format(&self, table: &GeneratorTable) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (k, &(g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push_str(table.name(g));
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    /// Parse `A^2*B`, or `1` for the identity. Letters must be in normal order.
    pub fn parse(text: &str, table: &GeneratorTable) -> Result<Self, AlgebraError> {
        let text = text.trim();
        if text == "1" {
            return Ok(Self::identity());
        }
        let mut pairs = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 =
                        e.trim().parse().map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            pairs.push((table.index(name)?, exp));
        }
        Self::from_pairs(&pairs, table)
    }
}
