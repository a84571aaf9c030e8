//! Sparse tensors over a Lie algebra's basis, with wedge and symmetric
//! products and the Schouten bracket of rank-2 tensors.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use scalar_series::ExactScalar;

use crate::lie::{LieAlgebraSC, Vector};
use crate::linalg::Matrix;
use crate::report::IdentityReport;
use crate::ClassicalError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Zero,
    Symmetric,
    Antisymmetric,
    General,
}

/// Components over basis index tuples; zero components are never stored,
/// so equal tensors have equal storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeTensor {
    rank: usize,
    dim: usize,
    comps: BTreeMap<Vec<u8>, ExactScalar>,
}

impl WedgeTensor {
    pub fn zero(rank: usize, dim: usize) -> Self {
        Self { rank, dim, comps: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn get(&self, idx: &[usize]) -> ExactScalar {
        let key: Vec<u8> = idx.iter().map(|&i| i as u8).collect();
        self.comps.get(&key).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (Vec<usize>, &ExactScalar)> {
        self.comps.iter().map(|(k, c)| (k.iter().map(|&i| i as usize).collect(), c))
    }

    pub fn add_term(&mut self, idx: &[usize], c: &ExactScalar) {
        debug_assert_eq!(idx.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let key: Vec<u8> = idx.iter().map(|&i| i as u8).collect();
        let slot = self.comps.entry(key.clone()).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.comps.remove(&key);
        }
    }

    /// `v₁ ⊗ v₂ ⊗ ⋯`.
    pub fn outer(vs: &[&Vector]) -> Self {
        let dim = vs[0].len();
        let mut out = Self::zero(vs.len(), dim);
        let mut acc: Vec<(Vec<usize>, ExactScalar)> = vec![(Vec::new(), ExactScalar::one())];
        for v in vs {
            let mut next = Vec::new();
            for (idx, c) in &acc {
                for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    let mut j = idx.clone();
                    j.push(i);
                    next.push((j, c * x));
                }
            }
            acc = next;
        }
        for (idx, c) in acc {
            out.add_term(&idx, &c);
        }
        out
    }

    /// `a ∧ b = a⊗b − b⊗a`.
    pub fn wedge(a: &Vector, b: &Vector) -> Self {
        Self::outer(&[a, b]) - Self::outer(&[b, a])
    }

    /// `a ⊙ b = a⊗b + b⊗a`.
    pub fn odot(a: &Vector, b: &Vector) -> Self {
        Self::outer(&[a, b]) + Self::outer(&[b, a])
    }

    /// `a ∧ b ∧ c = Σ_σ sgn(σ) a_σ ⊗ b_σ ⊗ c_σ` over the six orderings.
    pub fn wedge3(a: &Vector, b: &Vector, c: &Vector) -> Self {
        let even = Self::outer(&[a, b, c]) + Self::outer(&[b, c, a]) + Self::outer(&[c, a, b]);
        let odd = Self::outer(&[b, a, c]) + Self::outer(&[a, c, b]) + Self::outer(&[c, b, a]);
        even - odd
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        let mut out = Self::zero(self.rank, self.dim);
        for (idx, c) in &self.comps {
            let v = c * k;
            if !v.is_zero() {
                out.comps.insert(idx.clone(), v);
            }
        }
        out
    }

    /// Slot `s` of the result is slot `perm[s]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.rank, self.dim);
        for (idx, c) in &self.comps {
            let key: Vec<u8> = perm.iter().map(|&p| idx[p]).collect();
            out.comps.insert(key, c.clone());
        }
        out
    }

    pub fn symmetry(&self) -> Symmetry {
        if self.is_zero() {
            return Symmetry::Zero;
        }
        let swaps: Vec<Vec<usize>> = (0..self.rank.saturating_sub(1))
            .map(|k| {
                let mut p: Vec<usize> = (0..self.rank).collect();
                p.swap(k, k + 1);
                p
            })
            .collect();
        if swaps.iter().all(|p| &self.permute(p) == self) {
            Symmetry::Symmetric
        } else if swaps.iter().all(|p| self.permute(p) == -self) {
            Symmetry::Antisymmetric
        } else {
            Symmetry::General
        }
    }

    /// Rank-2 parts `(t − t^T)/2` and `(t + t^T)/2`.
    pub fn split_rank2(&self) -> (Self, Self) {
        assert_eq!(self.rank, 2, "split_rank2 needs a rank-2 tensor");
        let half = ExactScalar::ratio(1, 2);
        let t = self.permute(&[1, 0]);
        ((self - &t).scale(&half), (self + &t).scale(&half))
    }

    /// Re-express in the basis `e′ = m·e`, given `m⁻¹`.
    pub fn change_basis(&self, minv: &Matrix) -> Self {
        let mut out = Self::zero(self.rank, self.dim);
        for (idx, c) in &self.comps {
            let rows: Vec<&Vector> = idx.iter().map(|&a| &minv[a as usize]).collect();
            for (j, x) in Self::outer(&rows).comps {
                let v = c * &x;
                out.add_key(j, &v);
            }
        }
        out
    }

    fn add_key(&mut self, key: Vec<u8>, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.comps.entry(key.clone()).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.comps.remove(&key);
        }
    }

    /// `[x⊗1⊗⋯ + 1⊗x⊗⋯ + ⋯, t]`: the adjoint action on every slot.
    pub fn ad_action(&self, g: &LieAlgebraSC, x: &Vector) -> Self {
        let mut out = Self::zero(self.rank, self.dim);
        for (idx, c) in &self.comps {
            for s in 0..self.rank {
                for (b, xb) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let br = g.bracket_basis(b, idx[s] as usize);
                    for (d, f) in br.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        let mut key = idx.clone();
                        key[s] = d as u8;
                        out.add_key(key, &(c * &(xb * f)));
                    }
                }
            }
        }
        out
    }

    /// Ad-invariance under every basis element.
    pub fn check_invariant(&self, g: &LieAlgebraSC, check: &str) -> IdentityReport {
        let parts: Vec<IdentityReport> = (0..g.dim())
            .map(|a| {
                let r = self.ad_action(g, &crate::lie::basis_vector(g.dim(), a));
                IdentityReport::from_residual(&format!("[{}, .]", g.label(a)), &r)
            })
            .collect();
        IdentityReport::merge(check, &parts)
    }

    /// Line-oriented text form, one nonzero component per line:
    ///
    /// ```text
    /// rank 2
    /// basis L0 L1 L2 P0 P1 P2
    /// P0 L0 = -1
    /// P1 L2 = -1/2i
    /// ```
    pub fn to_text(&self, g: &LieAlgebraSC) -> String {
        let mut out = format!("rank {}\nbasis {}\n", self.rank, g.labels().join(" "));
        for (idx, c) in &self.comps {
            let names: Vec<&str> = idx.iter().map(|&i| g.label(i as usize)).collect();
            out.push_str(&format!("{} = {c}\n", names.join(" ")));
        }
        out
    }

    /// Inverse of [`WedgeTensor::to_text`]; the basis line must match `g`.
    pub fn from_text(text: &str, g: &LieAlgebraSC) -> Result<Self, ClassicalError> {
        let bad = |msg: &str| ClassicalError::Invalid(format!("tensor text: {msg}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let rank: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("rank "))
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| bad("missing rank line"))?;
        let basis: Vec<&str> = lines
            .next()
            .and_then(|l| l.strip_prefix("basis "))
            .ok_or_else(|| bad("missing basis line"))?
            .split_whitespace()
            .collect();
        if basis != g.labels().iter().map(String::as_str).collect::<Vec<_>>() {
            return Err(bad("basis does not match the algebra"));
        }
        let mut out = Self::zero(rank, g.dim());
        for line in lines {
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad(line))?;
            let idx = lhs.split_whitespace().map(|n| g.index(n)).collect::<Result<Vec<_>, _>>()?;
            if idx.len() != rank {
                return Err(bad(line));
            }
            let c: ExactScalar = rhs.trim().parse().map_err(|_| bad(line))?;
            out.add_term(&idx, &c);
        }
        Ok(out)
    }

    /// Human-readable `c label⊗label` listing.
    pub fn display(&self, g: &LieAlgebraSC) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.comps
            .iter()
            .map(|(idx, c)| {
                let names: Vec<&str> = idx.iter().map(|&i| g.label(i as usize)).collect();
                format!("({c}) {}", names.join("⊗"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Add<&WedgeTensor> for &WedgeTensor {
    type Output = WedgeTensor;
    fn add(self, o: &WedgeTensor) -> WedgeTensor {
        assert_eq!((self.rank, self.dim), (o.rank, o.dim), "tensor shape mismatch");
        let mut out = self.clone();
        for (k, c) in &o.comps {
            out.add_key(k.clone(), c);
        }
        out
    }
}

impl Sub<&WedgeTensor> for &WedgeTensor {
    type Output = WedgeTensor;
    fn sub(self, o: &WedgeTensor) -> WedgeTensor {
        self + &(-o)
    }
}

impl Add for WedgeTensor {
    type Output = WedgeTensor;
    fn add(self, o: WedgeTensor) -> WedgeTensor {
        &self + &o
    }
}

impl Sub for WedgeTensor {
    type Output = WedgeTensor;
    fn sub(self, o: WedgeTensor) -> WedgeTensor {
        &self - &o
    }
}

impl Neg for &WedgeTensor {
    type Output = WedgeTensor;
    fn neg(self) -> WedgeTensor {
        self.scale(&ExactScalar::int(-1))
    }
}

impl Neg for WedgeTensor {
    type Output = WedgeTensor;
    fn neg(self) -> WedgeTensor {
        -&self
    }
}

/// `[r₁₂, s₁₃] + [r₁₂, s₂₃] + [r₁₃, s₂₃]` for rank-2 `r`, `s`.
pub fn schouten_bracket(r: &WedgeTensor, s: &WedgeTensor, g: &LieAlgebraSC) -> WedgeTensor {
    assert!(r.rank == 2 && s.rank == 2, "schouten_bracket needs rank-2 tensors");
    let mut out = WedgeTensor::zero(3, r.dim);
    for (ri, rc) in &r.comps {
        let (a, b) = (ri[0] as usize, ri[1] as usize);
        for (si, sc) in &s.comps {
            let (c, d) = (si[0] as usize, si[1] as usize);
            let k = rc * sc;
            let mut put = |slot: usize, br: Vector, rest: [usize; 2]| {
                for (e, f) in br.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let mut key = vec![0u8; 3];
                    key[slot] = e as u8;
                    let others: Vec<usize> = (0..3).filter(|&t| t != slot).collect();
                    key[others[0]] = rest[0] as u8;
                    key[others[1]] = rest[1] as u8;
                    out.add_key(key, &(&k * f));
                }
            };
            put(0, g.bracket_basis(a, c), [b, d]);
            put(1, g.bracket_basis(b, c), [a, d]);
            put(2, g.bracket_basis(b, d), [a, c]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::basis_vector;

    fn e(i: usize) -> Vector {
        basis_vector(4, i)
    }

    #[test]
    fn wedge_and_odot_symmetries() {
        let w = WedgeTensor::wedge(&e(0), &e(2));
        assert_eq!(w.symmetry(), Symmetry::Antisymmetric);
        assert_eq!(w.get(&[0, 2]), ExactScalar::one());
        assert_eq!(w.get(&[2, 0]), ExactScalar::int(-1));
        assert_eq!(WedgeTensor::odot(&e(1), &e(3)).symmetry(), Symmetry::Symmetric);
        assert_eq!(WedgeTensor::wedge(&e(1), &e(1)).symmetry(), Symmetry::Zero);
        let w3 = WedgeTensor::wedge3(&e(0), &e(1), &e(2));
        assert_eq!(w3.symmetry(), Symmetry::Antisymmetric);
        assert_eq!(w3.len(), 6);
        assert_eq!(w3.get(&[2, 1, 0]), ExactScalar::int(-1));
    }

    #[test]
    fn rank2_split_recovers_parts() {
        let a = WedgeTensor::wedge(&e(0), &e(1)).scale(&ExactScalar::int(3));
        let s = WedgeTensor::odot(&e(2), &e(1));
        let (anti, sym) = (&a + &s).split_rank2();
        assert_eq!((anti, sym), (a, s));
    }

    #[test]
    fn text_round_trip() {
        let g = crate::iso3::build_iso3();
        let t = crate::iso3::build_omega(&scalar_series::q(3, 5));
        let text = t.to_text(&g);
        assert_eq!(WedgeTensor::from_text(&text, &g).unwrap(), t);
        assert!(WedgeTensor::from_text("rank 2\nbasis a b\n", &g).is_err());
        assert!(WedgeTensor::from_text(&text.replace("= ", "= x"), &g).is_err());
    }

    #[test]
    fn cancellation_leaves_no_stored_zeros() {
        let a = WedgeTensor::outer(&[&e(0), &e(1)]);
        assert!((&a - &a).is_empty());
        assert_eq!((&a - &a).symmetry(), Symmetry::Zero);
    }
}
