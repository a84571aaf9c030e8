//! Finite-dimensional Lie algebras given by structure constants.

use scalar_series::ExactScalar;

use crate::linalg::{inverse, Matrix};
use crate::report::IdentityReport;
use crate::tensor::WedgeTensor;
use crate::ClassicalError;

/// Coordinates of an element in the algebra's basis.
pub type Vector = Vec<ExactScalar>;

pub fn basis_vector(dim: usize, i: usize) -> Vector {
    let mut v = vec![ExactScalar::zero(); dim];
    v[i] = ExactScalar::one();
    v
}

pub(crate) fn axpy(y: &mut Vector, a: &ExactScalar, x: &Vector) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub(crate) fn scaled(a: &ExactScalar, x: &Vector) -> Vector {
    x.iter().map(|c| a * c).collect()
}

pub(crate) fn sum(terms: &[(ExactScalar, &Vector)]) -> Vector {
    let dim = terms.first().map_or(0, |t| t.1.len());
    let mut out = vec![ExactScalar::zero(); dim];
    for (a, x) in terms {
        axpy(&mut out, a, x);
    }
    out
}

/// `[e_a, e_b] = Σ_c f[a][b][c] e_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSC {
    labels: Vec<String>,
    f: Vec<ExactScalar>,
}

impl LieAlgebraSC {
    /// `bracket(a, b)` gives `[e_a, e_b]` for every ordered pair.
    pub fn from_brackets(labels: Vec<String>, bracket: impl Fn(usize, usize) -> Vector) -> Self {
        let n = labels.len();
        let mut f = vec![ExactScalar::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for (c, x) in bracket(a, b).into_iter().enumerate() {
                    f[(a * n + b) * n + c] = x;
                }
            }
        }
        Self { labels, f }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, name: &str) -> Result<usize, ClassicalError> {
        self.labels.iter().position(|l| l == name).ok_or_else(|| ClassicalError::UnknownLabel(name.into()))
    }

    pub fn basis(&self, name: &str) -> Result<Vector, ClassicalError> {
        Ok(basis_vector(self.dim(), self.index(name)?))
    }

    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> &ExactScalar {
        let n = self.dim();
        &self.f[(a * n + b) * n + c]
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> Vector {
        let n = self.dim();
        self.f[(a * n + b) * n..(a * n + b + 1) * n].to_vec()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = vec![ExactScalar::zero(); n];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xa * yb), &self.bracket_basis(a, b));
            }
        }
        out
    }

    pub fn check_antisymmetry(&self) -> IdentityReport {
        let n = self.dim();
        let mut res = WedgeTensor::zero(3, n);
        for a in 0..n {
            for b in a..n {
                for c in 0..n {
                    res.add_term(&[a, b, c], &(self.structure_constant(a, b, c) + self.structure_constant(b, a, c)));
                }
            }
        }
        IdentityReport::from_residual("antisymmetry", &res)
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0` on all basis triples.
    pub fn check_jacobi(&self) -> IdentityReport {
        let n = self.dim();
        let e = |i| basis_vector(n, i);
        let mut res = WedgeTensor::zero(4, n);
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let j = sum(&[
                        (ExactScalar::one(), &self.bracket(&e(a), &self.bracket_basis(b, c))),
                        (ExactScalar::one(), &self.bracket(&e(b), &self.bracket_basis(c, a))),
                        (ExactScalar::one(), &self.bracket(&e(c), &self.bracket_basis(a, b))),
                    ]);
                    for (d, x) in j.iter().enumerate() {
                        res.add_term(&[a, b, c, d], x);
                    }
                }
            }
        }
        IdentityReport::from_residual("jacobi", &res)
    }

    /// New basis `e′_i = Σ_j m[i][j] e_j`, relabelled with `labels`.
    /// Returns the algebra in the new basis and `m⁻¹`, which carries
    /// old coordinates to new ones.
    pub fn change_basis(&self, m: &Matrix, labels: Vec<String>) -> Result<(LieAlgebraSC, Matrix), ClassicalError> {
        let n = self.dim();
        if m.len() != n || labels.len() != n {
            return Err(ClassicalError::Invalid(format!("basis change needs {n} rows and labels")));
        }
        let minv = inverse(m)?;
        let alg = LieAlgebraSC::from_brackets(labels, |i, j| to_new_coords(&self.bracket(&m[i], &m[j]), &minv));
        Ok((alg, minv))
    }
}

/// Old coordinates `x` to coordinates in the basis `e′ = m·e`, given `m⁻¹`.
pub(crate) fn to_new_coords(x: &Vector, minv: &Matrix) -> Vector {
    let n = x.len();
    let mut out = vec![ExactScalar::zero(); n];
    for (a, xa) in x.iter().enumerate() {
        axpy(&mut out, xa, &minv[a]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// sl(2) with [h,e] = 2e, [h,f] = −2f, [e,f] = h.
    fn sl2() -> LieAlgebraSC {
        let labels = ["h", "e", "f"].map(String::from).to_vec();
        LieAlgebraSC::from_brackets(labels, |a, b| {
            let v = |i: usize, c: i64| {
                let mut v = vec![ExactScalar::zero(); 3];
                v[i] = ExactScalar::int(c);
                v
            };
            match (a, b) {
                (0, 1) => v(1, 2),
                (1, 0) => v(1, -2),
                (0, 2) => v(2, -2),
                (2, 0) => v(2, 2),
                (1, 2) => v(0, 1),
                (2, 1) => v(0, -1),
                _ => vec![ExactScalar::zero(); 3],
            }
        })
    }

    #[test]
    fn sl2_is_a_lie_algebra() {
        let g = sl2();
        assert!(g.check_antisymmetry().passed);
        assert!(g.check_jacobi().passed);
    }

    #[test]
    fn broken_bracket_fails_jacobi() {
        let good = sl2();
        let bad = LieAlgebraSC::from_brackets(good.labels().to_vec(), |a, b| match (a, b) {
            (1, 2) => scaled(&ExactScalar::int(2), &good.bracket_basis(1, 2)),
            (2, 1) => scaled(&ExactScalar::int(2), &good.bracket_basis(2, 1)),
            (1, 0) | (0, 1) => vec![ExactScalar::zero(); 3],
            _ => good.bracket_basis(a, b),
        });
        assert!(bad.check_antisymmetry().passed);
        assert!(!bad.check_jacobi().passed);
    }

    #[test]
    fn basis_change_to_the_compact_form() {
        // x = e + f, y = i(e − f) (up to normalisation), h: [x, y] = −2i h
        let g = sl2();
        let i = ExactScalar::i();
        let z = ExactScalar::zero();
        let one = ExactScalar::one();
        let m = vec![
            vec![one.clone(), z.clone(), z.clone()],
            vec![z.clone(), one.clone(), one.clone()],
            vec![z.clone(), i.clone(), -&i],
        ];
        let (g2, _) = g.change_basis(&m, ["h", "x", "y"].map(String::from).to_vec()).unwrap();
        assert!(g2.check_jacobi().passed);
        assert_eq!(g2.bracket_basis(1, 2), vec![ExactScalar::imag(scalar_series::qi(-2)), z.clone(), z]);
    }
}
