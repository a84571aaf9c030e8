//! Exact Gaussian elimination over ℚ(i).

use std::collections::BTreeMap;

use scalar_series::ExactScalar;

use crate::lie::Vector;
use crate::ClassicalError;

/// Row-major square or augmented matrix.
pub type Matrix = Vec<Vector>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    /// A particular solution and a basis of the kernel.
    Solutions {
        particular: Vector,
        kernel: Vec<Vector>,
    },
}

impl LinearSolution {
    pub fn unique(&self) -> Option<&Vector> {
        match self {
            LinearSolution::Solutions { particular, kernel } if kernel.is_empty() => Some(particular),
            _ => None,
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut Matrix, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let k = m[r][col].clone();
            for c in 0..m[r].len() {
                let d = &k * &m[row][c];
                m[r][c] -= &d;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Solves `a·x = b` for `x` with `n` unknowns.
pub fn solve_linear(a: &[Vector], b: &[ExactScalar], n: usize) -> LinearSolution {
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, n);
    if m.iter().skip(pivots.len()).any(|r| !r[n].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![ExactScalar::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][n].clone();
    }
    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![ExactScalar::zero(); n];
            v[free] = ExactScalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r][free];
            }
            v
        })
        .collect();
    LinearSolution::Solutions { particular, kernel }
}

pub fn inverse(a: &Matrix) -> Result<Matrix, ClassicalError> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { ExactScalar::one() } else { ExactScalar::zero() }));
            r
        })
        .collect();
    if rref(&mut m, n).len() < n {
        return Err(ClassicalError::Singular);
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(ExactScalar::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

/// Sparse row `column → coefficient`.
pub type SparseRow = BTreeMap<usize, ExactScalar>;

fn sub_scaled(row: &mut SparseRow, k: &ExactScalar, other: &SparseRow) {
    for (c, x) in other {
        let v = row.entry(*c).or_insert_with(ExactScalar::zero);
        *v -= &(k * x);
        if v.is_zero() {
            row.remove(c);
        }
    }
}

/// Kernel basis of the map whose matrix has the given sparse rows. Rows are
/// reduced one at a time against the pivots found so far, so the zero and
/// redundant rows of large, mostly empty systems cost little.
pub fn sparse_kernel(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vector> {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, c)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(p) => {
                    let k = c.clone();
                    sub_scaled(&mut row, &k, p);
                }
                None => {
                    let inv = c.inv().expect("nonzero lead");
                    for x in row.values_mut() {
                        *x = &*x * &inv;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    // back-substitute to reduced form, highest pivot first
    let cols: Vec<usize> = pivots.keys().rev().copied().collect();
    for &pc in &cols {
        let prow = pivots[&pc].clone();
        for (_, row) in pivots.range_mut(..pc) {
            if let Some(k) = row.get(&pc).cloned() {
                sub_scaled(row, &k, &prow);
            }
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains_key(c))
        .map(|free| {
            let mut v = vec![ExactScalar::zero(); ncols];
            v[free] = ExactScalar::one();
            for (&pc, row) in &pivots {
                if let Some(x) = row.get(&free) {
                    v[pc] = -x;
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    #[test]
    fn inverse_of_a_complex_matrix() {
        let a = vec![vec![s(1), ExactScalar::i()], vec![s(2), s(3)]];
        let inv = inverse(&a).unwrap();
        let id = mat_mul(&a, &inv);
        assert_eq!(id, vec![vec![s(1), s(0)], vec![s(0), s(1)]]);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let a = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert_eq!(inverse(&a), Err(ClassicalError::Singular));
    }

    #[test]
    fn underdetermined_and_inconsistent_systems() {
        let a = vec![vec![s(1), s(1)], vec![s(2), s(2)]];
        match solve_linear(&a, &[s(3), s(6)], 2) {
            LinearSolution::Solutions { particular, kernel } => {
                assert_eq!(particular, vec![s(3), s(0)]);
                assert_eq!(kernel, vec![vec![s(-1), s(1)]]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(solve_linear(&a, &[s(3), s(5)], 2), LinearSolution::Inconsistent);
    }

    #[test]
    fn sparse_kernel_matches_dense_solve() {
        // x + y + z = 0, y − iz = 0, and a redundant row
        let row = |v: &[(usize, ExactScalar)]| v.iter().cloned().collect::<SparseRow>();
        let rows = vec![
            row(&[(0, s(1)), (1, s(1)), (2, s(1))]),
            row(&[(1, s(1)), (2, -ExactScalar::i())]),
            row(&[(0, s(2)), (1, s(2)), (2, s(2))]),
            SparseRow::new(),
        ];
        let k = sparse_kernel(rows, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[2], s(1));
        assert_eq!(v[1], ExactScalar::i());
        assert_eq!(&v[0] + &v[1] + &v[2], s(0));
    }
}
