//! Search for a symmetric invariant completion s of r̂ with
//! [[r̂ + s, r̂ + s]] = 0, over the space of quadratic Casimirs.

use std::collections::HashMap;

use num::{BigInt, Signed, Zero};
use scalar_series::{ExactScalar, Q};

use crate::isod::{build_isod, build_rhat_d};
use crate::lie::{basis_vector, LieAlgebraSC};
use crate::linalg::{solve_linear, sparse_kernel, LinearSolution, SparseRow};
use crate::tensor::{schouten_bracket, WedgeTensor};
use crate::ClassicalError;

/// Basis of the ad-invariant symmetric rank-2 tensors of `g`.
pub fn invariant_symmetric_tensors(g: &LieAlgebraSC) -> Vec<WedgeTensor> {
    let n = g.dim();
    let mut unknowns = Vec::new();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (basis_vector(n, i), basis_vector(n, j));
            let t = if i == j { WedgeTensor::outer(&[&a, &a]) } else { WedgeTensor::odot(&a, &b) };
            unknowns.push(t);
        }
    }
    let mut rows: HashMap<(usize, Vec<usize>), SparseRow> = HashMap::new();
    for a in 0..n {
        let x = basis_vector(n, a);
        for (col, t) in unknowns.iter().enumerate() {
            for (idx, c) in t.ad_action(g, &x).components() {
                rows.entry((a, idx)).or_default().insert(col, c.clone());
            }
        }
    }
    sparse_kernel(rows.into_values(), unknowns.len())
        .into_iter()
        .map(|v| unknowns.iter().zip(&v).fold(WedgeTensor::zero(2, n), |acc, (t, c)| acc + t.scale(c)))
        .collect()
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let root = |k: &BigInt| {
        let r = k.sqrt();
        (&r * &r == *k).then_some(r)
    };
    Some(Q::new(root(x.numer())?, root(x.denom())?))
}

/// Both square roots of `z` in ℚ(i), when they exist.
fn exact_sqrt(z: &ExactScalar) -> Option<[ExactScalar; 2]> {
    let (x, y) = (z.re(), z.im());
    let modulus = rational_sqrt(&(x * x + y * y))?;
    let half = Q::new(1.into(), 2.into());
    let a = rational_sqrt(&((x + &modulus) * &half))?;
    let b = if a.is_zero() { rational_sqrt(&-x)? } else { y / (&a * Q::from_integer(2.into())) };
    let r = ExactScalar::new(a, b);
    Some([r.clone(), -r])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionSolution {
    /// `s = Σ_k coefficients[k]·casimirs[k]`.
    pub coefficients: Vec<ExactScalar>,
    /// Indices whose coefficient is arbitrary (shown as 0).
    pub free: Vec<usize>,
    pub s: WedgeTensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    pub casimirs: Vec<WedgeTensor>,
    pub solutions: Vec<CompletionSolution>,
    /// The linearised system (each monomial in the coefficients treated as
    /// its own unknown) has no solution, which rules out any completion.
    pub linear_obstruction: bool,
    pub detail: String,
}

impl CompletionReport {
    pub fn exists(&self) -> bool {
        !self.solutions.is_empty()
    }
}

fn combine(casimirs: &[WedgeTensor], c: &[ExactScalar], dim: usize) -> WedgeTensor {
    casimirs.iter().zip(c).fold(WedgeTensor::zero(2, dim), |acc, (t, k)| acc + t.scale(k))
}

/// Solves [[r̂ + Σc_k C_k, r̂ + Σc_k C_k]] = 0 for the coefficients c_k.
/// The equations are quadratic; each monomial c_k, c_kc_l is first treated
/// as an independent unknown, then the pinned monomials are unwound into
/// candidate coefficient vectors which are verified by substitution.
pub fn completion_witness(
    g: &LieAlgebraSC,
    rhat: &WedgeTensor,
    casimirs: &[WedgeTensor],
) -> Result<CompletionReport, ClassicalError> {
    let m = casimirs.len();
    let dim = g.dim();
    let sb = |a: &WedgeTensor, b: &WedgeTensor| schouten_bracket(a, b, g);
    let mut cols: Vec<WedgeTensor> = casimirs.iter().map(|c| sb(rhat, c) + sb(c, rhat)).collect();
    let mut pair_col = HashMap::new();
    for k in 0..m {
        for l in k..m {
            pair_col.insert((k, l), cols.len());
            let t = if k == l {
                sb(&casimirs[k], &casimirs[k])
            } else {
                sb(&casimirs[k], &casimirs[l]) + sb(&casimirs[l], &casimirs[k])
            };
            cols.push(t);
        }
    }
    let t0 = sb(rhat, rhat);
    let mut keys: Vec<Vec<usize>> = t0.components().map(|(i, _)| i).collect();
    for c in &cols {
        keys.extend(c.components().map(|(i, _)| i));
    }
    keys.sort();
    keys.dedup();
    let a: Vec<Vec<ExactScalar>> = keys.iter().map(|k| cols.iter().map(|c| c.get(k)).collect()).collect();
    let b: Vec<ExactScalar> = keys.iter().map(|k| -t0.get(k)).collect();
    let (particular, kernel) = match solve_linear(&a, &b, cols.len()) {
        LinearSolution::Inconsistent => {
            return Ok(CompletionReport {
                casimirs: casimirs.to_vec(),
                solutions: Vec::new(),
                linear_obstruction: true,
                detail: format!(
                    "no symmetric completion: {} equations in the Casimir coefficients are inconsistent",
                    keys.len()
                ),
            })
        }
        LinearSolution::Solutions { particular, kernel } => (particular, kernel),
    };
    let pinned = |col: usize| kernel.iter().all(|v| v[col].is_zero());

    // candidate coefficient vectors with their free indices
    let mut candidates: Vec<(Vec<ExactScalar>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
    let mut unresolved = false;
    for k in 0..m {
        let mut next = Vec::new();
        for (c, free) in candidates {
            let options: Vec<ExactScalar> = if pinned(k) {
                vec![particular[k].clone()]
            } else if let Some(l) = (0..k).find(|&l| !c[l].is_zero() && pinned(pair_col[&(l, k)])) {
                vec![particular[pair_col[&(l, k)]].checked_div(&c[l]).expect("nonzero")]
            } else if pinned(pair_col[&(k, k)]) {
                let sq = &particular[pair_col[&(k, k)]];
                if sq.is_zero() {
                    vec![ExactScalar::zero()]
                } else if let Some(r) = exact_sqrt(sq) {
                    r.to_vec()
                } else {
                    unresolved = true;
                    Vec::new()
                }
            } else {
                let mut f = free.clone();
                f.push(k);
                let mut c2 = c.clone();
                c2.push(ExactScalar::zero());
                next.push((c2, f));
                continue;
            };
            for o in options {
                let mut c2 = c.clone();
                c2.push(o);
                next.push((c2, free.clone()));
            }
        }
        candidates = next;
    }

    let holds = |c: &[ExactScalar]| {
        let r = rhat + &combine(casimirs, c, dim);
        sb(&r, &r).is_zero()
    };
    let mut solutions = Vec::new();
    for (c, mut free) in candidates {
        if !holds(&c) {
            continue;
        }
        free.retain(|&k| {
            let mut shifted = c.clone();
            shifted[k] = ExactScalar::one();
            holds(&shifted)
        });
        let s = combine(casimirs, &c, dim);
        solutions.push(CompletionSolution { coefficients: c, free, s });
    }
    let detail = match (solutions.len(), unresolved) {
        (0, true) => "no verified completion; a quadratic root is not in Q(i)".to_string(),
        (0, false) => "no symmetric completion: linearised solutions do not lift".to_string(),
        (k, _) => format!("{k} completions found"),
    };
    Ok(CompletionReport { casimirs: casimirs.to_vec(), solutions, linear_obstruction: false, detail })
}

/// Completion of r̂_d over the full space of quadratic Casimirs of iso(d),
/// which is computed rather than assumed.
pub fn check_no_quasitriangular_completion_witness(
    d: usize,
    n: &[ExactScalar],
) -> Result<CompletionReport, ClassicalError> {
    let g = build_isod(d)?;
    let rhat = build_rhat_d(d, n)?;
    let casimirs = invariant_symmetric_tensors(&g.alg);
    completion_witness(&g.alg, &rhat, &casimirs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso3::{build_casimir_x, build_iso3, build_rhat};
    use crate::isod::{build_casimir_x_d, default_n, iso3_to_isod};
    use scalar_series::{q, qi};

    #[test]
    fn exact_square_roots() {
        let r = exact_sqrt(&ExactScalar::new(qi(-3), qi(4))).unwrap();
        assert_eq!(&r[0] * &r[0], ExactScalar::new(qi(-3), qi(4)));
        let r = exact_sqrt(&ExactScalar::ratio(-9, 4)).unwrap();
        assert_eq!(r[0], ExactScalar::new(qi(0), q(3, 2)));
        assert!(exact_sqrt(&ExactScalar::int(2)).is_none());
    }

    #[test]
    fn casimir_space_dimensions() {
        for d in 2..=6 {
            let g = build_isod(d).unwrap();
            let c = invariant_symmetric_tensors(&g.alg);
            assert_eq!(c.len(), if d == 3 { 2 } else { 1 }, "d = {d}");
            if d != 3 {
                let x = build_casimir_x_d(d).unwrap();
                let k = x.get(&[c[0].components().next().unwrap().0[0], c[0].components().next().unwrap().0[1]]);
                let lead = c[0].components().next().unwrap().1.clone();
                assert_eq!(c[0].scale(&k.checked_div(&lead).unwrap()), x);
            }
        }
    }

    #[test]
    fn three_dimensions_has_the_casimir_completion() {
        let rep = check_no_quasitriangular_completion_witness(3, &default_n(3)).unwrap();
        assert!(rep.exists());
        let x = build_casimir_x(&qi(0)).change_basis(&iso3_to_isod());
        let found: Vec<&WedgeTensor> = rep.solutions.iter().map(|s| &s.s).collect();
        assert_eq!(found.len(), 2);
        assert!(found.contains(&&x) && found.contains(&&-x.clone()));
    }

    #[test]
    fn xi_family_in_three_dimensions() {
        let g = build_iso3();
        let casimirs = vec![build_casimir_x(&qi(0)), build_casimir_x(&qi(1)) - build_casimir_x(&qi(0))];
        for xi in [q(3, 5), qi(-2)] {
            let rep = completion_witness(&g, &build_rhat(&xi), &casimirs).unwrap();
            let found: Vec<&WedgeTensor> = rep.solutions.iter().map(|s| &s.s).collect();
            assert!(found.contains(&&build_casimir_x(&xi)), "xi = {xi}");
        }
    }

    #[test]
    fn no_completion_away_from_three_dimensions() {
        for d in [2, 4, 5, 6] {
            let rep = check_no_quasitriangular_completion_witness(d, &default_n(d)).unwrap();
            assert!(!rep.exists(), "d = {d}");
            assert!(rep.linear_obstruction, "d = {d}");
        }
    }

    #[test]
    fn null_n_needs_no_completion() {
        let n = vec![ExactScalar::int(1), ExactScalar::int(1), ExactScalar::zero(), ExactScalar::zero()];
        let rep = check_no_quasitriangular_completion_witness(4, &n).unwrap();
        assert!(rep.exists());
        assert!(rep.solutions.iter().any(|s| s.s.is_zero()));
    }
}
