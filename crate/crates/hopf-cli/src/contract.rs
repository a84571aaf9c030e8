use hopf_structures::{ratio_test, ContractionResidual};
use rmatrix::{prelimit_ratio_test, Pairing};
use scalar_series::{q, qi, ExactScalar, Q};

use crate::config::{check_order, parse_real, usage, CliError};
use crate::report::{params, Entry, Report, Status};

#[derive(Clone, Debug)]
pub struct ContractArgs {
    pub epsilon: String,
    pub xi: String,
    pub order: usize,
    /// ε̃ = βε + ξε²; only β = −1 has a finite limit.
    pub beta: i64,
    pub pairing: Pairing,
}

impl Default for ContractArgs {
    fn default() -> Self {
        Self { epsilon: "1/10".into(), xi: "0".into(), order: 3, beta: -1, pairing: Pairing::Product }
    }
}

const REF: &str = "contraction limit of the sl(2) pair";

fn f(x: &Q) -> f64 {
    ExactScalar::real(x.clone()).to_f64().0
}

fn describe(norms: &[Q], ratios: &[Option<Q>]) -> String {
    let norms: Vec<String> = norms.iter().map(|n| format!("{:.3e}", f(n))).collect();
    let ratios: Vec<String> =
        ratios.iter().map(|r| r.as_ref().map_or("undefined".to_string(), |r| format!("{:.4}", f(r)))).collect();
    format!("norms [{}], ratios [{}]", norms.join(", "), ratios.join(", "))
}

/// A residual passes when it vanishes at all three ε or every ratio is at
/// least 3/2, so O(ε²) relations pass too. With `window`, ratios above 5/2
/// also fail.
fn judge(name: String, norms: &[Q], ratios: &[Option<Q>], window: bool) -> Entry {
    let zero = qi(0);
    if norms.iter().all(|n| *n == zero) {
        return Entry::check(name, REF, true, "vanishes identically");
    }
    let (lo, hi) = (q(3, 2), q(5, 2));
    let ok = ratios.iter().all(|r| r.as_ref().is_some_and(|r| *r >= lo && (!window || *r <= hi)));
    let mut detail = describe(norms, ratios);
    if ratios.iter().flatten().any(|r| *r < qi(1)) {
        detail = format!("divergent: residual grows as ε shrinks; {detail}");
    } else if ratios.iter().flatten().all(|r| *r > hi) {
        detail = format!("faster than O(ε); {detail}");
    }
    Entry::check(name, REF, ok, detail)
}

fn max_norms(rs: &[ContractionResidual]) -> Vec<Q> {
    (0..3).map(|k| rs.iter().map(|r| r.norms[k].clone()).max().unwrap_or_else(|| qi(0))).collect()
}

/// Residual ratios at ε, ε/2, ε/4 for every relation of the limit algebra and,
/// with β = −1, for the R-matrix.
pub fn cmd_contract_residual(args: &ContractArgs) -> Result<Report, CliError> {
    let eps = parse_real("epsilon", &args.epsilon)?;
    if eps == qi(0) {
        return Err(usage("--epsilon must be nonzero"));
    }
    let xi = parse_real("xi", &args.xi)?;
    let order = check_order(args.order)?;
    if args.beta != 1 && args.beta != -1 {
        return Err(usage("--beta must be 1 or -1"));
    }
    let p = params([
        ("epsilon", eps.to_string()),
        ("xi", xi.to_string()),
        ("order", order.to_string()),
        ("beta", args.beta.to_string()),
        ("pairing", format!("{:?}", args.pairing)),
    ]);
    let (relations, rmat) = rayon::join(
        || ratio_test(&eps, &xi, args.beta, order),
        || (args.beta == -1).then(|| prelimit_ratio_test(&eps, &xi, order, args.pairing)),
    );
    let relations = relations.map_err(|e| usage(e.to_string()))?;
    let mut checks: Vec<Entry> =
        relations.iter().map(|r| judge(format!("relation.{}", r.relation), &r.norms, &r.ratios, false)).collect();
    let norms = max_norms(&relations);
    let ratios: Vec<Option<Q>> = norms.windows(2).map(|w| (w[1] != qi(0)).then(|| &w[0] / &w[1])).collect();
    checks.push(judge("relations.max".into(), &norms, &ratios, true));
    match rmat {
        Some(Ok(r)) => checks.push(judge("rmatrix.prelimit".into(), &r.norms, &r.ratios, true)),
        Some(Err(e)) => checks.push(Entry::check("rmatrix.prelimit", REF, false, e.to_string())),
        None => checks.push(Entry::new(
            "rmatrix.prelimit",
            REF,
            Status::Skipped,
            "the pre-limit R-matrix is only defined for beta = -1",
        )),
    }
    Ok(Report::new("contract-residual", p, checks))
}
