use std::path::PathBuf;

use hopf_structures::{
    build_k_xi_iso3, build_max_ext_sl22, build_sl2_pair, build_uq_d21e, build_uq_sl2, check_centrality, hopf_suite,
    invariant_x, invariant_xtilde, serre_elements, CheckReport, HopfAlgebraDef,
};
use rmatrix::{
    check_hexagon, check_inverse, check_momentum_conjugation, check_quasi_cocommutativity, check_ybe, rmat_d21e,
    rmat_k_xi, rmat_max_ext, rmat_sl2_tensor, rmat_uq_sl2, RMatrixSeries,
};
use scalar_series::{q, qi, Q};

use crate::config::{check_order, parse_real, usage, AlgebraId, CliError};
use crate::report::{params, Entry, Report, Status};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub algebra: Option<AlgebraId>,
    pub order: Option<usize>,
    pub xi: String,
    pub epsilon: Option<String>,
    pub strict: bool,
    /// A saved algebra definition; replaces `algebra`.
    pub definition: Option<PathBuf>,
}

impl VerifyConfig {
    pub fn new(algebra: AlgebraId) -> Self {
        Self { algebra: Some(algebra), order: None, xi: "0".into(), epsilon: None, strict: false, definition: None }
    }
}

const HOPF_REF: &str = "Hopf algebra axioms";
const RMAT_REF: &str = "universal R-matrix";

fn hopf_entries(h: &mut HopfAlgebraDef) -> Vec<Entry> {
    hopf_suite(h).into_iter().map(|c| entry("hopf", HOPF_REF, &c)).collect()
}

fn entry(prefix: &str, paper_ref: &str, c: &CheckReport) -> Entry {
    let mut detail = c.detail.clone();
    if let Some(k) = c.first_failing_order {
        detail = format!("first failing order {k}, {} failing terms; {detail}", c.failing_term_count);
    }
    Entry::check(format!("{prefix}.{}", c.check), paper_ref, c.passed, detail)
}

fn rmatrix_entries(r: &RMatrixSeries, hexagon: Option<bool>) -> Vec<Entry> {
    let (inv, (qcc, ybe)) =
        rayon::join(|| check_inverse(r), || rayon::join(|| check_quasi_cocommutativity(r), || check_ybe(r)));
    let mut out = vec![
        entry("rmatrix", RMAT_REF, &inv),
        entry("rmatrix", "quasi-cocommutativity", &qcc),
        entry("rmatrix", "Yang-Baxter equation", &ybe),
    ];
    match hexagon {
        Some(true) => out.push(entry("rmatrix", "quasi-triangularity axioms", &check_hexagon(r))),
        Some(false) => {}
        None => out.push(Entry::new(
            "rmatrix.hexagon",
            "quasi-triangularity axioms",
            Status::Skipped,
            "hexagon checks are defined for uq_sl2, sl2_tensor and k_xi_iso3 only",
        )),
    }
    out
}

/// `Some(true)` runs the hexagon checks, `None` reports them as skipped.
fn hexagon(strict: bool, supported: bool) -> Option<bool> {
    match (strict, supported) {
        (false, _) => Some(false),
        (true, true) => Some(true),
        (true, false) => None,
    }
}

fn skipped_rmatrix(order: usize, limit: usize) -> Entry {
    Entry::new(
        "rmatrix.checks",
        RMAT_REF,
        Status::Skipped,
        format!("R-matrix checks run up to order {limit}; requested {order}"),
    )
}

fn build_err(e: impl std::fmt::Display) -> CliError {
    usage(format!("cannot build algebra: {e}"))
}

/// Confluence, Hopf axioms and the R-matrix checks applicable at the order.
pub fn cmd_verify(cfg: &VerifyConfig) -> Result<Report, CliError> {
    if let Some(path) = &cfg.definition {
        return verify_definition(path);
    }
    let id = cfg.algebra.ok_or_else(|| usage("verify needs --algebra or --definition"))?;
    let order = check_order(cfg.order.unwrap_or(id.default_order()))?;
    let xi = parse_real("xi", &cfg.xi)?;
    let epsilon = match &cfg.epsilon {
        Some(s) => Some(parse_real("epsilon", s)?),
        None => None,
    };
    let mut p = params([("algebra", id.name().to_string()), ("order", order.to_string())]);
    let run_r = order <= id.rmatrix_order_limit();
    let mut checks = Vec::new();
    match id {
        AlgebraId::UqSl2 => {
            let alpha = epsilon.unwrap_or(qi(1));
            p.insert("alpha".into(), alpha.to_string());
            checks.extend(hopf_entries(&mut build_uq_sl2(&alpha, order).map_err(build_err)?));
            if run_r {
                checks.extend(rmatrix_entries(
                    &rmat_uq_sl2(&alpha, order).map_err(build_err)?,
                    hexagon(cfg.strict, true),
                ));
            }
        }
        AlgebraId::Sl2Tensor => {
            let eps = nonzero(epsilon.unwrap_or(q(1, 10)))?;
            p.insert("epsilon".into(), eps.to_string());
            p.insert("xi".into(), xi.to_string());
            checks.extend(hopf_entries(&mut build_sl2_pair(&eps, &xi, -1, order).map_err(build_err)?));
            if run_r {
                let r = rmat_sl2_tensor(&eps, &xi, order).map_err(build_err)?;
                checks.extend(rmatrix_entries(&r, hexagon(cfg.strict, true)));
            }
        }
        AlgebraId::KXiIso3 => {
            p.insert("xi".into(), xi.to_string());
            let mut h = build_k_xi_iso3(&xi, order).map_err(build_err)?;
            checks.extend(hopf_entries(&mut h));
            for (name, x) in [("x", invariant_x(&h)), ("xtilde", invariant_xtilde(&h))] {
                let c = x.and_then(|x| check_centrality(&h, &x)).map_err(build_err)?;
                checks.push(entry(
                    "center",
                    &format!("central element {name}"),
                    &CheckReport { check: name.into(), ..c },
                ));
            }
            if run_r {
                let r = rmat_k_xi(&xi, order).map_err(build_err)?;
                checks.extend(rmatrix_entries(&r, hexagon(cfg.strict, true)));
                checks.push(entry("rmatrix", "momentum conjugation identities", &check_momentum_conjugation(&r)));
            }
        }
        AlgebraId::D21e => {
            let eps = epsilon.unwrap_or(q(1, 3));
            p.insert("epsilon".into(), eps.to_string());
            let mut h = build_uq_d21e(&eps, order).map_err(build_err)?;
            checks.extend(hopf_entries(&mut h));
            let serre = serre_elements(&h).map_err(build_err)?;
            let bad: Vec<_> = serre.iter().filter(|(_, e)| !e.is_zero()).map(|(n, _)| n.clone()).collect();
            checks.push(Entry::check(
                "hopf.serre",
                "Serre relations",
                bad.is_empty(),
                if bad.is_empty() { format!("{} Serre elements vanish", serre.len()) } else { bad.join(", ") },
            ));
            if run_r {
                checks.extend(rmatrix_entries(&rmat_d21e(&eps, order).map_err(build_err)?, hexagon(cfg.strict, false)));
            }
        }
        AlgebraId::MaxExtSl22 => {
            p.insert("xi".into(), xi.to_string());
            checks.extend(hopf_entries(&mut build_max_ext_sl22(&xi, order).map_err(build_err)?));
            if run_r {
                let r = rmat_max_ext(&xi, order).map_err(build_err)?;
                checks.extend(rmatrix_entries(&r, hexagon(cfg.strict, false)));
            }
        }
    }
    if !run_r {
        checks.push(skipped_rmatrix(order, id.rmatrix_order_limit()));
    }
    Ok(Report::new("verify", p, checks))
}

fn nonzero(eps: Q) -> Result<Q, CliError> {
    if eps == qi(0) {
        return Err(usage("--epsilon must be nonzero"));
    }
    Ok(eps)
}

fn verify_definition(path: &PathBuf) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path)?;
    let def = algebra_core::load_definition(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut h = HopfAlgebraDef::from_definition(def).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let p = params([
        ("definition", path.display().to_string()),
        ("algebra", h.name().to_string()),
        ("order", h.order().to_string()),
    ]);
    Ok(Report::new("verify", p, hopf_entries(&mut h)))
}
