use kappa_scattering::{
    conservation_report, rmatrix_shadow_residuals, sample_pairs, scatter, sixth_law_contrast, Branch, Complex64,
    Momentum3, ScatterConfig, ScatterError, LAW_NAMES, SHADOW_NAMES,
};
use serde_json::{json, Value};

use crate::config::{parse_scalar, usage, CliError};
use crate::report::{params, Entry, Report};

#[derive(Clone, Debug)]
pub struct ScatterArgs {
    /// JSON `[[re, im], [re, im], [re, im]]` for (p₀, p₊, p₋).
    pub p: Option<String>,
    pub q: Option<String>,
    pub kappa: String,
    pub tolerance: f64,
    pub branch: Branch,
    pub seed: u64,
    pub samples: usize,
}

impl Default for ScatterArgs {
    fn default() -> Self {
        Self {
            p: None,
            q: None,
            kappa: "1".into(),
            tolerance: 1e-12,
            branch: Branch::Principal,
            seed: 0,
            samples: 1000,
        }
    }
}

const CONS_REF: &str = "momentum conservation laws";
const SHADOW_REF: &str = "R-matrix conjugation of momenta";

pub fn parse_momentum(flag: &str, s: &str) -> Result<Momentum3, CliError> {
    let v: Vec<[f64; 2]> =
        serde_json::from_str(s).map_err(|e| usage(format!("--{flag}: expected [[re, im] x 3]: {e}")))?;
    let [a, b, c] = v[..] else {
        return Err(usage(format!("--{flag}: expected three components, got {}", v.len())));
    };
    let z = |x: [f64; 2]| Complex64::new(x[0], x[1]);
    Momentum3::new(z(a), z(b), z(c)).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn momentum_json(m: &Momentum3) -> Value {
    json!(m.components().map(|z| [z.re, z.im]))
}

fn config(args: &ScatterArgs) -> Result<ScatterConfig, CliError> {
    if !(args.tolerance.is_finite() && args.tolerance > 0.0) {
        return Err(usage("--tolerance must be positive"));
    }
    let (re, im) = parse_scalar("kappa", &args.kappa)?.to_f64();
    let cfg = ScatterConfig::new(Complex64::new(re, im)).map_err(|e| usage(format!("--kappa: {e}")))?;
    Ok(cfg.with_branch(args.branch).with_tolerance(args.tolerance))
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

fn kinematic_failure(e: &ScatterError) -> Entry {
    Entry::check("kinematics", CONS_REF, false, e.to_string())
}

/// One pair when `p` and `q` are given, otherwise a seeded batch.
pub fn cmd_scatter(args: &ScatterArgs) -> Result<Report, CliError> {
    let cfg = config(args)?;
    let mut p = params([
        ("kappa", args.kappa.clone()),
        ("tolerance", args.tolerance.to_string()),
        ("branch", format!("{:?}", args.branch).to_lowercase()),
    ]);
    match (&args.p, &args.q) {
        (Some(ps), Some(qs)) => {
            let (pm, qm) = (parse_momentum("p", ps)?, parse_momentum("q", qs)?);
            Ok(single(&pm, &qm, &cfg, p))
        }
        (None, None) => {
            if args.samples == 0 {
                return Err(usage("--samples must be positive"));
            }
            p.insert("seed".into(), args.seed.to_string());
            p.insert("samples".into(), args.samples.to_string());
            Ok(batch(args.seed, args.samples, &cfg, p))
        }
        _ => Err(usage("give both --p and --q, or neither for a seeded batch")),
    }
}

fn single(
    pm: &Momentum3,
    qm: &Momentum3,
    cfg: &ScatterConfig,
    p: std::collections::BTreeMap<String, String>,
) -> Report {
    let (p2, q2) = match scatter(pm, qm, cfg) {
        Ok(out) => out,
        Err(e) => return Report::new("scatter", p, vec![kinematic_failure(&e)]),
    };
    let rep = conservation_report(pm, qm, &p2, &q2, cfg);
    let mut checks: Vec<Entry> = rep
        .named()
        .map(|(n, r)| Entry::check(format!("conservation.{n}"), CONS_REF, r < cfg.tolerance, sci(r)))
        .collect();
    let mut data = json!({
        "p_out": momentum_json(&p2),
        "q_out": momentum_json(&q2),
        "residuals": LAW_NAMES.iter().zip(rep.residuals).map(|(n, r)| (n.to_string(), json!(r))).collect::<serde_json::Map<_, _>>(),
    });
    match rmatrix_shadow_residuals(pm, qm, &p2, &q2, cfg) {
        Ok(s) => checks.extend(
            SHADOW_NAMES
                .iter()
                .zip(s)
                .map(|(n, r)| Entry::check(format!("shadow.{n}"), SHADOW_REF, r < cfg.tolerance, sci(r))),
        ),
        Err(e) => checks.push(Entry::check("shadow", SHADOW_REF, false, e.to_string())),
    }
    if let Ok(c) = sixth_law_contrast(pm, qm, cfg) {
        data["energy_difference_residual"] = json!(c.energy_residual);
    }
    Report::new("scatter", p, checks).with_data(data)
}

fn batch(seed: u64, n: usize, cfg: &ScatterConfig, p: std::collections::BTreeMap<String, String>) -> Report {
    let mut worst = [0.0f64; 6];
    let mut shadow = [0.0f64; 7];
    let (mut used, mut skipped, mut violated) = (0usize, 0usize, 0usize);
    for (pm, qm) in sample_pairs(seed, n) {
        let Ok((p2, q2)) = scatter(&pm, &qm, cfg) else {
            skipped += 1;
            continue;
        };
        used += 1;
        let rep = conservation_report(&pm, &qm, &p2, &q2, cfg);
        for (w, r) in worst.iter_mut().zip(rep.residuals) {
            *w = w.max(r);
        }
        if let Ok(s) = rmatrix_shadow_residuals(&pm, &qm, &p2, &q2, cfg) {
            for (w, r) in shadow.iter_mut().zip(s) {
                *w = w.max(r);
            }
        }
        if sixth_law_contrast(&pm, &qm, cfg).is_ok_and(|c| !c.energy_holds) {
            violated += 1;
        }
    }
    let mut checks: Vec<Entry> = LAW_NAMES
        .iter()
        .zip(worst)
        .map(|(n, r)| {
            Entry::check(format!("conservation.{n}"), CONS_REF, r < cfg.tolerance, format!("worst {}", sci(r)))
        })
        .collect();
    checks.extend(
        SHADOW_NAMES.iter().zip(shadow).map(|(n, r)| {
            Entry::check(format!("shadow.{n}"), SHADOW_REF, r < cfg.tolerance, format!("worst {}", sci(r)))
        }),
    );
    checks.push(Entry::check(
        "samples",
        CONS_REF,
        used > 0,
        format!("{used} used, {skipped} skipped near r = 0 or the branch cut"),
    ));
    let data = json!({ "used": used, "skipped": skipped, "energy_difference_violated": violated });
    Report::new("scatter", p, checks).with_data(data)
}
