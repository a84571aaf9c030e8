//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout; exits nonzero on any failure.

use std::time::Instant;

use classical_limit::{
    build_classical_r, build_iso3, check_mcybe_d, check_no_quasitriangular_completion_witness, classical_suite,
    default_n, tensor_from_letter_pairs,
};
use hopf_structures::{
    build_k_xi_iso3, build_max_ext_sl22, build_sl2_pair, build_uq_d21e, build_uq_sl2, hopf_suite, ratio_test,
    HopfAlgebraDef,
};
use kappa_scattering::{
    classical_deviation, conservation_report, rmatrix_shadow_residuals, sample_pairs, scatter, sixth_law_contrast,
    Complex64, ScatterConfig,
};
use rmatrix::{
    check_momentum_conjugation, check_quasi_cocommutativity, check_ybe, classical_limit_extract, prelimit_ratio_test,
    rmat_k_xi, rmat_max_ext, rmat_uq_sl2, Pairing,
};
use scalar_series::{
    dilog_series, log1m_over_x_series, q, q_factorial, q_number, qdilog_coefficients, qdilog_leading_terms,
    qexp_coefficients, qi, ExactScalar, HbarSeries, Q,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn xis() -> [Q; 4] {
    [qi(0), qi(1), qi(-2), q(3, 5)]
}

fn suite(label: &str, h: Result<HopfAlgebraDef, hopf_structures::HopfError>) -> Result<(), String> {
    let mut h = h.map_err(|e| format!("{label}: {e}"))?;
    for c in hopf_suite(&mut h) {
        ensure(c.passed, || format!("{label}: {} failed: {}", c.check, c.detail))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    suite("uq_sl2 N=4", build_uq_sl2(&qi(1), 4))?;
    suite("sl2 pair eps=1/10 N=4", build_sl2_pair(&q(1, 10), &qi(0), -1, 4))?;
    for xi in xis() {
        suite(&format!("K_xi xi={xi} N=4"), build_k_xi_iso3(&xi, 4))?;
    }
    suite("d21e eps=1/3 N=2", build_uq_d21e(&q(1, 3), 2))?;
    for xi in [qi(0), qi(1)] {
        suite(&format!("max_ext xi={xi} N=2"), build_max_ext_sl22(&xi, 2))?;
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs <= 600.0, || format!("took {secs:.0}s"))?;
    Ok(format!("9 algebras x 5 checks exact, {secs:.1}s"))
}

fn criterion_2() -> Outcome {
    let mut rs = vec![("uq_sl2 N=4".to_string(), rmat_uq_sl2(&qi(1), 4))];
    for xi in [qi(0), qi(1)] {
        rs.push((format!("K_xi xi={xi} N=3"), rmat_k_xi(&xi, 3)));
    }
    rs.push(("max_ext xi=0 N=2".into(), rmat_max_ext(&qi(0), 2)));
    for (label, r) in rs {
        let r = r.map_err(|e| format!("{label}: {e}"))?;
        for c in [check_quasi_cocommutativity(&r), check_ybe(&r)] {
            ensure(c.passed, || format!("{label}: {} failed: {}", c.check, c.detail))?;
        }
    }
    Ok("quasi-cocommutativity and YBE residuals vanish for 4 R-matrices".into())
}

fn in_window(r: &Option<Q>) -> bool {
    r.as_ref().is_some_and(|r| *r >= q(3, 2) && *r <= q(5, 2))
}

fn criterion_3() -> Outcome {
    let eps = q(1, 10);
    let mut worst = Vec::new();
    for xi in [qi(0), q(3, 5)] {
        let rel = ratio_test(&eps, &xi, -1, 3).map_err(|e| e.to_string())?;
        for r in &rel {
            ensure(r.converges(&q(3, 2)), || format!("xi={xi}: {} ratios {:?}", r.relation, r.ratios))?;
        }
        let max: Vec<Q> = (0..3).map(|k| rel.iter().map(|r| r.norms[k].clone()).max().unwrap()).collect();
        let ratios: Vec<Option<Q>> = max.windows(2).map(|w| Some(&w[0] / &w[1])).collect();
        ensure(ratios.iter().all(in_window), || format!("xi={xi}: max-residual ratios {ratios:?}"))?;
        let pre = prelimit_ratio_test(&eps, &xi, 3, Pairing::Product).map_err(|e| e.to_string())?;
        ensure(pre.within(&q(3, 2), &q(5, 2)), || format!("xi={xi}: R-matrix ratios {:?}", pre.ratios))?;
        worst.extend(ratios.into_iter().chain(pre.ratios).flatten());
    }
    let wrong = ratio_test(&eps, &qi(0), 1, 3).map_err(|e| e.to_string())?;
    let diverging: Vec<_> = wrong
        .iter()
        .filter(|r| r.ratios.iter().all(|x| x.as_ref().is_some_and(|x| *x >= q(2, 5) && *x <= q(3, 5))))
        .map(|r| r.relation.clone())
        .collect();
    ensure(!diverging.is_empty(), || "beta=+1 shows no ratio near 1/2".into())?;
    let f = |x: &Q| ExactScalar::real(x.clone()).to_f64().0;
    let lo = worst.iter().map(f).fold(f64::INFINITY, f64::min);
    let hi = worst.iter().map(f).fold(0.0, f64::max);
    Ok(format!("ratios in [{lo:.3}, {hi:.3}]; beta=+1 diverges with ratio 1/2 in {}", diverging.join(", ")))
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    for xi in xis() {
        for r in classical_suite(&xi) {
            ensure(r.passed, || format!("xi={xi}: {r}"))?;
        }
    }
    let mut exists = Vec::new();
    for d in 2..=6 {
        let n = default_n(d);
        let m = check_mcybe_d(d, &n).map_err(|e| e.to_string())?;
        ensure(m.passed, || format!("d={d}: {m}"))?;
        let w = check_no_quasitriangular_completion_witness(d, &n).map_err(|e| e.to_string())?;
        if w.exists() {
            exists.push(d);
        }
    }
    ensure(exists == [3], || format!("completion found for d in {exists:?}"))?;
    let secs = t.elapsed().as_secs_f64();
    ensure(secs <= 60.0, || format!("took {secs:.0}s"))?;
    Ok(format!("3D suite at 4 xi, mCYBE d=2..6, completion only at d=3, {secs:.1}s"))
}

fn criterion_5() -> Outcome {
    for xi in xis() {
        let r = rmat_k_xi(&xi, 2).map_err(|e| e.to_string())?;
        let first = classical_limit_extract(&r).map_err(|e| e.to_string())?;
        let got = tensor_from_letter_pairs(&first.entries).map_err(|e| e.to_string())?;
        let want = build_classical_r(&xi);
        ensure(got == want, || format!("xi={xi}: difference {}", (got.clone() - want.clone()).display(&build_iso3())))?;
    }
    Ok("first-order R-matrix term equals the classical r-matrix at 4 xi".into())
}

fn criterion_6() -> Outcome {
    let kappas = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(0.0, 10.0)];
    let pairs = sample_pairs(2024, 1000);
    let mut worst = 0.0f64;
    let mut used_total = 0;
    for k in kappas {
        let cfg = ScatterConfig::new(k).map_err(|e| e.to_string())?;
        let mut used = 0;
        for (p, q) in &pairs {
            let Ok((p2, q2)) = scatter(p, q, &cfg) else { continue };
            used += 1;
            worst = worst.max(conservation_report(p, q, &p2, &q2, &cfg).worst());
        }
        ensure(used >= 990, || format!("kappa={k}: only {used} usable samples"))?;
        used_total += used;
    }
    ensure(worst < 1e-12, || format!("worst conservation residual {worst:e}"))?;

    let rate_pairs = sample_pairs(11, 50);
    let total = |k: f64| -> Result<f64, String> {
        let cfg = ScatterConfig::real(k).map_err(|e| e.to_string())?;
        rate_pairs.iter().map(|(p, q)| classical_deviation(p, q, &cfg).map_err(|e| e.to_string())).sum()
    };
    let d: Vec<f64> = [10.0, 20.0, 40.0].into_iter().map(total).collect::<Result<_, _>>()?;
    let ratios = [d[0] / d[1], d[1] / d[2]];
    ensure(ratios.iter().all(|r| (r - 2.0).abs() <= 0.4), || format!("1/kappa ratios {ratios:?}"))?;

    let cfg = ScatterConfig::real(2.0).map_err(|e| e.to_string())?;
    let (mut n, mut big) = (0, 0);
    for (p, q) in &pairs {
        let Ok(c) = sixth_law_contrast(p, q, &cfg) else { continue };
        n += 1;
        if c.sixth_holds && c.energy_residual > 1e-3 {
            big += 1;
        }
    }
    ensure(big * 100 >= n * 95, || format!("energy difference violated in only {big}/{n}"))?;
    Ok(format!(
        "{used_total} samples, worst residual {worst:.1e}; deviation ratios {:.3}, {:.3}; energy difference violated in {big}/{n}",
        ratios[0], ratios[1]
    ))
}

fn criterion_7() -> Outcome {
    for xi in [qi(0), qi(1), q(3, 5)] {
        let r = rmat_k_xi(&xi, 3).map_err(|e| e.to_string())?;
        let c = check_momentum_conjugation(&r);
        ensure(c.passed, || format!("xi={xi}: {}", c.detail))?;
    }
    let mut worst = 0.0f64;
    for k in [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(0.0, 10.0)] {
        let cfg = ScatterConfig::new(k).map_err(|e| e.to_string())?;
        for (p, q) in sample_pairs(7, 300) {
            let Ok((p2, q2)) = scatter(&p, &q, &cfg) else { continue };
            let s = rmatrix_shadow_residuals(&p, &q, &p2, &q2, &cfg).map_err(|e| e.to_string())?;
            let sixth = conservation_report(&p, &q, &p2, &q2, &cfg).residuals[5];
            worst = s.iter().copied().fold(worst.max(sixth), f64::max);
        }
    }
    ensure(worst < 1e-12, || format!("worst shadow residual {worst:e}"))?;
    Ok(format!("6 conjugation identities exact at N=3 for 3 xi; numeric shadow worst {worst:.1e}"))
}

fn poly_mul(a: &[HbarSeries], b: &[HbarSeries], n_max: usize, order: usize) -> Vec<HbarSeries> {
    let mut out = vec![HbarSeries::zero(order); n_max + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= n_max {
                out[i + j] += &x.mul_ref(y);
            }
        }
    }
    out
}

/// exp of a polynomial in X without constant term, by the Taylor sum.
fn poly_exp(p: &[HbarSeries], n_max: usize, order: usize) -> Vec<HbarSeries> {
    let mut out = vec![HbarSeries::zero(order); n_max + 1];
    let mut term = out.clone();
    term[0] = HbarSeries::one(order);
    for k in 0..=n_max {
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
        term = poly_mul(&term, p, n_max, order).iter().map(|t| t.scale_q(&q(1, k as i64 + 1))).collect();
    }
    out
}

fn criterion_8() -> Outcome {
    let (order, n_max) = (6, 8);
    let mut count = 0;
    for alpha in [qi(1), q(-2, 1), q(3, 7), q(1, 10)] {
        let one = HbarSeries::one(order);
        let qa = HbarSeries::q_pow(&alpha, order);
        for n in 0..=n_max as i64 {
            let geometric =
                (0..n).fold(HbarSeries::zero(order), |acc, k| &acc + &HbarSeries::q_pow(&(&alpha * qi(k)), order));
            ensure(q_number(n, &alpha, order) == geometric, || format!("[{n}] at alpha={alpha}"))?;
            let lhs = q_number(n, &alpha, order).mul_ref(&(&one - &qa));
            ensure(lhs == &one - &HbarSeries::q_pow(&(&alpha * qi(n)), order), || format!("[{n}](1-q)"))?;
            let f = q_factorial(n as u32, &alpha, order);
            let prod = (1..=n).fold(HbarSeries::one(order), |acc, k| acc.mul_ref(&q_number(k, &alpha, order)));
            ensure(f == prod, || format!("[{n}]! at alpha={alpha}"))?;
            count += 3;
        }
        let mut p = vec![HbarSeries::zero(order)];
        p.extend(qdilog_coefficients(n_max, &alpha, order));
        let qexp = qexp_coefficients(n_max, &alpha, order);
        ensure(poly_exp(&p, n_max, order) == qexp, || format!("exp of q-dilog at alpha={alpha}"))?;
        for (n, c) in qexp.iter().enumerate() {
            ensure(c.mul_ref(&q_factorial(n as u32, &alpha, order)) == one, || format!("1/[{n}]!"))?;
        }
        let lead = qdilog_leading_terms(n_max, &alpha, order);
        for (k, (ck, lk)) in p[1..].iter().zip(&lead).enumerate() {
            for j in 0..=k.min(order) {
                ensure(ck.coeff(j) == lk.coeff(j), || format!("near q=1 term n={} j={j}", k + 1))?;
            }
        }
        count += 2 + n_max;
    }
    let li = dilog_series(n_max);
    let lg = log1m_over_x_series(n_max);
    for k in 0..n_max {
        ensure(li[k] == ExactScalar::ratio(1, ((k + 1) * (k + 1)) as i64), || format!("Li2 coefficient {k}"))?;
        ensure(lg[k] == -li[k].scale(&qi(k as i64 + 1)), || format!("log(1-x)/x coefficient {k}"))?;
    }
    Ok(format!("{count} q-function identities exact at N={order}, n_max={n_max}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Hopf axiom suites", criterion_1),
        ("quasi-cocommutativity and YBE", criterion_2),
        ("contraction residual ratios", criterion_3),
        ("classical r-matrix suite", criterion_4),
        ("first-order R-matrix vs classical r", criterion_5),
        ("kappa scattering conservation", criterion_6),
        ("momentum conjugation and numeric shadow", criterion_7),
        ("q-special functions", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg} [{secs:.1}s]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("acceptance: {}/8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
