//! The contraction limit of U_ħ(d(2,1;ε)) ⊗ U_{ε̃ħ}(sl(2)): q-deformed
//! psl(2|2) with the sl(2) sector {E_A,H_A,F_A} and the central triple
//! {E_C,F_C,H_C}, H_C = H₁ − 2H₂ − H₃.

use algebra_core::{Algebra, Element, Parity, TensorElement};
use scalar_series::{qi, ExactScalar, Q};

use crate::d21e::{
    cartan_exp, composite_coproducts, install_simple_rules, odd_definitionals, simple_coproducts, table_from, Sparams,
};
use crate::derive::{derive_rules, Definitional};
use crate::expr::{cosh, q_minus_qinv, qpow, qs, sinh_over_2hbar, sinh_ratio_series};
use crate::hopf::HopfAlgebraDef;
use crate::HopfError;

const LETTERS: [(&str, Parity); 20] = [
    ("E2", Parity::Odd),
    ("E12", Parity::Odd),
    ("E_A", Parity::Even),
    ("E_C", Parity::Even),
    ("E32", Parity::Odd),
    ("E132", Parity::Odd),
    ("E1", Parity::Even),
    ("E3", Parity::Even),
    ("H1", Parity::Even),
    ("H2", Parity::Even),
    ("H3", Parity::Even),
    ("H_A", Parity::Even),
    ("F2", Parity::Odd),
    ("F21", Parity::Odd),
    ("F_A", Parity::Even),
    ("F_C", Parity::Even),
    ("F23", Parity::Odd),
    ("F213", Parity::Odd),
    ("F1", Parity::Even),
    ("F3", Parity::Even),
];

/// `H_C = H₁ − 2H₂ − H₃`.
pub fn h_c(alg: &Algebra) -> Result<Element, HopfError> {
    Ok(alg.gen("H1")?.sub(&alg.gen("H2")?.scale_q(&qi(2))).sub(&alg.gen("H3")?))
}

/// E_C = −((q−q⁻¹)/2ħ)[E₃₂,E₁₂], F_C = ((q−q⁻¹)/2ħ)[F₂₁,F₂₃].
fn central_definitionals(alg: &Algebra) -> Result<Vec<Definitional>, HopfError> {
    let c = sinh_ratio_series(&qi(1), alg.order());
    let i = |n: &str| alg.table().index(n);
    Ok(vec![
        Definitional {
            letter: i("E_C")?,
            x: i("E32")?,
            y: i("E12")?,
            gamma: qi(0),
            scale: c.scale_q(&qi(-1)),
            seed: true,
        },
        Definitional { letter: i("F_C")?, x: i("F21")?, y: i("F23")?, gamma: qi(0), scale: c, seed: true },
    ])
}

/// Install `[x, y] = c` for a pair with at least one even letter.
fn put(alg: &mut Algebra, x: &str, y: &str, c: &Element) -> Result<(), HopfError> {
    let t = alg.mul(&alg.one(), c)?;
    if alg.table().index(x)? > alg.table().index(y)? {
        alg.add_rule(x, y, qi(0), t)?;
    } else {
        alg.add_rule(y, x, qi(0), t.neg())?;
    }
    Ok(())
}

fn install_sector_rules(alg: &mut Algebra, xi: &Q) -> Result<(), HopfError> {
    let order = alg.order();
    let g = |alg: &Algebra, n: &str| alg.gen(n);
    let zero = alg.zero();
    let hc = h_c(alg)?;

    // Central triple and H_A against the simple letters.
    for s in ["E1", "E2", "E3", "H1", "H2", "H3", "F1", "F2", "F3"] {
        for c in ["E_C", "F_C"] {
            put(alg, c, s, &zero)?;
        }
    }
    for h in ["H1", "H2", "H3"] {
        put(alg, "H_A", h, &zero)?;
    }
    for (k, (e, f)) in [("E1", "F1"), ("E2", "F2"), ("E3", "F3")].into_iter().enumerate() {
        let w = if k == 1 { qi(1) } else { qi(0) };
        put(alg, "H_A", e, &g(alg, e)?.scale_q(&w))?;
        put(alg, "H_A", f, &g(alg, f)?.scale_q(&-w))?;
    }

    // sl(2) ⊕ central sector, with H_C expanded in Cartan letters.
    let ea = g(alg, "E_A")?;
    let ec = g(alg, "E_C")?;
    let fa = g(alg, "F_A")?;
    let fc = g(alg, "F_C")?;
    let two = qi(2);
    put(alg, "E_C", "E_A", &zero)?;
    put(alg, "F_C", "F_A", &zero)?;
    put(alg, "F_C", "E_C", &zero)?;
    put(alg, "H_A", "E_A", &ea.scale_q(&two))?;
    put(alg, "H_A", "E_C", &ec.scale_q(&two))?;
    put(alg, "H_A", "F_A", &fa.scale_q(&-two.clone()))?;
    put(alg, "H_A", "F_C", &fc.scale_q(&-two))?;
    put(alg, "H1", "E_A", &zero)?;
    put(alg, "H3", "E_A", &zero)?;
    put(alg, "H2", "E_A", &ec.neg())?;
    put(alg, "H1", "F_A", &zero)?;
    put(alg, "H3", "F_A", &zero)?;
    put(alg, "H2", "F_A", &fc)?;
    let sinh = sinh_over_2hbar(alg, &hc, &qi(1))?;
    put(alg, "E_C", "F_A", &sinh)?;
    put(alg, "E_A", "F_C", &sinh)?;
    let h_xi = g(alg, "H_A")?.add(&hc.scale_q(xi));
    let ef = alg.mul(&cosh(alg, &hc, &qi(1))?, &h_xi)?.sub(&sinh.scale_q(xi));
    put(alg, "E_A", "F_A", &ef)?;

    // E_A and F_A against the simple letters.
    let q = qs(&qi(1), order);
    let qinv = qs(&qi(-1), order);
    let qq = q_minus_qinv(&qi(1), order);
    let m = |alg: &Algebra, xs: &[&str]| -> Result<Element, HopfError> {
        let es: Vec<Element> = xs.iter().map(|n| alg.gen(n)).collect::<Result<_, _>>()?;
        Ok(alg.mul_all(&es.iter().collect::<Vec<_>>())?)
    };
    // q₁ = q, q₂ = q₃ = q⁻¹.
    let q2m = cartan_exp(alg, [qi(0), qi(1), qi(0)])?;
    let q2p = cartan_exp(alg, [qi(0), qi(-1), qi(0)])?;
    let q3p = cartan_exp(alg, [qi(0), qi(0), qi(-1)])?;
    let q3m = cartan_exp(alg, [qi(0), qi(0), qi(1)])?;
    for s in ["E1", "F1"] {
        put(alg, "E_A", s, &zero)?;
        put(alg, "F_A", s, &zero)?;
    }
    // [E_A, E2] = −ħE₂E_C
    put(alg, "E_A", "E2", &m(alg, &["E2", "E_C"])?.shift_up(1).neg())?;
    // [E_A, F2] = q(E₁₃₂ + (q−q⁻¹)E₃₂E₁)q₂^{−H₂}
    let inner = g(alg, "E132")?.add(&m(alg, &["E32", "E1"])?.scale(&qq));
    let c = alg.mul(&inner, &q2m)?.scale(&q);
    put(alg, "E_A", "F2", &c)?;
    // [E_A, E3] = (q−q⁻¹)q E₃₂E₁₃₂
    let c = m(alg, &["E32", "E132"])?.scale(&qq.mul_ref(&q));
    put(alg, "E_A", "E3", &c)?;
    // [E_A, F3] = (q−q⁻¹)q E₂E₁₂q₃^{H₃}
    let c = alg.mul(&m(alg, &["E2", "E12"])?, &q3p)?.scale(&qq.mul_ref(&q));
    put(alg, "E_A", "F3", &c)?;
    // [F_A, F2] = −ħF_CF₂
    put(alg, "F_A", "F2", &m(alg, &["F_C", "F2"])?.shift_up(1).neg())?;
    // [F_A, E2] = q⁻¹q₂^{H₂}(F₂₁₃ − (q−q⁻¹)F₁F₂₃)
    let inner = g(alg, "F213")?.sub(&m(alg, &["F1", "F23"])?.scale(&qq));
    put(alg, "F_A", "E2", &alg.mul(&q2p, &inner)?.scale(&qinv))?;
    // [F_A, F3] = −(q−q⁻¹)q⁻¹F₂₁₃F₂₃
    let c = m(alg, &["F213", "F23"])?.scale(&qq.mul_ref(&qinv)).neg();
    put(alg, "F_A", "F3", &c)?;
    // [F_A, E3] = −(q−q⁻¹)q⁻¹q₃^{−H₃}F₂₁F₂
    let c = alg.mul(&q3m, &m(alg, &["F21", "F2"])?)?.scale(&qq.mul_ref(&qinv)).neg();
    put(alg, "F_A", "E3", &c)?;
    Ok(())
}

/// The maximally extended q-deformed sl(2|2) at truncation order `order`.
pub fn build_max_ext_sl22(xi: &Q, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    if order == 0 {
        return Err(HopfError::Invalid("order must be at least 1".into()));
    }
    let sp = Sparams::new(&qi(0));
    let mut table = table_from(&LETTERS)?;
    table.set_param("xi", ExactScalar::real(xi.clone()));
    let mut alg = Algebra::new(table, order);
    install_simple_rules(&mut alg, &sp)?;
    let odd = odd_definitionals(&alg, &sp)?;
    // First pass settles the simple and odd composite letters, so that the
    // sector rules below can be stated in normal order.
    derive_rules(&mut alg, &odd)?;
    install_sector_rules(&mut alg, xi)?;
    let mut defs = odd;
    defs.extend(central_definitionals(&alg)?);
    let log = derive_rules(&mut alg, &defs)?;
    if !log.unresolved.is_empty() {
        return Err(HopfError::Invalid(format!("underivable products: {:?}", log.unresolved)));
    }

    let mut known = simple_coproducts(&alg, &sp)?;
    let odd_seeds: Vec<Definitional> = defs.iter().filter(|d| alg.table().is_odd(d.letter)).cloned().collect();
    composite_coproducts(&alg, &odd_seeds, &mut known)?;
    for (k, v) in sector_coproducts(&alg, xi)? {
        known.insert(k.to_string(), v);
    }
    let n = alg.table().len() as u8;
    let coproduct = (0..n).map(|g| known[alg.table().name(g)].clone()).collect();
    let mut hopf = HopfAlgebraDef::new("max_ext_sl22", alg, coproduct, vec![ExactScalar::zero(); n as usize])?;
    hopf.set_metadata("xi", &xi.to_string());
    hopf.set_metadata("kappa", &(qi(2) * xi).to_string());
    hopf.set_metadata(
        "identification",
        "L = E_A + xi E_C; M = -F_A; P = -2hbar/(q-q^-1) E_C; K = 2hbar/(q-q^-1) F_C; C = H_C/2",
    );
    Ok(hopf)
}

fn sector_coproducts(alg: &Algebra, xi: &Q) -> Result<Vec<(&'static str, TensorElement)>, HopfError> {
    let order = alg.order();
    let g = |n: &str| alg.gen(n);
    let one = alg.one();
    let t = |a: &Element, b: &Element| TensorElement::from_elements(&[a, b]);
    let m = |xs: &[&Element]| alg.mul_all(xs);
    let hc = h_c(alg)?;
    let qm = qpow(alg, &hc, &qi(-1))?;
    let qp = qpow(alg, &hc, &qi(1))?;
    let h_xi = g("H_A")?.add(&hc.scale_q(xi));
    let qq = q_minus_qinv(&qi(1), order);
    let q = qs(&qi(1), order);
    let qinv = qs(&qi(-1), order);
    let (ea, ec, fa, fc, ha) = (g("E_A")?, g("E_C")?, g("F_A")?, g("F_C")?, g("H_A")?);

    let de_c = t(&ec, &one).add(&t(&qm, &ec))?;
    let df_c = t(&fc, &qp).add(&t(&one, &fc))?;
    let dh_a = t(&ha, &one).add(&t(&one, &ha))?;

    // q₁^{−H₁}q₂^{−H₂} = e^{ħ(−H₁+H₂)} and so on, with q₁ = q, q₂ = q⁻¹.
    let h12 = cartan_exp(alg, [qi(-1), qi(1), qi(0)])?;
    let h2 = cartan_exp(alg, [qi(0), qi(1), qi(0)])?;
    let h122 = cartan_exp(alg, [qi(-1), qi(2), qi(0)])?;
    let mut de_a = t(&ea, &one).add(&t(&qm, &ea))?;
    de_a = de_a.sub(&t(&m(&[&h_xi, &qm])?.shift_up(1), &ec))?;
    de_a = de_a.sub(&t(&m(&[&g("E32")?, &h12])?, &g("E12")?).scale(&qq))?;
    let inner = g("E132")?.add(&m(&[&g("E32")?, &g("E1")?])?.scale(&qq));
    de_a = de_a.add(&t(&m(&[&inner, &h2])?, &g("E2")?).scale(&qq.mul_ref(&q)))?;
    let c = qq.mul_ref(&qq).mul_ref(&qinv);
    de_a = de_a.sub(&t(&m(&[&g("E3")?, &h122])?, &m(&[&g("E2")?, &g("E12")?])?).scale(&c))?;

    let k12 = cartan_exp(alg, [qi(1), qi(-1), qi(0)])?;
    let k2 = cartan_exp(alg, [qi(0), qi(-1), qi(0)])?;
    let k122 = cartan_exp(alg, [qi(1), qi(-2), qi(0)])?;
    let mut df_a = t(&fa, &qp).add(&t(&one, &fa))?;
    df_a = df_a.add(&t(&fc, &m(&[&qp, &h_xi])?.shift_up(1)))?;
    df_a = df_a.sub(&t(&g("F21")?, &m(&[&k12, &g("F23")?])?).scale(&qq))?;
    let inner = g("F213")?.sub(&m(&[&g("F1")?, &g("F23")?])?.scale(&qq));
    df_a = df_a.add(&t(&g("F2")?, &m(&[&k2, &inner])?).scale(&qq.mul_ref(&qinv)))?;
    let c = qq.mul_ref(&qq).mul_ref(&q);
    df_a = df_a.add(&t(&m(&[&g("F21")?, &g("F2")?])?, &m(&[&k122, &g("F3")?])?).scale(&c))?;

    Ok(vec![("E_A", de_a), ("E_C", de_c), ("H_A", dh_a), ("F_A", df_a), ("F_C", df_c)])
}

/// Δ of the defining commutators of E_C and F_C, for comparison with the
/// stored coproducts.
pub fn central_coproduct_from_definition(h: &HopfAlgebraDef) -> Result<Vec<(String, TensorElement)>, HopfError> {
    let alg = h.algebra();
    let mut out = Vec::new();
    for d in central_definitionals(alg)? {
        let dx = h.coproduct_of(d.x);
        let dy = h.coproduct_of(d.y);
        let c = crate::d21e::defined_coproduct(alg, &d, dx, dy)?;
        out.push((alg.table().name(d.letter).to_string(), c.sub(h.coproduct_of(d.letter))?));
    }
    Ok(out)
}
