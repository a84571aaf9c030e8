//! U_ħ(d(2,1;ε)) in the basis of simple letters, the six odd composite
//! letters and the even pair E_B, F_B; H_B = (s₁H₁ − 2H₂ + s₃H₃)/s₂ is a
//! combination of Cartan letters, not a letter.

use std::collections::HashMap;

use algebra_core::{Algebra, Element, Generator, GeneratorTable, Parity, TensorElement};
use scalar_series::{qi, ExactScalar, HbarSeries, Q};

use crate::checks::{CheckReport, Residuals};
use crate::derive::{derive_rules, Definitional, DeriveLog};
use crate::expr::{q_bracket, q_minus_qinv, qpow, qs, sinh_ratio_series};
use crate::hopf::HopfAlgebraDef;
use crate::HopfError;

const E_SIDE: [(&str, Parity); 7] = [
    ("E2", Parity::Odd),
    ("E12", Parity::Odd),
    ("E_B", Parity::Even),
    ("E32", Parity::Odd),
    ("E132", Parity::Odd),
    ("E1", Parity::Even),
    ("E3", Parity::Even),
];
const CARTAN: [&str; 3] = ["H1", "H2", "H3"];
const F_SIDE: [(&str, Parity); 7] = [
    ("F2", Parity::Odd),
    ("F21", Parity::Odd),
    ("F_B", Parity::Even),
    ("F23", Parity::Odd),
    ("F213", Parity::Odd),
    ("F1", Parity::Even),
    ("F3", Parity::Even),
];

/// Parameters `s = (s₁, s₂, s₃)` with `s₁ + s₂ + s₃ = 0`.
#[derive(Clone, Debug)]
pub(crate) struct Sparams {
    pub s: [Q; 3],
}

impl Sparams {
    pub fn new(epsilon: &Q) -> Self {
        Self { s: [qi(1), epsilon.clone(), -(qi(1) + epsilon)] }
    }

    /// Rows `a_{ij}` with `[H_i, E_j] = a_{ij} E_j`.
    pub fn cartan(&self) -> [[Q; 3]; 3] {
        let [s1, _, s3] = self.s.clone();
        [[qi(2), qi(-1), qi(0)], [s1, qi(0), s3], [qi(0), qi(-1), qi(2)]]
    }

    /// Exponents `d_i` with `q_i = e^{d_i ħ}`.
    pub fn d(&self) -> [Q; 3] {
        [self.s[0].clone(), qi(-1), self.s[2].clone()]
    }
}

pub(crate) fn table_from(letters: &[(&str, Parity)]) -> Result<GeneratorTable, HopfError> {
    let gens = letters
        .iter()
        .enumerate()
        .map(|(k, (n, p))| Generator { name: n.to_string(), parity: *p, sort_key: k as i64 })
        .collect();
    Ok(GeneratorTable::new(gens)?)
}

fn idx(alg: &Algebra, name: &str) -> Result<u8, HopfError> {
    Ok(alg.table().index(name)?)
}

/// `e^{ħ Σ c_i H_i}` for the Cartan letters.
pub(crate) fn cartan_exp(alg: &Algebra, c: [Q; 3]) -> Result<Element, HopfError> {
    let mut h = alg.zero();
    for (k, n) in CARTAN.iter().enumerate() {
        h = h.add(&alg.gen(n)?.scale_q(&c[k]));
    }
    qpow(alg, &h, &qi(1))
}

/// Rules among the simple letters: Cartan action, [E_i,F_j], the Serre
/// relations in q-commutation form, and the Cartan action on F.
pub(crate) fn install_simple_rules(alg: &mut Algebra, sp: &Sparams) -> Result<(), HopfError> {
    let a = sp.cartan();
    let d = sp.d();
    let zero = qi(0);
    for i in 0..3 {
        let h = CARTAN[i];
        for j in 0..3 {
            let e = format!("E{}", j + 1);
            let f = format!("F{}", j + 1);
            alg.add_rule(h, &e, zero.clone(), alg.gen(&e)?.scale_q(&a[i][j]))?;
            alg.add_rule(&f, h, zero.clone(), alg.gen(&f)?.scale_q(&a[i][j]))?;
        }
        for j in 0..i {
            alg.add_rule(h, CARTAN[j], zero.clone(), alg.zero())?;
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let (f, e) = (format!("F{}", i + 1), format!("E{}", j + 1));
            let tail = if i == j {
                // [E_i, F_i] = [H_i]_{q_i}; for odd E₂ this is the anticommutator.
                let sigma = if i == 1 { qi(-1) } else { qi(1) };
                q_bracket(alg, &alg.gen(CARTAN[i])?, &d[i])?.scale_q(&-sigma)
            } else {
                alg.zero()
            };
            alg.add_rule(&f, &e, zero.clone(), tail)?;
        }
    }
    alg.add_rule("E3", "E1", zero.clone(), alg.zero())?;
    alg.add_rule("F3", "F1", zero, alg.zero())?;
    let [s1, _, s3] = sp.s.clone();
    alg.add_rule("E1", "E12", -s1.clone(), alg.zero())?;
    alg.add_rule("E3", "E32", -s3.clone(), alg.zero())?;
    alg.add_rule("F1", "F21", -s1, alg.zero())?;
    alg.add_rule("F3", "F23", -s3, alg.zero())?;
    Ok(())
}

fn def(
    alg: &Algebra,
    l: &str,
    x: &str,
    y: &str,
    gamma: Q,
    scale: HbarSeries,
    seed: bool,
) -> Result<Definitional, HopfError> {
    Ok(Definitional { letter: idx(alg, l)?, x: idx(alg, x)?, y: idx(alg, y)?, gamma, scale, seed })
}

/// The six odd composites and their alternative q-Jacobi forms.
pub(crate) fn odd_definitionals(alg: &Algebra, sp: &Sparams) -> Result<Vec<Definitional>, HopfError> {
    let one = HbarSeries::one(alg.order());
    let [s1, _, s3] = sp.s.clone();
    Ok(vec![
        def(alg, "E12", "E1", "E2", s1.clone(), one.clone(), true)?,
        def(alg, "E32", "E3", "E2", s3.clone(), one.clone(), true)?,
        def(alg, "E132", "E1", "E32", s1.clone(), one.clone(), true)?,
        def(alg, "E132", "E3", "E12", s3.clone(), one.clone(), false)?,
        def(alg, "F21", "F2", "F1", -s1.clone(), one.clone(), true)?,
        def(alg, "F23", "F2", "F3", -s3.clone(), one.clone(), true)?,
        def(alg, "F213", "F23", "F1", -s1, one.clone(), true)?,
        def(alg, "F213", "F21", "F3", -s3, one, false)?,
    ])
}

/// Coproducts of the simple letters.
pub(crate) fn simple_coproducts(alg: &Algebra, sp: &Sparams) -> Result<HashMap<String, TensorElement>, HopfError> {
    let one = alg.one();
    let d = sp.d();
    let t = |a: &Element, b: &Element| TensorElement::from_elements(&[a, b]);
    let mut out = HashMap::new();
    for i in 0..3 {
        let h = alg.gen(CARTAN[i])?;
        let e = alg.gen(&format!("E{}", i + 1))?;
        let f = alg.gen(&format!("F{}", i + 1))?;
        let qm = qpow(alg, &h, &-d[i].clone())?;
        let qp = qpow(alg, &h, &d[i])?;
        out.insert(format!("E{}", i + 1), t(&e, &one).add(&t(&qm, &e))?);
        out.insert(format!("F{}", i + 1), t(&f, &qp).add(&t(&one, &f))?);
        out.insert(CARTAN[i].to_string(), t(&h, &one).add(&t(&one, &h))?);
    }
    Ok(out)
}

/// Δ of `scale·[x, y]_γ` from the coproducts of `x` and `y`.
pub(crate) fn defined_coproduct(
    alg: &Algebra,
    d: &Definitional,
    dx: &TensorElement,
    dy: &TensorElement,
) -> Result<TensorElement, HopfError> {
    let odd = alg.table().is_odd(d.x) && alg.table().is_odd(d.y);
    let q = qs(&d.gamma, alg.order()).scale(&ExactScalar::int(if odd { -1 } else { 1 }));
    let xy = alg.tensor_mul(dx, dy)?;
    let yx = alg.tensor_mul(dy, dx)?;
    Ok(xy.sub(&yx.scale(&q))?.scale(&d.scale))
}

/// Fill `known` with the coproducts of the seeded composites, in order.
pub(crate) fn composite_coproducts(
    alg: &Algebra,
    defs: &[Definitional],
    known: &mut HashMap<String, TensorElement>,
) -> Result<(), HopfError> {
    for d in defs.iter().filter(|d| d.seed) {
        let name = |g: u8| alg.table().name(g).to_string();
        let dx = known.get(&name(d.x)).ok_or_else(|| HopfError::Invalid(format!("Δ{} not known", name(d.x))))?;
        let dy = known.get(&name(d.y)).ok_or_else(|| HopfError::Invalid(format!("Δ{} not known", name(d.y))))?;
        let c = defined_coproduct(alg, d, dx, dy)?;
        known.insert(name(d.letter), c);
    }
    Ok(())
}

/// `(q − q⁻¹)/(q^a − q^{−a})` as a scalar series; needs `a ≠ 0`.
pub(crate) fn q_ratio(a: &Q, order: usize) -> Result<HbarSeries, HopfError> {
    let num = sinh_ratio_series(&qi(1), order);
    let den = sinh_ratio_series(a, order).scale_q(a);
    Ok(num.checked_div(&den)?)
}

/// E_B and F_B in terms of the odd composites.
fn even_definitionals(alg: &Algebra, sp: &Sparams) -> Result<Vec<Definitional>, HopfError> {
    let s2 = sp.s[1].clone();
    let c = q_ratio(&s2, alg.order())?;
    Ok(vec![
        def(alg, "E_B", "E32", "E12", -s2.clone(), c.scale_q(&qi(-1)), true)?,
        def(alg, "F_B", "F21", "F23", s2, c, true)?,
    ])
}

/// U_ħ(d(2,1;ε)) at truncation order `order`, with s = (1, ε, −1−ε).
/// Rules not among the seeds are derived from the composite definitions.
pub fn build_uq_d21e(epsilon: &Q, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    Ok(build_uq_d21e_logged(epsilon, order)?.0)
}

/// As [`build_uq_d21e`], also returning the derivation log.
pub fn build_uq_d21e_logged(epsilon: &Q, order: usize) -> Result<(HopfAlgebraDef, DeriveLog), HopfError> {
    if order == 0 {
        return Err(HopfError::Invalid("order must be at least 1".into()));
    }
    if *epsilon == qi(0) || *epsilon == qi(-1) {
        return Err(HopfError::DegenerateParameter(format!("epsilon = {epsilon}")));
    }
    let sp = Sparams::new(epsilon);
    let letters: Vec<(&str, Parity)> =
        E_SIDE.iter().copied().chain(CARTAN.iter().map(|h| (*h, Parity::Even))).chain(F_SIDE.iter().copied()).collect();
    let mut table = table_from(&letters)?;
    table.set_param("epsilon", ExactScalar::real(epsilon.clone()));
    let mut alg = Algebra::new(table, order);
    install_simple_rules(&mut alg, &sp)?;
    let mut defs = odd_definitionals(&alg, &sp)?;
    defs.extend(even_definitionals(&alg, &sp)?);
    let log = derive_rules(&mut alg, &defs)?;
    if !log.unresolved.is_empty() {
        return Err(HopfError::Invalid(format!("underivable products: {:?}", log.unresolved)));
    }

    let mut known = simple_coproducts(&alg, &sp)?;
    composite_coproducts(&alg, &defs, &mut known)?;
    let n = alg.table().len() as u8;
    let coproduct = (0..n).map(|g| known[alg.table().name(g)].clone()).collect();
    let mut hopf = HopfAlgebraDef::new("d21e", alg, coproduct, vec![ExactScalar::zero(); n as usize])?;
    hopf.set_metadata("epsilon", &epsilon.to_string());
    Ok((hopf, log))
}

pub(crate) fn epsilon_of(h: &HopfAlgebraDef) -> Result<Q, HopfError> {
    h.table()
        .param("epsilon")
        .map(|e| e.re().clone())
        .ok_or_else(|| HopfError::Invalid(format!("{} has no epsilon parameter", h.name())))
}

/// `s₂H_B = s₁H₁ − 2H₂ + s₃H₃`, so `q_B^{aH_B} = e^{aħ(s₁H₁ − 2H₂ + s₃H₃)}`.
fn q_b_pow(alg: &Algebra, sp: &Sparams, a: i64) -> Result<Element, HopfError> {
    let a = qi(a);
    cartan_exp(alg, [&sp.s[0] * &a, qi(-2) * &a, &sp.s[2] * &a])
}

/// Explicit four-term ΔE_B and ΔF_B against Δ of their defining
/// q-commutators.
pub fn verify_nonsimple_coproduct_tail(h: &HopfAlgebraDef) -> Result<CheckReport, HopfError> {
    let eps = epsilon_of(h)?;
    let sp = Sparams::new(&eps);
    let alg = h.algebra();
    let order = alg.order();
    let [s1, s2, s3] = sp.s.clone();
    let g = |n: &str| alg.gen(n);
    let one = alg.one();
    let t = |a: &Element, b: &Element| TensorElement::from_elements(&[a, b]);
    let qq = q_minus_qinv(&qi(1), order);
    let m = |xs: &[&Element]| alg.mul_all(xs);

    // q₁ = e^{s₁ħ}, q₂ = e^{−ħ}, q₃ = e^{s₃ħ}.
    let qb_inv = qs(&-s2.clone(), order);
    let pre_e = qq.mul_ref(&qb_inv);
    let q1 = qs(&s1, order);
    let q1sq_m1 = &qs(&(qi(2) * &s1), order) - &HbarSeries::one(order);
    let q3sq_m1 = &qs(&(qi(2) * &s3), order) - &HbarSeries::one(order);
    let h12 = cartan_exp(alg, [-s1.clone(), qi(1), qi(0)])?;
    let h2 = cartan_exp(alg, [qi(0), qi(1), qi(0)])?;
    let h122 = cartan_exp(alg, [-s1.clone(), qi(2), qi(0)])?;
    let eb = g("E_B")?;
    let mut de = t(&eb, &one).add(&t(&q_b_pow(alg, &sp, -1)?, &eb))?;
    de = de.sub(&t(&m(&[&g("E32")?, &h12])?, &g("E12")?).scale(&pre_e))?;
    let inner = g("E132")?.scale(&q1).add(&m(&[&g("E32")?, &g("E1")?])?.scale(&q1sq_m1));
    de = de.add(&t(&m(&[&inner, &h2])?, &g("E2")?).scale(&pre_e))?;
    de = de.add(&t(&m(&[&g("E3")?, &h122])?, &m(&[&g("E2")?, &g("E12")?])?).scale(&pre_e.mul_ref(&q3sq_m1)))?;

    let pre_f = qq.mul_ref(&qs(&s2, order));
    let q1inv = qs(&-s1.clone(), order);
    let q1msq_m1 = &qs(&(qi(-2) * &s1), order) - &HbarSeries::one(order);
    let q3msq_m1 = &qs(&(qi(-2) * &s3), order) - &HbarSeries::one(order);
    let k12 = cartan_exp(alg, [s1.clone(), qi(-1), qi(0)])?;
    let k2 = cartan_exp(alg, [qi(0), qi(-1), qi(0)])?;
    let k122 = cartan_exp(alg, [s1.clone(), qi(-2), qi(0)])?;
    let fb = g("F_B")?;
    let mut df = t(&fb, &q_b_pow(alg, &sp, 1)?).add(&t(&one, &fb))?;
    df = df.sub(&t(&g("F21")?, &m(&[&k12, &g("F23")?])?).scale(&pre_f))?;
    let inner = g("F213")?.scale(&q1inv).add(&m(&[&g("F1")?, &g("F23")?])?.scale(&q1msq_m1));
    df = df.add(&t(&g("F2")?, &m(&[&k2, &inner])?).scale(&pre_f))?;
    df = df.add(&t(&m(&[&g("F21")?, &g("F2")?])?, &m(&[&k122, &g("F3")?])?).scale(&pre_f.mul_ref(&q3msq_m1)))?;

    let mut res = Residuals::new();
    res.add("ΔE_B", &h.coproduct_of(h.index("E_B")?).sub(&de)?);
    res.add("ΔF_B", &h.coproduct_of(h.index("F_B")?).sub(&df)?);
    Ok(res.report("nonsimple_coproduct_tail"))
}

/// Serre elements of the simple letters, each expected to vanish.
pub fn serre_elements(h: &HopfAlgebraDef) -> Result<Vec<(String, Element)>, HopfError> {
    let alg = h.algebra();
    let g = |n: &str| alg.gen(n);
    let mut out = Vec::new();
    let [s1, _, s3] =
        if let Some(e) = h.table().param("epsilon") { Sparams::new(e.re()).s } else { Sparams::new(&qi(0)).s };
    out.push(("E2·E2".to_string(), alg.mul(&g("E2")?, &g("E2")?)?));
    out.push(("F2·F2".to_string(), alg.mul(&g("F2")?, &g("F2")?)?));
    out.push(("[E1,E3]".to_string(), alg.commutator(&g("E1")?, &g("E3")?)?));
    out.push(("[F1,F3]".to_string(), alg.commutator(&g("F1")?, &g("F3")?)?));
    let e12 = alg.q_commutator(&g("E1")?, &g("E2")?, &s1)?;
    let e32 = alg.q_commutator(&g("E3")?, &g("E2")?, &s3)?;
    let f21 = alg.q_commutator(&g("F2")?, &g("F1")?, &-s1.clone())?;
    let f23 = alg.q_commutator(&g("F2")?, &g("F3")?, &-s3.clone())?;
    out.push(("[E1,[E1,E2]]".to_string(), alg.q_commutator(&g("E1")?, &e12, &-s1.clone())?));
    out.push(("[E3,[E3,E2]]".to_string(), alg.q_commutator(&g("E3")?, &e32, &-s3.clone())?));
    out.push(("[[F2,F1],F1]".to_string(), alg.q_commutator(&f21, &g("F1")?, &s1)?));
    out.push(("[[F2,F3],F3]".to_string(), alg.q_commutator(&f23, &g("F3")?, &s3)?));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar_series::q;

    #[test]
    fn degenerate_epsilons_are_rejected() {
        for e in [qi(0), qi(-1)] {
            assert!(matches!(build_uq_d21e(&e, 1), Err(HopfError::DegenerateParameter(_))));
        }
    }

    #[test]
    fn seventeen_letters_in_pbw_order() {
        let h = build_uq_d21e(&q(1, 3), 1).unwrap();
        let names: Vec<_> = h.table().generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names.len(), 17);
        assert_eq!(&names[..7], ["E2", "E12", "E_B", "E32", "E132", "E1", "E3"]);
        assert!(h.table().is_odd(h.index("E132").unwrap()));
        assert!(!h.table().is_odd(h.index("F_B").unwrap()));
    }

    #[test]
    fn cartan_action_on_simple_letters() {
        let eps = q(2, 7);
        let h = build_uq_d21e(&eps, 1).unwrap();
        let a = h.algebra();
        let cm = Sparams::new(&eps).cartan();
        for i in 0..3 {
            for j in 0..3 {
                let e = h.gen(&format!("E{}", j + 1)).unwrap();
                let c = a.commutator(&h.gen(CARTAN[i]).unwrap(), &e).unwrap();
                assert_eq!(c, e.scale_q(&cm[i][j]));
            }
        }
    }

    #[test]
    fn cartan_matrix_is_symmetrised_by_d() {
        let sp = Sparams::new(&q(5, 3));
        let (a, d) = (sp.cartan(), sp.d());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(&d[i] * &a[i][j], &d[j] * &a[j][i]);
            }
        }
    }

    #[test]
    fn e12_is_the_q_commutator() {
        let h = build_uq_d21e(&q(1, 3), 2).unwrap();
        let a = h.algebra();
        let c = a.q_commutator(&h.gen("E1").unwrap(), &h.gen("E2").unwrap(), &qi(1)).unwrap();
        assert_eq!(c, h.gen("E12").unwrap());
    }

    #[test]
    fn alternative_e132_agrees() {
        let eps = q(1, 3);
        let h = build_uq_d21e(&eps, 2).unwrap();
        let a = h.algebra();
        let s3 = -(qi(1) + &eps);
        let c = a.q_commutator(&h.gen("E3").unwrap(), &h.gen("E12").unwrap(), &s3).unwrap();
        assert_eq!(c, h.gen("E132").unwrap());
    }

    #[test]
    fn serre_elements_vanish() {
        let h = build_uq_d21e(&q(1, 3), 2).unwrap();
        for (name, e) in serre_elements(&h).unwrap() {
            assert!(e.is_zero(), "{name}");
        }
    }

    #[test]
    fn e_b_f_b_close_on_q_bracket() {
        let eps = q(1, 3);
        let h = build_uq_d21e(&eps, 2).unwrap();
        let a = h.algebra();
        let sp = Sparams::new(&eps);
        let [s1, s2, s3] = sp.s.clone();
        let hb = h
            .gen("H1")
            .unwrap()
            .scale_q(&(&s1 / &s2))
            .sub(&h.gen("H2").unwrap().scale_q(&(qi(2) / &s2)))
            .add(&h.gen("H3").unwrap().scale_q(&(&s3 / &s2)));
        let c = a.commutator(&h.gen("E_B").unwrap(), &h.gen("F_B").unwrap()).unwrap();
        assert_eq!(c, q_bracket(a, &hb, &s2).unwrap());
    }

    #[test]
    fn nonsimple_tails_match() {
        let h = build_uq_d21e(&q(1, 3), 2).unwrap();
        assert!(verify_nonsimple_coproduct_tail(&h).unwrap().passed);
    }
}
