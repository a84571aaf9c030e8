//! K_ξ(iso(3)), the contraction limit of U_{εħ}(sl(2)) ⊗ U_{ε̃ħ}(sl(2)).

use algebra_core::{Algebra, Element, GeneratorTable, Parity, TensorElement};
use scalar_series::{qi, ExactScalar, Q};

use crate::expr::{cosh, qpow, sinh_over_2hbar};
use crate::hopf::HopfAlgebraDef;
use crate::HopfError;

pub(crate) const KXI_LETTERS: [&str; 6] = ["E_A", "E_C", "H_A", "H_C", "F_A", "F_C"];

/// Six letters in PBW order `E_A < E_C < H_A < H_C < F_A < F_C`. The
/// C-sector commutes with itself, H_A and H_C act with weights ±2, and
/// [E_A,F_A] = ½(q^{H_C}+q^{−H_C})(H_A+ξH_C) − (ξ/2ħ)(q^{H_C}−q^{−H_C}),
/// [E_A,F_C] = [E_C,F_A] = (q^{H_C}−q^{−H_C})/2ħ.
pub fn build_k_xi_iso3(xi: &Q, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    if order == 0 {
        return Err(HopfError::Invalid("order must be at least 1".into()));
    }
    let names: Vec<(&str, Parity)> = KXI_LETTERS.iter().map(|n| (*n, Parity::Even)).collect();
    let mut table = GeneratorTable::from_names(&names)?;
    table.set_param("xi", ExactScalar::real(xi.clone()));
    let mut alg = Algebra::new(table, order);
    let g = |alg: &Algebra, n: &str| alg.gen(n);
    let (ea, ec, ha, hc, fa, fc) =
        (g(&alg, "E_A")?, g(&alg, "E_C")?, g(&alg, "H_A")?, g(&alg, "H_C")?, g(&alg, "F_A")?, g(&alg, "F_C")?);
    let z = qi(0);
    let two = qi(2);
    let zero = alg.zero();
    let sinh = sinh_over_2hbar(&alg, &hc, &qi(1))?;
    let h_xi = ha.add(&hc.scale_q(xi));

    alg.add_rule("E_C", "E_A", z.clone(), zero.clone())?;
    alg.add_rule("H_A", "E_A", z.clone(), ea.scale_q(&two))?;
    alg.add_rule("H_A", "E_C", z.clone(), ec.scale_q(&two))?;
    alg.add_rule("H_C", "E_A", z.clone(), ec.scale_q(&two))?;
    alg.add_rule("H_C", "E_C", z.clone(), zero.clone())?;
    alg.add_rule("H_C", "H_A", z.clone(), zero.clone())?;
    alg.add_rule("F_A", "E_C", z.clone(), sinh.neg())?;
    alg.add_rule("F_A", "H_A", z.clone(), fa.scale_q(&two))?;
    alg.add_rule("F_A", "H_C", z.clone(), fc.scale_q(&two))?;
    alg.add_rule("F_C", "E_A", z.clone(), sinh.neg())?;
    alg.add_rule("F_C", "E_C", z.clone(), zero.clone())?;
    alg.add_rule("F_C", "H_A", z.clone(), fc.scale_q(&two))?;
    alg.add_rule("F_C", "H_C", z.clone(), zero.clone())?;
    alg.add_rule("F_C", "F_A", z.clone(), zero)?;
    let ef = alg.mul(&cosh(&alg, &hc, &qi(1))?, &h_xi)?.sub(&sinh.scale_q(xi));
    alg.add_rule("F_A", "E_A", z, ef.neg())?;

    let one = alg.one();
    let qm = qpow(&alg, &hc, &qi(-1))?;
    let qp = qpow(&alg, &hc, &qi(1))?;
    let t = |a: &Element, b: &Element| TensorElement::from_elements(&[a, b]);
    let prim = |x: &Element| t(x, &one).add(&t(&one, x));
    let de_c = t(&ec, &one).add(&t(&qm, &ec))?;
    let df_c = t(&fc, &qp).add(&t(&one, &fc))?;
    let tail_e = alg.mul(&h_xi, &qm)?.shift_up(1);
    let de_a = t(&ea, &one).add(&t(&qm, &ea))?.sub(&t(&tail_e, &ec))?;
    let tail_f = alg.mul(&qp, &h_xi)?.shift_up(1);
    let df_a = t(&fa, &qp).add(&t(&one, &fa))?.add(&t(&fc, &tail_f))?;
    let coproduct = vec![de_a, de_c, prim(&ha)?, prim(&hc)?, df_a, df_c];
    let mut hopf = HopfAlgebraDef::new("k_xi_iso3", alg, coproduct, vec![ExactScalar::zero(); 6])?;
    hopf.set_metadata("xi", &xi.to_string());
    Ok(hopf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar_series::q;

    fn k(xi: Q) -> HopfAlgebraDef {
        build_k_xi_iso3(&xi, 3).unwrap()
    }

    #[test]
    fn e_a_f_c_is_the_sinh() {
        let h = k(q(3, 5));
        let a = h.algebra();
        let c = a.commutator(&h.gen("E_A").unwrap(), &h.gen("F_C").unwrap()).unwrap();
        assert_eq!(c, sinh_over_2hbar(a, &h.gen("H_C").unwrap(), &qi(1)).unwrap());
    }

    #[test]
    fn c_sector_commutes() {
        let h = k(qi(1));
        let a = h.algebra();
        assert!(a.commutator(&h.gen("E_C").unwrap(), &h.gen("F_C").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn delta_e_c_has_no_xi() {
        let h = k(qi(-2));
        let a = h.algebra();
        let one = a.one();
        let ec = h.gen("E_C").unwrap();
        let qm = qpow(a, &h.gen("H_C").unwrap(), &qi(-1)).unwrap();
        let want = TensorElement::from_elements(&[&ec, &one]).add(&TensorElement::from_elements(&[&qm, &ec])).unwrap();
        assert_eq!(h.coproduct_of(h.index("E_C").unwrap()), &want);
    }

    #[test]
    fn xi_enters_linearly_and_vanishes_at_zero() {
        let hs: Vec<_> = [0, 1, 2].iter().map(|&x| k(qi(x))).collect();
        for (r0, (r1, r2)) in
            hs[0].algebra().rules().iter().zip(hs[1].algebra().rules().iter().zip(hs[2].algebra().rules()))
        {
            let d1 = r1.tail.sub(&r0.tail);
            let d2 = r2.tail.sub(&r0.tail);
            assert_eq!(d2, d1.scale_q(&qi(2)));
        }
        let h0 = &hs[0];
        let a = h0.algebra();
        let ef = a.commutator(&h0.gen("E_A").unwrap(), &h0.gen("F_A").unwrap()).unwrap();
        let want = a.mul(&cosh(a, &h0.gen("H_C").unwrap(), &qi(1)).unwrap(), &h0.gen("H_A").unwrap()).unwrap();
        assert_eq!(ef, want);
        for g in 0..6u8 {
            let d1 = hs[1].coproduct_of(g).sub(h0.coproduct_of(g)).unwrap();
            let d2 = hs[2].coproduct_of(g).sub(h0.coproduct_of(g)).unwrap();
            assert_eq!(d2, d1.scale_q(&qi(2)));
        }
    }
}
