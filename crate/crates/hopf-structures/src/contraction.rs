//! The contraction U_{εħ}(sl(2)) ⊗ U_{ε̃ħ}(sl(2)) → K_ξ(iso(3)) checked by
//! residuals at rational ε, with ε̃ = βε + ξε² (β = −1 gives a finite limit).

use algebra_core::{Element, TensorElement};
use scalar_series::{qi, Q};

use crate::hopf::HopfAlgebraDef;
use crate::kxi::{build_k_xi_iso3, KXI_LETTERS};
use crate::sl2::{build_tensor_hopf, build_uq_sl2_named};
use crate::HopfError;

/// U_{εħ}(sl(2)) on `E,H,F` times U_{ε̃ħ}(sl(2)) on `Et,Ht,Ft`, PBW order
/// `E < Et < H < Ht < F < Ft`.
pub fn build_sl2_pair(epsilon: &Q, xi: &Q, beta: i64, order: usize) -> Result<HopfAlgebraDef, HopfError> {
    let tilde = tilde_epsilon(epsilon, xi, beta);
    let a = build_uq_sl2_named(epsilon, order, ["E", "H", "F"])?;
    let b = build_uq_sl2_named(&tilde, order, ["Et", "Ht", "Ft"])?;
    let mut h = build_tensor_hopf(&a, &b)?;
    h.set_metadata("epsilon", &epsilon.to_string());
    h.set_metadata("tilde_epsilon", &tilde.to_string());
    Ok(h)
}

fn tilde_epsilon(epsilon: &Q, xi: &Q, beta: i64) -> Q {
    qi(beta) * epsilon + xi * epsilon * epsilon
}

/// Which identity of the target to compare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationId {
    /// The product `b·a` of two target letters.
    Rule(String, String),
    /// The coproduct of a target letter.
    Coproduct(String),
}

impl RelationId {
    pub fn label(&self) -> String {
        match self {
            RelationId::Rule(b, a) => format!("{b}*{a}"),
            RelationId::Coproduct(g) => format!("Delta {g}"),
        }
    }
}

/// Pre-limit algebra, limit algebra and the generator map
/// E_A = E + Ẽ, E_C = εE (likewise for F and H).
pub struct ContractionMap {
    pub source: HopfAlgebraDef,
    pub target: HopfAlgebraDef,
    pub epsilon: Q,
    pub xi: Q,
    pub beta: i64,
    pub tilde_epsilon: Q,
}

impl ContractionMap {
    /// The map with β = −1.
    pub fn new(epsilon: &Q, xi: &Q, order: usize) -> Result<Self, HopfError> {
        Self::with_beta(epsilon, xi, -1, order)
    }

    pub fn with_beta(epsilon: &Q, xi: &Q, beta: i64, order: usize) -> Result<Self, HopfError> {
        if *epsilon == qi(0) {
            return Err(HopfError::DegenerateEpsilon);
        }
        let tilde = tilde_epsilon(epsilon, xi, beta);
        if tilde == qi(0) {
            return Err(HopfError::DegenerateParameter("tilde epsilon vanishes".into()));
        }
        Ok(Self {
            source: build_sl2_pair(epsilon, xi, beta, order)?,
            target: build_k_xi_iso3(xi, order)?,
            epsilon: epsilon.clone(),
            xi: xi.clone(),
            beta,
            tilde_epsilon: tilde,
        })
    }

    /// Image of a target letter in the source algebra.
    pub fn image(&self, letter: &str) -> Result<Element, HopfError> {
        let s = &self.source;
        let (plain, tilde) = match &letter[..1] {
            "E" => ("E", "Et"),
            "H" => ("H", "Ht"),
            "F" => ("F", "Ft"),
            _ => return Err(HopfError::Invalid(format!("not a target letter: {letter}"))),
        };
        match &letter[1..] {
            "_A" => Ok(s.gen(plain)?.add(&s.gen(tilde)?)),
            "_C" => Ok(s.gen(plain)?.scale_q(&self.epsilon)),
            _ => Err(HopfError::Invalid(format!("not a target letter: {letter}"))),
        }
    }

    /// Inverse map on a source letter: E = E_C/ε, Ẽ = E_A − E_C/ε.
    fn preimage(&self, g: u8) -> Result<Element, HopfError> {
        let name = self.source.table().name(g).to_string();
        let t = &self.target;
        let inv = self.epsilon.recip();
        let (sector, tilde) = (&name[..1], name.len() > 1);
        let c = t.gen(&format!("{sector}_C"))?.scale_q(&inv);
        Ok(if tilde { t.gen(&format!("{sector}_A"))?.sub(&c) } else { c })
    }

    /// Rewrite a source element in target letters. Within each sector the
    /// letters commute on both sides, so a normal source monomial maps to
    /// the product of letter images taken in order.
    pub fn substitute(&self, x: &Element) -> Result<Element, HopfError> {
        let t = self.target.algebra();
        let images: Vec<Element> =
            (0..self.source.table().len() as u8).map(|g| self.preimage(g)).collect::<Result<_, _>>()?;
        let mut out = Element::zero(x.order());
        for (m, c) in x.terms() {
            let mut acc = t.one();
            for g in m.letters() {
                acc = t.mul(&acc, &images[g as usize])?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    pub fn substitute_tensor(&self, x: &TensorElement) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(x.rank(), x.order());
        for (slots, c) in x.terms() {
            let parts: Vec<Element> = slots
                .iter()
                .map(|m| self.substitute(&Element::term(m.clone(), scalar_series::HbarSeries::one(x.order()))))
                .collect::<Result<_, _>>()?;
            let refs: Vec<&Element> = parts.iter().collect();
            out.add_scaled(&TensorElement::from_elements(&refs), c);
        }
        Ok(out)
    }

    /// Mapped pre-limit value minus the limit value.
    pub fn residual(&self, id: &RelationId) -> Result<TensorElement, HopfError> {
        match id {
            RelationId::Rule(b, a) => {
                let s = self.source.algebra();
                let pre = s.mul(&self.image(b)?, &self.image(a)?)?;
                let lim = self.target.algebra().mul(&self.target.gen(b)?, &self.target.gen(a)?)?;
                Ok(TensorElement::from_element(&self.substitute(&pre)?.sub(&lim)))
            }
            RelationId::Coproduct(g) => {
                let pre = self.source.delta(&self.image(g)?)?;
                let lim = self.target.coproduct_of(self.target.index(g)?);
                Ok(self.substitute_tensor(&pre)?.sub(lim)?)
            }
        }
    }

    /// All fifteen out-of-order products and six coproducts of the target.
    pub fn all_relations(&self) -> Vec<RelationId> {
        let mut out = Vec::new();
        for (i, b) in KXI_LETTERS.iter().enumerate() {
            for a in &KXI_LETTERS[..i] {
                out.push(RelationId::Rule(b.to_string(), a.to_string()));
            }
        }
        out.extend(KXI_LETTERS.iter().map(|g| RelationId::Coproduct(g.to_string())));
        out
    }
}

/// Largest coefficient magnitude of the residual of `id`.
pub fn contraction_residual(map: &ContractionMap, id: &RelationId) -> Result<Q, HopfError> {
    Ok(map.residual(id)?.max_abs())
}

/// Residual norms of one relation at ε, ε/2, ε/4 and their successive ratios.
#[derive(Clone, Debug)]
pub struct ContractionResidual {
    pub relation: String,
    pub epsilons: Vec<Q>,
    pub norms: Vec<Q>,
    /// `norm(εₖ)/norm(εₖ₊₁)`, absent when the denominator vanishes.
    pub ratios: Vec<Option<Q>>,
}

impl ContractionResidual {
    pub fn is_exact(&self) -> bool {
        self.norms.iter().all(|n| *n == qi(0))
    }

    /// Vanishes identically, or decreases at least linearly: every ratio ≥ lo.
    pub fn converges(&self, lo: &Q) -> bool {
        self.is_exact() || self.ratios.iter().all(|r| r.as_ref().is_some_and(|r| r >= lo))
    }
}

/// Evaluate every relation at ε, ε/2, ε/4.
pub fn ratio_test(epsilon: &Q, xi: &Q, beta: i64, order: usize) -> Result<Vec<ContractionResidual>, HopfError> {
    let eps: Vec<Q> = (0..3).map(|k| epsilon / qi(1 << k)).collect();
    let maps: Vec<ContractionMap> =
        eps.iter().map(|e| ContractionMap::with_beta(e, xi, beta, order)).collect::<Result<_, _>>()?;
    maps[0]
        .all_relations()
        .into_iter()
        .map(|id| {
            let norms: Vec<Q> = maps.iter().map(|m| contraction_residual(m, &id)).collect::<Result<_, _>>()?;
            let ratios = norms.windows(2).map(|w| (w[1] != qi(0)).then(|| &w[0] / &w[1])).collect();
            Ok(ContractionResidual { relation: id.label(), epsilons: eps.clone(), norms, ratios })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar_series::q;

    #[test]
    fn cartan_pair_residual_vanishes() {
        for e in [q(1, 10), q(1, 3)] {
            let m = ContractionMap::new(&e, &q(3, 5), 2).unwrap();
            let r = contraction_residual(&m, &RelationId::Rule("H_C".into(), "H_A".into())).unwrap();
            assert_eq!(r, qi(0));
        }
    }

    #[test]
    fn zero_epsilon_is_degenerate() {
        assert!(matches!(ContractionMap::new(&qi(0), &qi(1), 2), Err(HopfError::DegenerateEpsilon)));
    }

    #[test]
    fn e_a_f_a_residual_halves() {
        let r: Vec<Q> = [q(1, 10), q(1, 20)]
            .iter()
            .map(|e| {
                let m = ContractionMap::new(e, &q(3, 5), 3).unwrap();
                contraction_residual(&m, &RelationId::Rule("F_A".into(), "E_A".into())).unwrap()
            })
            .collect();
        let ratio = &r[0] / &r[1];
        assert!(ratio >= q(3, 2) && ratio <= q(5, 2), "ratio {ratio}");
    }

    #[test]
    fn wrong_sign_diverges_in_the_coproduct() {
        let r: Vec<Q> = [q(1, 10), q(1, 20)]
            .iter()
            .map(|e| {
                let m = ContractionMap::with_beta(e, &qi(0), 1, 2).unwrap();
                contraction_residual(&m, &RelationId::Coproduct("E_A".into())).unwrap()
            })
            .collect();
        assert!(r[1] > r[0]);
    }

    #[test]
    fn images_of_the_c_sector() {
        let m = ContractionMap::new(&q(1, 4), &qi(1), 1).unwrap();
        let e = m.source.gen("E").unwrap();
        assert_eq!(m.image("E_C").unwrap(), e.scale_q(&q(1, 4)));
    }
}
