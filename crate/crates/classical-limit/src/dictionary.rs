//! Classical images of the K_ξ(iso(3)) letters: E_C = 2P₊, E_A = 2L₊,
//! F_C = 2P₋, F_A = 2L₋, H_C = 2iP₀, H_A = 2iL₀. The light-cone letters
//! P_0, P_plus, … map to themselves.

use scalar_series::ExactScalar;

use crate::iso3::Iso3Gen;
use crate::lie::{scaled, Vector};
use crate::tensor::WedgeTensor;
use crate::ClassicalError;

/// The ħ → 0 image of a letter as an iso(3) vector.
pub fn k_xi_letter(name: &str) -> Result<Vector, ClassicalError> {
    if let Some(g) = Iso3Gen::from_label(name) {
        return Ok(g.vector());
    }
    let two = ExactScalar::int(2);
    let two_i = ExactScalar::new(scalar_series::qi(0), scalar_series::qi(2));
    let (k, g) = match name {
        "E_C" => (two, Iso3Gen::PPlus),
        "E_A" => (two, Iso3Gen::LPlus),
        "F_C" => (two, Iso3Gen::PMinus),
        "F_A" => (two, Iso3Gen::LMinus),
        "H_C" => (two_i, Iso3Gen::P0),
        "H_A" => (two_i, Iso3Gen::L0),
        _ => return Err(ClassicalError::UnknownLabel(name.into())),
    };
    Ok(scaled(&k, &g.vector()))
}

/// Σ c · image(a) ⊗ image(b) over `(a, b, c)` triples.
pub fn tensor_from_letter_pairs(entries: &[(String, String, ExactScalar)]) -> Result<WedgeTensor, ClassicalError> {
    let mut out = WedgeTensor::zero(2, 6);
    for (a, b, c) in entries {
        out = out + WedgeTensor::outer(&[&k_xi_letter(a)?, &k_xi_letter(b)?]).scale(c);
    }
    Ok(out)
}
