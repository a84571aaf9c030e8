//! Frozen text exports. Run with `HOPF_BLESS=1` to rewrite them.

use std::path::PathBuf;

use classical_limit::{
    build_classical_r, build_iso3, build_isod, build_omega, build_rhat_d, default_n, LieAlgebraSC, WedgeTensor,
};
use scalar_series::q;

fn golden(name: &str, t: &WedgeTensor, g: &LieAlgebraSC) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let text = t.to_text(g);
    if std::env::var_os("HOPF_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let frozen = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, frozen, "{name} changed");
    assert_eq!(&WedgeTensor::from_text(&frozen, g).unwrap(), t);
}

#[test]
fn three_dimensional_tensors() {
    let g = build_iso3();
    golden("r_xi3o5.txt", &build_classical_r(&q(3, 5)), &g);
    golden("omega_xi3o5.txt", &build_omega(&q(3, 5)), &g);
}

#[test]
fn four_dimensional_rhat() {
    let g = build_isod(4).unwrap();
    golden("rhat_d4.txt", &build_rhat_d(4, &default_n(4)).unwrap(), &g.alg);
}
