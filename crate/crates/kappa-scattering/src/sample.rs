use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::map::scatter;
use crate::momentum::{Momentum3, ScatterConfig, ScatterError};

/// Components with real and imaginary parts uniform in [−1, 1].
pub fn random_momentum(rng: &mut impl Rng) -> Momentum3 {
    let mut z = || Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
    Momentum3 { p0: z(), p_plus: z(), p_minus: z() }
}

/// `n` seeded pairs `(p, q)`.
pub fn sample_pairs(seed: u64, n: usize) -> Vec<(Momentum3, Momentum3)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| (random_momentum(&mut rng), random_momentum(&mut rng))).collect()
}

/// max(|p′ − p|, |q′ − q|) over components.
pub fn classical_deviation(p: &Momentum3, q: &Momentum3, cfg: &ScatterConfig) -> Result<f64, ScatterError> {
    let (p2, q2) = scatter(p, q, cfg)?;
    Ok(p2.max_dist(p).max(q2.max_dist(q)))
}
