use std::str::FromStr;

use clap::ValueEnum;
use scalar_series::{ExactScalar, Q};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum AlgebraId {
    UqSl2,
    Sl2Tensor,
    KXiIso3,
    D21e,
    MaxExtSl22,
}

impl AlgebraId {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraId::UqSl2 => "uq_sl2",
            AlgebraId::Sl2Tensor => "sl2_tensor",
            AlgebraId::KXiIso3 => "k_xi_iso3",
            AlgebraId::D21e => "d21e",
            AlgebraId::MaxExtSl22 => "max_ext_sl22",
        }
    }

    pub fn default_order(&self) -> usize {
        match self {
            AlgebraId::UqSl2 => 4,
            AlgebraId::D21e | AlgebraId::MaxExtSl22 => 2,
            _ => 3,
        }
    }

    /// Highest order at which the R-matrix checks run.
    pub fn rmatrix_order_limit(&self) -> usize {
        match self {
            AlgebraId::UqSl2 => 4,
            AlgebraId::D21e | AlgebraId::MaxExtSl22 => 2,
            _ => 3,
        }
    }
}

pub const MAX_ORDER: usize = 6;

pub fn check_order(order: usize) -> Result<usize, CliError> {
    match order {
        0 => Err(usage("order too small: need at least 1")),
        n if n > MAX_ORDER => Err(usage(format!("order {n} exceeds the supported maximum {MAX_ORDER}"))),
        n => Ok(n),
    }
}

pub fn parse_scalar(flag: &str, s: &str) -> Result<ExactScalar, CliError> {
    ExactScalar::from_str(s).map_err(|e| usage(format!("--{flag}: {e}")))
}

/// A real rational given as an exact scalar string.
pub fn parse_real(flag: &str, s: &str) -> Result<Q, CliError> {
    let z = parse_scalar(flag, s)?;
    if *z.im() != scalar_series::qi(0) {
        return Err(usage(format!("--{flag} must be real, got {z}")));
    }
    Ok(z.re().clone())
}

/// Caps the global rayon pool from `HOPF_CONTRACT_THREADS`.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HOPF_CONTRACT_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| usage(format!("HOPF_CONTRACT_THREADS must be a positive integer, got `{v}`")))?;
    // A pool that already exists keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar_series::{q, qi};

    #[test]
    fn rationals_are_exact() {
        assert_eq!(parse_real("xi", "3/5").unwrap(), q(3, 5));
        assert_eq!(parse_real("xi", "-2").unwrap(), qi(-2));
        assert!(parse_real("xi", "0.6").is_err());
        assert!(parse_real("xi", "1/2+1i").is_err());
        assert_eq!(parse_scalar("kappa", "10i").unwrap(), ExactScalar::imag(qi(10)));
    }

    #[test]
    fn order_bounds() {
        assert!(check_order(0).is_err());
        assert!(check_order(7).is_err());
        assert_eq!(check_order(3).unwrap(), 3);
    }
}
