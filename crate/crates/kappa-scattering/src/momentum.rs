use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScatterError {
    #[error("kappa must be finite and nonzero")]
    BadKappa,
    #[error("non-finite momentum component {0}")]
    NonFinite(&'static str),
    #[error("singular kinematics: r = {r} vanishes")]
    SingularKinematics { r: Complex64 },
    #[error("branch ambiguity: r = {r} lies on the cut of the logarithm")]
    BranchAmbiguity { r: Complex64 },
}

/// Components `(p₀, p₊, p₋)`, all finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Momentum3 {
    pub p0: Complex64,
    pub p_plus: Complex64,
    pub p_minus: Complex64,
}

impl Momentum3 {
    pub fn new(p0: Complex64, p_plus: Complex64, p_minus: Complex64) -> Result<Self, ScatterError> {
        Self { p0, p_plus, p_minus }.checked()
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self { p0: z, p_plus: z, p_minus: z }
    }

    pub fn components(&self) -> [Complex64; 3] {
        [self.p0, self.p_plus, self.p_minus]
    }

    pub(crate) fn checked(self) -> Result<Self, ScatterError> {
        for (name, c) in ["p0", "p_plus", "p_minus"].into_iter().zip(self.components()) {
            if !c.is_finite() {
                return Err(ScatterError::NonFinite(name));
            }
        }
        Ok(self)
    }

    /// Largest componentwise distance.
    pub fn max_dist(&self, o: &Momentum3) -> f64 {
        self.components().iter().zip(o.components()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl fmt::Display for Momentum3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p0 = {}, p+ = {}, p- = {})", self.p0, self.p_plus, self.p_minus)
    }
}

/// Sheet of `log r`; `r^{±1/2}` is always `exp(±½ log r)` on the same sheet.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Branch {
    #[default]
    Principal,
    /// `log r + 2πi`, which also flips the sign of `r^{±1/2}`.
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatterConfig {
    pub kappa: Complex64,
    pub branch: Branch,
    /// Pass threshold for scaled residuals, and the relative distance from
    /// the negative real axis below which `r` counts as on the cut.
    pub tolerance: f64,
    /// `|r|` at or below this is treated as singular.
    pub singular_radius: f64,
}

impl ScatterConfig {
    pub fn new(kappa: Complex64) -> Result<Self, ScatterError> {
        if !kappa.is_finite() || kappa.norm() == 0.0 {
            return Err(ScatterError::BadKappa);
        }
        Ok(Self { kappa, branch: Branch::Principal, tolerance: 1e-12, singular_radius: 1e-6 })
    }

    pub fn real(kappa: f64) -> Result<Self, ScatterError> {
        Self::new(Complex64::new(kappa, 0.0))
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branch = branch;
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }
}
