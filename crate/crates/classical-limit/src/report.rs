use std::fmt;

use crate::tensor::WedgeTensor;

/// Outcome of an exact identity check: the residual tensor must vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub check: String,
    pub passed: bool,
    pub failing_components: usize,
    pub detail: String,
}

impl IdentityReport {
    pub fn from_residual(check: &str, residual: &WedgeTensor) -> Self {
        let n = residual.len();
        let detail = match residual.components().next() {
            None => "residual vanishes".to_string(),
            Some((idx, c)) => format!("{n} nonzero components, first {idx:?} = {c}"),
        };
        Self { check: check.to_string(), passed: n == 0, failing_components: n, detail }
    }

    pub fn merge(check: &str, parts: &[IdentityReport]) -> Self {
        let failing: Vec<&IdentityReport> = parts.iter().filter(|r| !r.passed).collect();
        let detail = match failing.first() {
            None => format!("{} identities hold", parts.len()),
            Some(f) => format!("{} of {} fail; {}: {}", failing.len(), parts.len(), f.check, f.detail),
        };
        Self {
            check: check.to_string(),
            passed: failing.is_empty(),
            failing_components: failing.iter().map(|r| r.failing_components).sum(),
            detail,
        }
    }

    pub fn flag(check: &str, passed: bool, detail: String) -> Self {
        Self { check: check.to_string(), passed, failing_components: usize::from(!passed), detail }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.check, self.detail)
    }
}
