use hopf_structures::CheckReport;
use serde::{Deserialize, Serialize};

use crate::series::RMatrixSeries;

/// One verification result in the stable JSON shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixReport {
    pub check: String,
    pub algebra: String,
    pub order: usize,
    pub xi: Option<String>,
    pub status: String,
    pub first_failing_order: Option<usize>,
    pub failing_term_count: usize,
}

impl RMatrixReport {
    pub fn new(r: &RMatrixSeries, c: &CheckReport) -> Self {
        Self {
            check: c.check.clone(),
            algebra: r.name().to_string(),
            order: r.order,
            xi: r.algebra.metadata().get("xi").cloned(),
            status: if c.passed { "pass" } else { "fail" }.to_string(),
            first_failing_order: c.first_failing_order,
            failing_term_count: c.failing_term_count,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields serialise")
    }
}
