//! Shifted-family scans, period detection and conjecture checks.

mod conjecture;
mod period;
mod report;
mod sample;
mod scan;
mod vu;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use conjecture::{
    bases_of_width, conjecture_check, conjecture_names, verify_conjecture_tilde,
    verify_conjecture_width, ConjectureCheck, ConjectureParams, ConjectureReport, ConjectureRow,
    TildeConjecture, TildeOptions, Unverified, Violation, WidthConjecture, WidthOptions,
};
pub use period::{detect_period, periodicity, Periodicity};
pub use report::{conjecture_csv, scan_csv, scan_from_json_lines, scan_to_json_lines};
pub use sample::{random_semigroup, random_semigroups};
pub use scan::{
    analyze, default_kmax, default_kmin, scan_row, shift_scan, Progress, RowStatus, ScanOptions,
    ScanReport, ScanRow,
};
pub use vu::vu_shape_check;

/// Version tag carried by every machine-readable report.
pub const SCHEMA: &str = "tancone/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn pass_or_inconclusive(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}
