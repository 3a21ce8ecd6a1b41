use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::period::{periodicity, Periodicity};
use super::vu::vu_shape_check;
use super::{Verdict, SCHEMA};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::poly::Grading;
use crate::resolution::{minimal_free_resolution, BettiTable};
use crate::semigroup::NumericalSemigroup;
use crate::tangentcone::{tangent_cone, TangentConeOptions};
use crate::toric::h_grading;

/// Callback receiving one heartbeat line per finished row.
pub type Progress = Arc<dyn Fn(&str) + Send + Sync>;

#[derive(Clone, Default)]
pub struct ScanOptions {
    pub budget: Budget,
    /// Compute resolutions of `I` and `I*` for every row.
    pub betti: bool,
    /// Grow the window by `a_r - a_1` until the stabilization and period
    /// verdicts are conclusive, up to `max_kmax`.
    pub auto_extend: bool,
    pub max_kmax: Option<u64>,
    pub progress: Option<Progress>,
}

impl fmt::Debug for ScanOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScanOptions")
            .field("budget", &self.budget)
            .field("betti", &self.betti)
            .field("auto_extend", &self.auto_extend)
            .field("max_kmax", &self.max_kmax)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    /// A budget was exceeded; the row carries no data.
    Skipped,
    /// An internal consistency check failed.
    Failed,
}

/// Data for the shifted semigroup `H_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub k: u64,
    /// Minimal generators of `H_k`.
    pub generators: Vec<u64>,
    pub status: RowStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub mu_h: usize,
    pub mu_i: Option<usize>,
    pub mu_i_star: Option<usize>,
    pub betti_i: Option<BettiTable>,
    pub betti_i_star: Option<BettiTable>,
    pub cm: Option<bool>,
    pub inhomogeneous_gens_shape_ok: Option<bool>,
}

/// `(mu(I), mu(I*), Betti(S/I), Betti(S/I*), CM)` of one row.
type Signature = (usize, usize, Option<Vec<usize>>, Option<Vec<usize>>, bool);

impl ScanRow {
    /// `beta_i(I) == beta_i(I*)` for all `i`, or `mu(I) == mu(I*)` when no
    /// resolutions were computed.
    pub fn stable(&self) -> Option<bool> {
        match (&self.betti_i, &self.betti_i_star) {
            (Some(a), Some(b)) => Some(a.total == b.total),
            _ => Some(self.mu_i? == self.mu_i_star?),
        }
    }

    /// Everything the periodicity and stabilization detectors compare.
    fn signature(&self) -> Option<Signature> {
        Some((
            self.mu_i?,
            self.mu_i_star?,
            self.betti_i.as_ref().map(|b| b.total.clone()),
            self.betti_i_star.as_ref().map(|b| b.total.clone()),
            self.cm?,
        ))
    }

    /// Last total Betti number of the tangent cone equals 1.
    fn gorenstein_star(&self) -> Option<bool> {
        self.betti_i_star
            .as_ref()
            .map(|b| b.total.last() == Some(&1))
    }
}

/// Result of scanning the shifted family of a base sequence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: String,
    pub base: Vec<u64>,
    pub window: [u64; 2],
    pub betti: bool,
    pub rows: Vec<ScanRow>,
    /// Least `k` from which every row is stable through the window end.
    pub detected_k0: Option<u64>,
    /// Period of the full row signature.
    pub detected_period: Option<u64>,
    /// First `k` of the periodic tail.
    pub period_onset: Option<u64>,
    pub mu_star_period: Option<u64>,
    pub betti_period: Option<u64>,
    pub period_divides_width: Option<bool>,
    /// Least `k` from which the inhomogeneous-generator shape check holds.
    pub vu_onset: Option<u64>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub warnings: Vec<String>,
}

impl ScanReport {
    /// All named verdicts pass.
    pub fn pass(&self) -> bool {
        self.verdicts.values().all(|v| *v == Verdict::Pass)
    }

    pub fn verdict(&self, name: &str) -> Verdict {
        self.verdicts
            .get(name)
            .copied()
            .unwrap_or(Verdict::Inconclusive)
    }

    pub fn row(&self, k: u64) -> Option<&ScanRow> {
        self.rows.iter().find(|r| r.k == k)
    }
}

fn check_base(base: &[u64]) -> Result<()> {
    if base.is_empty() {
        return Err(Error::invalid("empty base sequence"));
    }
    if base.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "base {base:?} is not strictly increasing"
        )));
    }
    Ok(())
}

/// Smallest shift with every `a_i + k > 0`.
pub fn default_kmin(base: &[u64]) -> u64 {
    u64::from(base[0] == 0)
}

/// `a_r - 2a_1 + 4(a_r - a_1)`, clamped to at least `kmin + 2(a_r - a_1)`.
pub fn default_kmax(base: &[u64]) -> u64 {
    let (a1, ar) = (base[0] as i64, base[base.len() - 1] as i64);
    let w = ar - a1;
    let k = ar - 2 * a1 + 4 * w;
    let floor = default_kmin(base) as i64 + 2 * w.max(1);
    k.max(floor) as u64
}

fn budget_row(
    k: u64,
    generators: Vec<u64>,
    mu_h: usize,
    status: RowStatus,
    msg: String,
) -> ScanRow {
    ScanRow {
        k,
        generators,
        status,
        message: Some(msg),
        mu_h,
        mu_i: None,
        mu_i_star: None,
        betti_i: None,
        betti_i_star: None,
        cm: None,
        inhomogeneous_gens_shape_ok: None,
    }
}

/// Computes the row for `H_k`; budget overruns and consistency failures are
/// recorded in the row rather than returned.
pub fn scan_row(base: &[u64], k: u64, opts: &ScanOptions) -> Result<ScanRow> {
    let shifted: Vec<u64> = base.iter().map(|a| a + k).collect();
    let h = NumericalSemigroup::from_generators(&shifted)?;
    let generators = h.generators().to_vec();
    let mu_h = h.mu();
    match compute_row(&h, k, opts) {
        Ok(row) => Ok(row),
        Err(Error::Budget(m)) => Ok(budget_row(k, generators, mu_h, RowStatus::Skipped, m)),
        Err(Error::Consistency(m)) => Ok(budget_row(k, generators, mu_h, RowStatus::Failed, m)),
        Err(e) => Err(e),
    }
}

fn compute_row(h: &NumericalSemigroup, k: u64, opts: &ScanOptions) -> Result<ScanRow> {
    let tc = tangent_cone(h, &TangentConeOptions::with_budget(opts.budget))?;
    let (betti_i, betti_i_star) = if opts.betti {
        (
            Some(minimal_free_resolution(&tc.ideal, &h_grading(h), &opts.budget)?.betti),
            Some(
                minimal_free_resolution(tc.star(), &Grading::standard(h.mu()), &opts.budget)?.betti,
            ),
        )
    } else {
        (None, None)
    };
    Ok(ScanRow {
        k,
        generators: h.generators().to_vec(),
        status: RowStatus::Ok,
        message: None,
        mu_h: h.mu(),
        mu_i: Some(tc.mu_i()),
        mu_i_star: Some(tc.mu_star()),
        betti_i,
        betti_i_star,
        cm: Some(tc.cm),
        inhomogeneous_gens_shape_ok: Some(vu_shape_check(&tc.ideal)),
    })
}

/// Least `k` such that `pred` holds on every row from `k` to the end.
fn tail_onset(rows: &[ScanRow], pred: impl Fn(&ScanRow) -> bool) -> Option<u64> {
    let mut start = None;
    for r in rows.iter().rev() {
        if !pred(r) {
            break;
        }
        start = Some(r.k);
    }
    start
}

fn rows_for(
    base: &[u64],
    ks: impl IntoParallelIterator<Item = u64>,
    opts: &ScanOptions,
) -> Result<Vec<ScanRow>> {
    let rows: Vec<ScanRow> = ks
        .into_par_iter()
        .map(|k| {
            let row = scan_row(base, k, opts)?;
            if let Some(p) = &opts.progress {
                p(&format!("scan {base:?}: k={k} done ({:?})", row.status));
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(rows)
}

/// Scans `H_k = <a_1 + k, ..., a_r + k>` for `k` in `kmin..=kmax`.
pub fn shift_scan(base: &[u64], kmin: u64, kmax: u64, opts: &ScanOptions) -> Result<ScanReport> {
    check_base(base)?;
    let kmin = kmin.max(default_kmin(base));
    if kmax < kmin {
        return Err(Error::invalid(format!("empty window [{kmin}, {kmax}]")));
    }
    let width = base[base.len() - 1] - base[0];
    let cap = opts.max_kmax.unwrap_or(kmax + 8 * width.max(1)).max(kmax);
    let mut rows = rows_for(base, kmin..=kmax, opts)?;
    let mut hi = kmax;
    loop {
        rows.sort_by_key(|r| r.k);
        let report = analyze(base, kmin, hi, rows.clone(), opts.betti);
        let conclusive = report.verdict("stabilization") != Verdict::Inconclusive
            && report.verdict("periodicity") != Verdict::Inconclusive;
        if !opts.auto_extend || conclusive || hi >= cap {
            return Ok(report);
        }
        let next = (hi + width.max(1)).min(cap);
        rows.extend(rows_for(base, hi + 1..=next, opts)?);
        hi = next;
    }
}

/// Derives k0, periods and verdicts from sorted rows.
pub fn analyze(base: &[u64], kmin: u64, kmax: u64, rows: Vec<ScanRow>, betti: bool) -> ScanReport {
    let a1 = base[0];
    let width = base[base.len() - 1] - a1;
    let mut warnings = Vec::new();
    if kmax - kmin < 2 * width {
        warnings.push(format!("window shorter than 2(a_r - a_1) = {}", 2 * width));
    }
    let len = rows.len();
    let k_at = |i: usize| rows[i].k;

    let k0 = tail_onset(&rows, |r| r.stable() == Some(true));
    let sigs: Vec<_> = rows.iter().map(ScanRow::signature).collect();
    let per: Option<Periodicity> = periodicity(&sigs, len / 2);
    let mu_star: Vec<_> = rows.iter().map(|r| r.mu_i_star).collect();
    let mu_star_period = periodicity(&mu_star, len / 2).map(|p| p.period as u64);
    let betti_period = betti
        .then(|| {
            let seq: Vec<_> = rows
                .iter()
                .map(|r| {
                    (
                        r.betti_i.clone().map(|b| b.total),
                        r.betti_i_star.clone().map(|b| b.total),
                    )
                })
                .collect();
            periodicity(&seq, len / 2).map(|p| p.period as u64)
        })
        .flatten();
    let vu_onset = tail_onset(&rows, |r| r.inhomogeneous_gens_shape_ok == Some(true));

    let mut verdicts = BTreeMap::new();
    let any_failed = rows.iter().any(|r| r.status == RowStatus::Failed);
    let any_skipped = rows.iter().any(|r| r.status == RowStatus::Skipped);
    verdicts.insert(
        "rows_complete".into(),
        if any_failed {
            Verdict::Fail
        } else if any_skipped {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        },
    );

    // minimality of the shifted sequence beyond a_r - 2a_1
    let threshold = base[base.len() - 1] as i64 - 2 * a1 as i64;
    let mu_rows: Vec<&ScanRow> = rows.iter().filter(|r| r.k as i64 > threshold).collect();
    verdicts.insert(
        "mu_h_constant".into(),
        if mu_rows.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::from_bool(mu_rows.iter().all(|r| r.mu_h == base.len()))
        },
    );

    let period = per.map(|p| p.period as u64);
    let divides = period.map(|p| width > 0 && width.is_multiple_of(p) || width == 0 && p == 1);
    // at least two full periods of the signature inside the tail starting at `start`
    let two_periods = |start: u64| -> bool {
        match per {
            Some(p) => {
                let onset_k = k_at(p.onset);
                let from = start.max(onset_k);
                kmax + 1 >= from + 2 * p.period as u64
            }
            None => false,
        }
    };
    verdicts.insert(
        "periodicity".into(),
        match (per, divides) {
            (Some(_), Some(true)) => Verdict::Pass,
            (Some(_), Some(false)) => Verdict::Fail,
            _ => Verdict::Inconclusive,
        },
    );
    let stabilized = k0.is_some_and(two_periods);
    verdicts.insert(
        "stabilization".into(),
        Verdict::pass_or_inconclusive(stabilized),
    );
    verdicts.insert(
        "cm_from_k0".into(),
        match k0 {
            Some(k0) if stabilized => Verdict::from_bool(
                rows.iter()
                    .filter(|r| r.k >= k0)
                    .all(|r| r.cm == Some(true)),
            ),
            _ => Verdict::Inconclusive,
        },
    );
    verdicts.insert(
        "vu_shape".into(),
        Verdict::pass_or_inconclusive(vu_onset.is_some_and(two_periods)),
    );
    if betti {
        let g = match k0 {
            Some(k0) if stabilized => {
                let seq: Vec<_> = rows
                    .iter()
                    .filter(|r| r.k >= k0)
                    .map(ScanRow::gorenstein_star)
                    .collect();
                Verdict::pass_or_inconclusive(
                    periodicity(&seq, seq.len() / 2)
                        .is_some_and(|q| period.is_some_and(|p| p % q.period as u64 == 0)),
                )
            }
            _ => Verdict::Inconclusive,
        };
        verdicts.insert("gorenstein_periodic".into(), g);
    }

    ScanReport {
        schema: SCHEMA.into(),
        base: base.to_vec(),
        window: [kmin, kmax],
        betti,
        detected_k0: k0,
        detected_period: period,
        period_onset: per.map(|p| k_at(p.onset)),
        mu_star_period,
        betti_period,
        period_divides_width: divides,
        vu_onset,
        verdicts,
        warnings,
        rows,
    }
}
