use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::scan::{default_kmin, shift_scan, RowStatus, ScanOptions};
use super::{Verdict, SCHEMA};
use crate::error::{Error, Result};
use crate::families::is_interval_equality_family;
use crate::groebner::Budget;
use crate::poly::Grading;
use crate::resolution::{minimal_free_resolution, MAX_VARS};
use crate::semigroup::NumericalSemigroup;
use crate::tangentcone::{tangent_cone, TangentConeOptions};

/// One semigroup checked against a conjecture.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    /// Base sequence (width check) or sample generators (tilde check).
    pub case: Vec<u64>,
    pub k: Option<u64>,
    pub semigroup: Vec<u64>,
    pub mu_i_star: usize,
    /// Right-hand side of the inequality.
    pub bound: usize,
    pub equality: bool,
    /// Width check: is the semigroup an interval equality-family member.
    /// Tilde check: is it generated by an arithmetic sequence.
    pub special: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_star: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_bound: Option<Vec<usize>>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub semigroup: Vec<u64>,
    pub detail: String,
    /// Command reproducing the offending computation.
    pub replay: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Unverified {
    pub case: Vec<u64>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub schema: String,
    pub conjecture: String,
    pub statement: String,
    pub cases: usize,
    pub checked_rows: usize,
    pub violations: Vec<Violation>,
    pub unverified: Vec<Unverified>,
    pub equality_cases: Vec<Vec<u64>>,
    pub verdict: Verdict,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    fn new(
        name: &str,
        statement: &str,
        cases: usize,
        rows: Vec<ConjectureRow>,
        violations: Vec<Violation>,
        unverified: Vec<Unverified>,
    ) -> Self {
        let mut equality_cases: Vec<Vec<u64>> = rows
            .iter()
            .filter(|r| r.equality)
            .map(|r| r.semigroup.clone())
            .collect();
        equality_cases.sort();
        equality_cases.dedup();
        let verdict = if !violations.is_empty() {
            Verdict::Fail
        } else if !unverified.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        ConjectureReport {
            schema: SCHEMA.into(),
            conjecture: name.into(),
            statement: statement.into(),
            cases,
            checked_rows: rows.len(),
            violations,
            unverified,
            equality_cases,
            verdict,
            rows,
        }
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn list(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// All `0 = a_1 < ... < a_r = w` with `r >= 2`.
pub fn bases_of_width(w: u64) -> Vec<Vec<u64>> {
    assert!((1..64).contains(&w));
    let inner = (w - 1) as u32;
    (0u64..1 << inner)
        .map(|mask| {
            let mut b = vec![0];
            b.extend((1..w).filter(|i| mask >> (i - 1) & 1 == 1));
            b.push(w);
            b
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct WidthOptions {
    /// Initial window `kmax = a_r - 2a_1 + factor * (a_r - a_1)`.
    pub shift_window_factor: u64,
    pub scan: ScanOptions,
}

impl Default for WidthOptions {
    fn default() -> Self {
        WidthOptions {
            shift_window_factor: 4,
            scan: ScanOptions {
                auto_extend: true,
                ..Default::default()
            },
        }
    }
}

const WIDTH_STATEMENT: &str =
    "mu(I*) <= C(width + 1, 2), with equality exactly for <kw+1, ..., (k+1)w+1>";

/// Checks the width bound on every shift of every base sequence of width
/// at most `wmax`, through two periods past the observed stabilization.
pub fn verify_conjecture_width(wmax: u64, opts: &WidthOptions) -> Result<ConjectureReport> {
    if wmax == 0 {
        return Err(Error::invalid("wmax must be at least 1"));
    }
    let bases: Vec<Vec<u64>> = (1..=wmax).flat_map(bases_of_width).collect();
    let per_base: Vec<(Vec<ConjectureRow>, Vec<Violation>, Option<Unverified>)> = bases
        .par_iter()
        .map(|base| width_base(base, opts))
        .collect::<Result<_>>()?;
    let (mut rows, mut violations, mut unverified) = (Vec::new(), Vec::new(), Vec::new());
    for (r, v, u) in per_base {
        rows.extend(r);
        violations.extend(v);
        unverified.extend(u);
    }
    Ok(ConjectureReport::new(
        "width",
        WIDTH_STATEMENT,
        bases.len(),
        rows,
        violations,
        unverified,
    ))
}

fn width_base(
    base: &[u64],
    opts: &WidthOptions,
) -> Result<(Vec<ConjectureRow>, Vec<Violation>, Option<Unverified>)> {
    let w = base[base.len() - 1];
    let kmax = w + opts.shift_window_factor * w;
    let rep = shift_scan(base, default_kmin(base), kmax, &opts.scan)?;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut unverified = None;
    if rep.verdict("stabilization") != Verdict::Pass
        || rep.verdict("rows_complete") != Verdict::Pass
    {
        unverified = Some(Unverified {
            case: base.to_vec(),
            reason: format!(
                "window [{}, {}] without two periods past stabilization or with incomplete rows",
                rep.window[0], rep.window[1]
            ),
        });
    }
    for row in &rep.rows {
        if row.status != RowStatus::Ok {
            continue;
        }
        let Some(mu_star) = row.mu_i_star else {
            continue;
        };
        let hn = NumericalSemigroup::from_generators(&row.generators)?.normalized();
        let bound = binom(hn.width() as usize + 1, 2);
        let equality = mu_star == bound && hn.mu() >= 2;
        let special = is_interval_equality_family(&hn);
        let ok = mu_star <= bound && (hn.mu() < 2 || equality == special);
        if !ok {
            violations.push(Violation {
                semigroup: row.generators.clone(),
                detail: format!(
                    "mu(I*) = {mu_star}, bound {bound}, equality {equality}, interval family {special}"
                ),
                replay: format!("tancone tangentcone {}", list(&row.generators)),
            });
        }
        rows.push(ConjectureRow {
            case: base.to_vec(),
            k: Some(row.k),
            semigroup: row.generators.clone(),
            mu_i_star: mu_star,
            bound,
            equality,
            special,
            betti_star: None,
            betti_bound: None,
            ok,
        });
    }
    Ok((rows, violations, unverified))
}

#[derive(Clone, Debug)]
pub struct TildeOptions {
    pub budget: Budget,
    /// Interval completions with more generators are reported unverified.
    pub max_tilde_mu: usize,
}

impl Default for TildeOptions {
    fn default() -> Self {
        TildeOptions {
            budget: Budget::default(),
            max_tilde_mu: MAX_VARS,
        }
    }
}

const TILDE_STATEMENT: &str =
    "mu(I*_H) <= mu(I*_Htilde); Betti-wise for arithmetic sequences, Htilde the interval completion";

fn is_arithmetic(h: &NumericalSemigroup) -> bool {
    let g = h.generators();
    g.len() >= 2 && g.windows(2).all(|w| w[1] - w[0] == g[1] - g[0])
}

/// Compares each sample with its interval completion.
pub fn verify_conjecture_tilde(
    samples: &[NumericalSemigroup],
    opts: &TildeOptions,
) -> Result<ConjectureReport> {
    let results: Vec<std::result::Result<(ConjectureRow, Option<Violation>), Unverified>> = samples
        .par_iter()
        .map(|h| tilde_case(h, opts))
        .collect::<Result<_>>()?;
    let (mut rows, mut violations, mut unverified) = (Vec::new(), Vec::new(), Vec::new());
    for r in results {
        match r {
            Ok((row, v)) => {
                rows.push(row);
                violations.extend(v);
            }
            Err(u) => unverified.push(u),
        }
    }
    Ok(ConjectureReport::new(
        "tilde",
        TILDE_STATEMENT,
        samples.len(),
        rows,
        violations,
        unverified,
    ))
}

type TildeOutcome = std::result::Result<(ConjectureRow, Option<Violation>), Unverified>;

fn tilde_case(h: &NumericalSemigroup, opts: &TildeOptions) -> Result<TildeOutcome> {
    let tilde = h.interval_completion();
    let skip = |reason: String| {
        Ok(Err(Unverified {
            case: h.generators().to_vec(),
            reason,
        }))
    };
    if tilde.mu() > opts.max_tilde_mu {
        return skip(format!("interval completion has {} generators", tilde.mu()));
    }
    let tco = TangentConeOptions::with_budget(opts.budget);
    let (tc, tt) = match (tangent_cone(h, &tco), tangent_cone(&tilde, &tco)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) if e.is_budget() => return skip(e.to_string()),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let arithmetic = is_arithmetic(h);
    let (mut betti_star, mut betti_bound) = (None, None);
    let mut ok = tc.mu_star() <= tt.mu_star();
    if arithmetic {
        let res = |gens: &[crate::poly::Polynomial], n: usize| -> Result<Vec<usize>> {
            Ok(
                minimal_free_resolution(gens, &Grading::standard(n), &opts.budget)?
                    .betti
                    .total,
            )
        };
        let (a, b) = match (res(tc.star(), h.mu()), res(tt.star(), tilde.mu())) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) if e.is_budget() => return skip(e.to_string()),
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        let n = a.len().max(b.len());
        ok &= (0..n).all(|i| a.get(i).unwrap_or(&0) <= b.get(i).unwrap_or(&0));
        betti_star = Some(a);
        betti_bound = Some(b);
    }
    let row = ConjectureRow {
        case: h.generators().to_vec(),
        k: None,
        semigroup: h.generators().to_vec(),
        mu_i_star: tc.mu_star(),
        bound: tt.mu_star(),
        equality: tc.mu_star() == tt.mu_star(),
        special: arithmetic,
        betti_star,
        betti_bound,
        ok,
    };
    let violation = (!ok).then(|| Violation {
        semigroup: h.generators().to_vec(),
        detail: format!(
            "mu(I*) = {} vs {} for {}",
            tc.mu_star(),
            tt.mu_star(),
            tilde
        ),
        replay: format!(
            "tancone conjecture tilde --samples {}",
            list(h.generators())
        ),
    });
    Ok(Ok((row, violation)))
}

/// Everything a registered conjecture check may need.
#[derive(Clone, Debug, Default)]
pub struct ConjectureParams {
    pub wmax: u64,
    pub width: WidthOptions,
    pub samples: Vec<NumericalSemigroup>,
    pub tilde: TildeOptions,
}

/// A conjecture that can be checked computationally.
pub trait ConjectureCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn statement(&self) -> &'static str;
    fn run(&self) -> Result<ConjectureReport>;
}

pub struct WidthConjecture {
    pub wmax: u64,
    pub opts: WidthOptions,
}

impl ConjectureCheck for WidthConjecture {
    fn name(&self) -> &'static str {
        "width"
    }

    fn statement(&self) -> &'static str {
        WIDTH_STATEMENT
    }

    fn run(&self) -> Result<ConjectureReport> {
        verify_conjecture_width(self.wmax, &self.opts)
    }
}

pub struct TildeConjecture {
    pub samples: Vec<NumericalSemigroup>,
    pub opts: TildeOptions,
}

impl ConjectureCheck for TildeConjecture {
    fn name(&self) -> &'static str {
        "tilde"
    }

    fn statement(&self) -> &'static str {
        TILDE_STATEMENT
    }

    fn run(&self) -> Result<ConjectureReport> {
        verify_conjecture_tilde(&self.samples, &self.opts)
    }
}

type Factory = fn(&ConjectureParams) -> Box<dyn ConjectureCheck>;

const CHECKS: &[(&str, Factory)] = &[
    ("width", |p| {
        Box::new(WidthConjecture {
            wmax: p.wmax,
            opts: p.width.clone(),
        })
    }),
    ("tilde", |p| {
        Box::new(TildeConjecture {
            samples: p.samples.clone(),
            opts: p.tilde.clone(),
        })
    }),
];

pub fn conjecture_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

pub fn conjecture_check(name: &str, params: &ConjectureParams) -> Result<Box<dyn ConjectureCheck>> {
    CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f(params))
        .ok_or_else(|| {
            Error::invalid(format!(
                "unknown conjecture {name:?}; known: {}",
                conjecture_names().join(", ")
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        assert_eq!(bases_of_width(1), vec![vec![0, 1]]);
        assert_eq!(bases_of_width(3).len(), 4);
        assert!(bases_of_width(3).contains(&vec![0, 1, 3]));
    }

    #[test]
    fn tilde_examples() {
        let hs: Vec<NumericalSemigroup> =
            [vec![3, 5, 7], vec![7, 9, 11], vec![3, 4, 5], vec![4, 5, 11]]
                .iter()
                .map(|g| NumericalSemigroup::from_generators(g).unwrap())
                .collect();
        let rep = verify_conjecture_tilde(&hs, &TildeOptions::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{rep:?}");
        assert_eq!(rep.rows[0].bound, 3);
        assert!(rep.rows[1].special && rep.rows[1].betti_bound.is_some());
        assert!(rep.rows[2].equality);
    }

    #[test]
    fn width_two() {
        let rep = verify_conjecture_width(2, &WidthOptions::default()).unwrap();
        assert_eq!(
            rep.verdict,
            Verdict::Pass,
            "{:?} {:?}",
            rep.violations,
            rep.unverified
        );
        assert!(rep.equality_cases.contains(&vec![3, 4, 5]));
    }

    #[test]
    fn registry() {
        assert_eq!(conjecture_names(), ["width", "tilde"]);
        let p = ConjectureParams {
            wmax: 1,
            ..Default::default()
        };
        let c = conjecture_check("width", &p).unwrap();
        assert_eq!(c.name(), "width");
        assert_eq!(c.run().unwrap().verdict, Verdict::Pass);
        assert!(conjecture_check("nope", &p).is_err());
    }
}
