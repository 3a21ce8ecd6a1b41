//! Acceptance suite: one pass/fail line per criterion, with timings.
//! Runs without the libtest harness so the lines print in order.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tancone::explorer::{
    default_kmax, default_kmin, random_semigroups, shift_scan, verify_conjecture_width,
    ScanOptions, Verdict, WidthOptions,
};
use tancone::families::{family, validate, FamilyReport, Params, ValidateOptions};
use tancone::groebner::{hilbert_function, Budget, GroebnerBasis};
use tancone::poly::{Grading, MonomialOrder, Polynomial};
use tancone::resolution::{gss_betti_sequence, minimal_free_resolution, Resolution};
use tancone::tangentcone::{tangent_cone, TangentConeOptions};
use tancone::toric::h_grading;
use tancone::{NumericalSemigroup, Result};

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn failed_checks(r: &FamilyReport) -> String {
    let bad: Vec<String> = r
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} (expected {}, got {})", c.name, c.expected, c.observed))
        .collect();
    format!("{:?}: {}", r.semigroup, bad.join("; "))
}

/// Validates every member; returns the first failure, if any.
fn validate_all(name: &str, members: &[Params], betti: bool) -> Result<(usize, Option<String>)> {
    let fam = family(name)?;
    let opts = ValidateOptions {
        budget: Budget::default(),
        betti,
    };
    for p in members {
        let report = validate(&fam.build(p)?, &opts)?;
        if !report.pass {
            return Ok((members.len(), Some(failed_checks(&report))));
        }
    }
    Ok((members.len(), None))
}

fn family_outcome(name: &str, members: &[Params], betti: bool) -> Result<Outcome> {
    let (n, failure) = validate_all(name, members, betti)?;
    match failure {
        None => outcome(true, format!("{n} instances match every closed form")),
        Some(f) => outcome(false, f),
    }
}

fn c1_frobenius() -> Result<Outcome> {
    let pairs = [(4, 5), (4, 7), (5, 6), (5, 7), (7, 9), (7, 11)];
    let members: Vec<Params> = pairs
        .iter()
        .map(|&(a, b)| Params::new([("a", a), ("b", b)]))
        .collect();
    family_outcome("frobenius", &members, false)
}

fn c2_shibuta() -> Result<Outcome> {
    let members: Vec<Params> = (5..=20).map(|a| Params::new([("a", a)])).collect();
    family_outcome("shibuta", &members, false)
}

fn c3_bresinsky() -> Result<Outcome> {
    let members: Vec<Params> = (2..=3).map(|h| Params::new([("h", h)])).collect();
    family_outcome("bresinsky", &members, false)
}

fn c4_sally() -> Result<Outcome> {
    let members: Vec<Params> = (5..=9).map(|e| Params::new([("e", e)])).collect();
    family_outcome("sally", &members, false)
}

/// Resolution self-checks, tallied for criterion 9.
#[derive(Default)]
struct ResolutionTally {
    count: usize,
    bad: Vec<String>,
}

impl ResolutionTally {
    fn record(&mut self, what: &str, res: Result<Resolution>) -> Option<Vec<usize>> {
        self.count += 1;
        match res {
            Ok(r) if r.composition_zero && r.minimal => Some(r.betti.total),
            Ok(_) => {
                self.bad.push(format!("{what}: self-check flags false"));
                None
            }
            Err(e) => {
                self.bad.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

fn c5_gss(tally: &mut ResolutionTally) -> Result<Outcome> {
    let budget = Budget::default();
    let mut cases = 0;
    for r in 3..=5u64 {
        for a1 in r + 1..=r + 8 {
            for d in 1..=3u64 {
                if a1.gcd(&d) != 1 {
                    continue;
                }
                let gens: Vec<u64> = (0..r).map(|i| a1 + i * d).collect();
                let h = NumericalSemigroup::from_generators(&gens)?;
                if h.mu() as u64 != r {
                    continue;
                }
                cases += 1;
                let expected: Vec<usize> = gss_betti_sequence(a1, d, r)?
                    .into_iter()
                    .map(|b| b as usize)
                    .collect();
                let tc = tangent_cone(&h, &TangentConeOptions::default())?;
                let label = format!("{gens:?}");
                let bi = tally.record(
                    &label,
                    minimal_free_resolution(&tc.ideal, &h_grading(&h), &budget),
                );
                let bs = tally.record(
                    &format!("{label}*"),
                    minimal_free_resolution(tc.star(), &Grading::standard(h.mu()), &budget),
                );
                if bi.as_ref() != Some(&expected) || bs.as_ref() != Some(&expected) {
                    return outcome(
                        false,
                        format!("{label}: formula {expected:?}, S/I {bi:?}, S/I* {bs:?}"),
                    );
                }
            }
        }
    }
    outcome(
        true,
        format!("{cases} sequences, Betti(S/I) = Betti(S/I*) = formula"),
    )
}

fn c6_width(wmax: u64) -> Result<Outcome> {
    let report = verify_conjecture_width(wmax, &WidthOptions::default())?;
    let detail = format!(
        "{} bases, {} rows, {} violations, {} unverified, {} equality instances",
        report.cases,
        report.checked_rows,
        report.violations.len(),
        report.unverified.len(),
        report.equality_cases.len()
    );
    outcome(report.verdict == Verdict::Pass, detail)
}

fn c7_periodicity() -> Result<Outcome> {
    let opts = ScanOptions {
        betti: true,
        auto_extend: true,
        ..Default::default()
    };
    let mut parts = Vec::new();
    let mut pass = true;
    for base in [[3u64, 5, 7], [0, 2, 4], [4, 7, 9], [5, 6, 9]] {
        let report = shift_scan(&base, default_kmin(&base), default_kmax(&base), &opts)?;
        let ok = report.pass()
            && report.period_divides_width == Some(true)
            && report.verdict("stabilization") == Verdict::Pass
            && report.verdict("cm_from_k0") == Verdict::Pass;
        pass &= ok;
        let k0 = report.detected_k0.map_or("-".into(), |k| k.to_string());
        let p = report.detected_period.map_or("-".into(), |p| p.to_string());
        parts.push(format!(
            "{base:?} k0={k0} period={p} window={:?}",
            report.window
        ));
        if !ok {
            let bad: Vec<String> = report
                .verdicts
                .iter()
                .filter(|(_, v)| **v != Verdict::Pass)
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            parts.push(format!("not passing: {}", bad.join(", ")));
        }
    }
    outcome(pass, parts.join("; "))
}

fn c8_master_oracle() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples = random_semigroups(&mut rng, 30, 5, 40);
    for h in &samples {
        let tc = tangent_cone(h, &TangentConeOptions::default())?;
        let got = hilbert_function(h.mu(), tc.star(), 50)?;
        let want = h.tangent_hilbert_oracle(50)?;
        if got != want {
            return outcome(
                false,
                format!("{:?}: H_I* {got:?} vs oracle {want:?}", h.generators()),
            );
        }
    }
    outcome(
        true,
        format!("{} semigroups agree through degree 50", samples.len()),
    )
}

fn random_binomial<R: Rng>(rng: &mut R, n: usize) -> Polynomial {
    loop {
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let b: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        if a != b {
            return Polynomial::binomial(&a, &b);
        }
    }
}

fn sorted_strings(ps: &[Polynomial]) -> Vec<String> {
    let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

fn c9_kernel(tally: &mut ResolutionTally) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let orders = [MonomialOrder::degrevlex(3), MonomialOrder::lex(3)];
    for i in 0..100 {
        let len = rng.gen_range(2..=4);
        let gens: Vec<Polynomial> = (0..len).map(|_| random_binomial(&mut rng, 3)).collect();
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let ord = &orders[i % 2];
        let a = GroebnerBasis::compute(&gens, ord)?;
        let b = GroebnerBasis::compute(&shuffled, ord)?;
        if sorted_strings(a.elements()) != sorted_strings(b.elements()) {
            return outcome(false, format!("reduced bases differ for {gens:?}"));
        }
    }

    let budget = Budget::default();
    let mut worst = 0;
    for _ in 0..200 {
        let h = loop {
            let gens: Vec<u64> = (0..3).map(|_| rng.gen_range(2..=60)).collect();
            let h = NumericalSemigroup::from_generators(&gens)?;
            if h.gcd() == 1 {
                break h;
            }
        };
        let tc = tangent_cone(&h, &TangentConeOptions::default())?;
        worst = worst.max(tc.mu_i());
        if tc.mu_i() > 3 {
            return outcome(
                false,
                format!("{:?}: mu(I) = {}", h.generators(), tc.mu_i()),
            );
        }
        let label = format!("{:?}", h.generators());
        tally.record(
            &label,
            minimal_free_resolution(&tc.ideal, &h_grading(&h), &budget),
        );
        tally.record(
            &format!("{label}*"),
            minimal_free_resolution(tc.star(), &Grading::standard(h.mu()), &budget),
        );
    }
    if let Some(bad) = tally.bad.first() {
        return outcome(false, format!("resolution self-check failed: {bad}"));
    }
    outcome(
        true,
        format!(
            "100 shuffled reduced bases agree; max mu(I) = {worst} over 200 samples; {} resolutions pass composition and minimality checks",
            tally.count
        ),
    )
}

fn timed(f: impl FnOnce() -> Result<Outcome>) -> (Result<Outcome>, Duration) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed())
}

/// Prints the criterion line; returns whether it passed within `limit`.
fn report(n: u32, name: &str, limit: u64, (res, took): (Result<Outcome>, Duration)) -> bool {
    let (pass, detail) = match res {
        Ok(o) => (o.pass, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = took <= Duration::from_secs(limit);
    let timing = if in_time {
        String::new()
    } else {
        format!(" over the {limit} s limit")
    };
    println!(
        "criterion {n}: {} | {name} | {:.2} s{timing} | {detail}",
        if pass && in_time { "PASS" } else { "FAIL" },
        took.as_secs_f64()
    );
    pass && in_time
}

fn main() -> ExitCode {
    let mut tally = ResolutionTally::default();
    let results = [
        report(1, "Frobenius family", 5, timed(c1_frobenius)),
        report(2, "Shibuta variants a=5..20", 30, timed(c2_shibuta)),
        report(3, "Bresinsky h=2,3", 60, timed(c3_bresinsky)),
        report(4, "Sally e=5..9", 120, timed(c4_sally)),
        report(
            5,
            "GSS Betti formula grid",
            600,
            timed(|| c5_gss(&mut tally)),
        ),
        report(
            6,
            "width conjecture, width <= 3",
            900,
            timed(|| c6_width(3)),
        ),
        report(
            7,
            "periodicity and stabilization",
            600,
            timed(c7_periodicity),
        ),
        report(8, "master Hilbert oracle", 300, timed(c8_master_oracle)),
        report(9, "kernel properties", 600, timed(|| c9_kernel(&mut tally))),
    ];
    // widths 4 and 5: opt-in long mode
    let long = std::env::var_os("TANCONE_ACCEPTANCE_LONG").is_some();
    let long_ok = !long
        || report(
            6,
            "width conjecture long mode, width <= 5",
            3600,
            timed(|| c6_width(5)),
        );
    if long_ok && results.iter().all(|&ok| ok) {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
