//! `tancone`: semigroup queries, tangent cones, Betti numbers, family
//! validation and shifted-family scans.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use output::Format;
use tancone::explorer::{
    self, conjecture_check, default_kmax, default_kmin, ConjectureParams, ScanOptions,
    TildeOptions, Verdict,
};
use tancone::families::{family, registry, validate, Params, ValidateOptions};
use tancone::groebner::Budget;
use tancone::poly::{Grading, Ring};
use tancone::resolution::minimal_free_resolution;
use tancone::semigroup::parse_integer_list;
use tancone::tangentcone::{tangent_cone, TangentConeOptions};
use tancone::toric::{h_grading, toric_ideal_with};
use tancone::{Error, NumericalSemigroup};

#[derive(Parser, Debug)]
#[command(
    name = "tancone",
    version,
    about = "Tangent cones of numerical semigroup rings"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format [default: text]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for scans [default: all cores]
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized suites [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest total degree allowed in Gröbner computations
    #[arg(long, global = true)]
    max_degree: Option<u64>,
    /// Largest number of S-pairs per Gröbner computation
    #[arg(long, global = true)]
    max_pairs: Option<usize>,
    /// Minimum degree range for the Hilbert cross-check
    #[arg(long, global = true)]
    dmax: Option<usize>,
    /// Configuration file (key = value); overrides TANCONE_CONFIG
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Suppress heartbeat lines on stderr
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semigroup invariants
    Semigroup {
        #[command(subcommand)]
        cmd: SemigroupCmd,
    },
    /// Minimal generators of the toric ideal I_H
    Ideal { gens: String },
    /// I*, mu(I*), the Cohen-Macaulay flag and the Hilbert cross-check
    Tangentcone {
        gens: String,
        /// Pure lex with the homogenizing variable first
        #[arg(long)]
        strict_lex: bool,
    },
    /// Graded Betti numbers of S/I_H (or S/I* with --star)
    Betti {
        gens: String,
        #[arg(long)]
        star: bool,
    },
    /// Validate a family member against its closed forms
    Family(FamilyArgs),
    /// Scan the shifted family <a_1 + k, ..., a_r + k>
    Scan(ScanArgs),
    /// Check a conjecture computationally
    Conjecture {
        #[command(subcommand)]
        cmd: ConjectureCmd,
    },
}

#[derive(Subcommand, Debug)]
enum SemigroupCmd {
    Info {
        gens: String,
        /// Add k to every generator first
        #[arg(long, default_value_t = 0)]
        shift: u64,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// sally, bresinsky, shibuta, frobenius, arithmetic (or "list")
    name: String,
    #[arg(long)]
    e: Option<u64>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    a1: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    /// Also compare Betti numbers when the family predicts them
    #[arg(long)]
    betti: bool,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    base: String,
    #[arg(long)]
    kmin: Option<u64>,
    /// [default: a_r - 2a_1 + 4(a_r - a_1)]
    #[arg(long)]
    kmax: Option<u64>,
    /// Compute Betti numbers of I and I* on every row
    #[arg(long)]
    betti: bool,
    /// Extend the window until the verdicts are conclusive
    #[arg(long)]
    auto_extend: bool,
    /// Emit JSON lines (summary then rows) instead of one document
    #[arg(long)]
    jsonl: bool,
}

#[derive(Subcommand, Debug)]
enum ConjectureCmd {
    /// mu(I*) <= C(width+1, 2) over all bases of width <= wmax
    Width {
        #[arg(long)]
        wmax: u64,
        /// Initial window kmax = a_r + factor * a_r
        #[arg(long)]
        window_factor: Option<u64>,
    },
    /// mu(I*_H) <= mu(I*_Htilde) on given or random samples
    Tilde {
        /// Semigroups separated by ';', e.g. "3,5,7;7,9,11"
        #[arg(long)]
        samples: Option<String>,
        /// Number of random samples (seeded by --seed)
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 4)]
        max_r: usize,
        #[arg(long, default_value_t = 25)]
        max_gen: u64,
    },
}

/// Everything a command needs after merging the config file and flags.
struct Ctx {
    format: Format,
    seed: u64,
    budget: Budget,
    dmax: usize,
    window_factor: u64,
    scan_betti: bool,
    quiet: bool,
}

impl Ctx {
    fn heartbeat(&self) -> Option<explorer::Progress> {
        (!self.quiet)
            .then(|| Arc::new(|msg: &str| eprintln!("[tancone] {msg}")) as explorer::Progress)
    }

    fn tc_opts(&self, strict_lex: bool) -> TangentConeOptions {
        TangentConeOptions {
            budget: self.budget,
            strict_lex,
            dmax: self.dmax,
        }
    }
}

/// Command failure mapped to an exit code.
enum Failure {
    Usage(String),
    Math(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Math(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Math(_) => "check_failed",
            Failure::Usage(_) => "usage",
            Failure::Budget(_) => "budget",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Math(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(_) => Failure::Budget(e.to_string()),
            Error::Consistency(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Output document plus whether a mathematical check failed.
struct Outcome {
    doc: Value,
    /// Field holding the row table for CSV output.
    table: Option<&'static str>,
    failed: Option<String>,
    /// Preformatted output replacing the rendered document.
    raw: Option<String>,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome {
            doc,
            table: None,
            failed: None,
            raw: None,
        }
    }
}

fn semigroup(gens: &str) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::from_generators(&parse_integer_list(
        gens,
    )?)?)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn cmd_semigroup_info(gens: &str, shift: u64) -> Result<Outcome, Failure> {
    let raw: Vec<u64> = parse_integer_list(gens)?
        .iter()
        .map(|g| g + shift)
        .collect();
    let h = NumericalSemigroup::from_generators(&raw)?;
    let n = h.normalized();
    let (frobenius, symmetric, apery) = if h.gcd() == 1 {
        (
            json!(h.frobenius_number()?),
            json!(h.is_symmetric()?),
            json!(h.apery_set(h.multiplicity())?),
        )
    } else {
        (Value::Null, Value::Null, Value::Null)
    };
    Ok(Outcome::ok(json!({
        "input": raw,
        "shift": shift,
        "generators": h.generators(),
        "gcd": h.gcd(),
        "normalized": n.generators(),
        "mu_H": h.mu(),
        "multiplicity": h.multiplicity(),
        "width": h.width(),
        "interval": h.is_interval(),
        "frobenius": frobenius,
        "symmetric": symmetric,
        "apery_set": apery,
    })))
}

fn cmd_ideal(ctx: &Ctx, gens: &str) -> Result<Outcome, Failure> {
    let h = semigroup(gens)?;
    let ideal = toric_ideal_with(&h, &ctx.budget)?;
    let ring = Ring::short(h.mu());
    Ok(Outcome::ok(json!({
        "semigroup": h.generators(),
        "grading": h_grading(&h).weights(),
        "mu_I": ideal.len(),
        "I_gens": ideal.iter().map(|p| ring.format(p)).collect::<Vec<_>>(),
    })))
}

fn cmd_tangentcone(ctx: &Ctx, gens: &str, strict_lex: bool) -> Result<Outcome, Failure> {
    let h = semigroup(gens)?;
    let tc = tangent_cone(&h, &ctx.tc_opts(strict_lex))?;
    let mut doc = to_value(&tc.record());
    doc["hilbert_cross_check"] = json!("pass");
    Ok(Outcome::ok(doc))
}

fn cmd_betti(ctx: &Ctx, gens: &str, star: bool) -> Result<Outcome, Failure> {
    let h = semigroup(gens)?;
    let tc = tangent_cone(&h, &ctx.tc_opts(false))?;
    let res = if star {
        minimal_free_resolution(tc.star(), &Grading::standard(h.mu()), &ctx.budget)?
    } else {
        minimal_free_resolution(&tc.ideal, &h_grading(&h), &ctx.budget)?
    };
    Ok(Outcome::ok(json!({
        "semigroup": h.generators(),
        "module": if star { "S/I*" } else { "S/I" },
        "grading": if star { "standard" } else { "semigroup" },
        "betti": res.betti.total,
        "graded": res.betti.graded,
        "frame_ranks": res.frame_ranks,
        "composition_zero": res.composition_zero,
        "minimal": res.minimal,
    })))
}

fn cmd_family(ctx: &Ctx, args: &FamilyArgs) -> Result<Outcome, Failure> {
    if args.name == "list" {
        let fams: Vec<Value> = registry()
            .iter()
            .map(|f| {
                json!({
                    "name": f.name(),
                    "params": f.params().iter().map(|p| p.name).collect::<Vec<_>>().join(" "),
                    "description": f.description(),
                })
            })
            .collect();
        return Ok(Outcome {
            table: Some("families"),
            ..Outcome::ok(json!({ "families": fams }))
        });
    }
    let fam = family(&args.name)?;
    let given = [
        ("e", args.e),
        ("h", args.h),
        ("a", args.a),
        ("b", args.b),
        ("a1", args.a1),
        ("d", args.d),
        ("r", args.r),
    ];
    let mut params = Params::default();
    for (name, v) in given {
        if let Some(v) = v {
            if !fam.params().iter().any(|p| p.name == name) {
                return Err(Failure::Usage(format!(
                    "family {} takes no --{name}",
                    fam.name()
                )));
            }
            params.0.insert(name.into(), v);
        }
    }
    let exp = fam.build(&params)?;
    let report = validate(
        &exp,
        &ValidateOptions {
            budget: ctx.budget,
            betti: args.betti,
        },
    )?;
    let failed = (!report.pass).then(|| {
        let bad: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        format!("family checks failed: {}", bad.join(", "))
    });
    Ok(Outcome {
        table: Some("checks"),
        failed,
        ..Outcome::ok(to_value(&report))
    })
}

fn failed_verdicts(v: &std::collections::BTreeMap<String, Verdict>) -> Option<String> {
    let bad: Vec<&str> = v
        .iter()
        .filter(|(_, x)| **x == Verdict::Fail)
        .map(|(k, _)| k.as_str())
        .collect();
    (!bad.is_empty()).then(|| format!("failed verdicts: {}", bad.join(", ")))
}

fn cmd_scan(ctx: &Ctx, args: &ScanArgs) -> Result<Outcome, Failure> {
    let base = parse_integer_list(&args.base)?;
    if base.is_empty() || base.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage(format!(
            "--base {base:?} must be strictly increasing"
        )));
    }
    let kmin = args.kmin.unwrap_or_else(|| default_kmin(&base));
    let kmax = args.kmax.unwrap_or_else(|| default_kmax(&base));
    let opts = ScanOptions {
        budget: ctx.budget,
        betti: args.betti || ctx.scan_betti,
        auto_extend: args.auto_extend,
        max_kmax: None,
        progress: ctx.heartbeat(),
    };
    let report = explorer::shift_scan(&base, kmin, kmax, &opts)?;
    let failed = failed_verdicts(&report.verdicts);
    let raw = match (args.jsonl, ctx.format) {
        (true, _) => Some(explorer::scan_to_json_lines(&report)),
        (false, Format::Csv) => Some(explorer::scan_csv(&report)),
        _ => None,
    };
    Ok(Outcome {
        table: Some("rows"),
        failed,
        raw,
        ..Outcome::ok(to_value(&report))
    })
}

fn cmd_conjecture(ctx: &Ctx, cmd: &ConjectureCmd) -> Result<Outcome, Failure> {
    let mut params = ConjectureParams {
        tilde: TildeOptions {
            budget: ctx.budget,
            ..Default::default()
        },
        ..Default::default()
    };
    params.width.scan.budget = ctx.budget;
    params.width.scan.progress = ctx.heartbeat();
    params.width.shift_window_factor = ctx.window_factor;
    let name = match cmd {
        ConjectureCmd::Width {
            wmax,
            window_factor,
        } => {
            params.wmax = *wmax;
            if let Some(f) = window_factor {
                params.width.shift_window_factor = *f;
            }
            "width"
        }
        ConjectureCmd::Tilde {
            samples,
            random,
            max_r,
            max_gen,
        } => {
            if let Some(s) = samples {
                for part in s.split(';').filter(|p| !p.trim().is_empty()) {
                    params.samples.push(semigroup(part)?);
                }
            }
            if *random > 0 {
                if *max_r < 2 || *max_gen < 3 {
                    return Err(Failure::Usage(
                        "--max-r must be >= 2 and --max-gen >= 3".into(),
                    ));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                params.samples.extend(explorer::random_semigroups(
                    &mut rng, *random, *max_r, *max_gen,
                ));
            }
            if params.samples.is_empty() {
                return Err(Failure::Usage("give --samples or --random".into()));
            }
            "tilde"
        }
    };
    let check = conjecture_check(name, &params)?;
    let report = check.run()?;
    let failed = (report.verdict == Verdict::Fail)
        .then(|| format!("{} violations", report.violations.len()));
    let raw = (ctx.format == Format::Csv).then(|| explorer::conjecture_csv(&report));
    Ok(Outcome {
        table: Some("rows"),
        failed,
        raw,
        ..Outcome::ok(to_value(&report))
    })
}

fn build_ctx(g: &Global) -> Result<Ctx, Failure> {
    let path = g
        .config
        .clone()
        .or_else(|| std::env::var_os("TANCONE_CONFIG").map(PathBuf::from));
    let file = match path {
        Some(p) => config::load(&p).map_err(Failure::Usage)?,
        None => config::FileConfig::default(),
    };
    let format = match (g.format, file.format.as_deref()) {
        (Some(f), _) => f,
        (None, None) => Format::Text,
        (None, Some(s)) => <Format as clap::ValueEnum>::from_str(s, true)
            .map_err(|_| Failure::Usage(format!("config: unknown format {s:?}")))?,
    };
    let defaults = Budget::default();
    let budget = Budget {
        max_degree: g
            .max_degree
            .or(file.max_degree)
            .unwrap_or(defaults.max_degree),
        max_pairs: g.max_pairs.or(file.max_pairs).unwrap_or(defaults.max_pairs),
    };
    if budget.max_degree == 0 || budget.max_pairs == 0 {
        return Err(Failure::Usage("budgets must be positive".into()));
    }
    if let Some(jobs) = g.jobs.or(file.jobs) {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(Ctx {
        format,
        seed: g.seed.or(file.seed).unwrap_or(0),
        budget,
        dmax: g.dmax.or(file.dmax).unwrap_or(0),
        window_factor: file.scan_window_factor.unwrap_or(4),
        scan_betti: file.scan_betti.unwrap_or(false),
        quiet: g.quiet,
    })
}

fn run(cli: &Cli, ctx: &Ctx) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Semigroup {
            cmd: SemigroupCmd::Info { gens, shift },
        } => cmd_semigroup_info(gens, *shift),
        Command::Ideal { gens } => cmd_ideal(ctx, gens),
        Command::Tangentcone { gens, strict_lex } => cmd_tangentcone(ctx, gens, *strict_lex),
        Command::Betti { gens, star } => cmd_betti(ctx, gens, *star),
        Command::Family(args) => cmd_family(ctx, args),
        Command::Scan(args) => cmd_scan(ctx, args),
        Command::Conjecture { cmd } => cmd_conjecture(ctx, cmd),
    }
}

fn report_failure(format: Format, f: &Failure) {
    if format == Format::Json {
        let doc = output::tag(json!({ "error": { "kind": f.kind(), "message": f.message() } }));
        eprintln!("{doc}");
    } else {
        eprintln!("error: {}", f.message());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = match build_ctx(&cli.global) {
        Ok(c) => c,
        Err(f) => {
            report_failure(cli.global.format.unwrap_or(Format::Text), &f);
            return ExitCode::from(f.code());
        }
    };
    match run(&cli, &ctx) {
        Ok(out) => {
            let text = match (&out.raw, ctx.format) {
                (Some(raw), _) => raw.clone(),
                (None, Format::Json) => format!("{}\n", output::tag(out.doc)),
                (None, Format::Text) => output::text(&output::tag(out.doc)),
                (None, Format::Csv) => output::csv(&out.doc, out.table),
            };
            print!("{text}");
            match out.failed {
                Some(msg) => {
                    report_failure(ctx.format, &Failure::Math(msg));
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            report_failure(ctx.format, &f);
            ExitCode::from(f.code())
        }
    }
}
