use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lfw_core::catalog;
use lfw_core::oracle::{calderon_sum_at, frame_sum, Sampler};
use lfw_core::setfile::{parse_setfile, SetFile};
use lfw_core::verify::{
    check_dim_integral_identity, check_mra, check_multiwavelet_set, check_orthonormal_system,
    check_parseval_multiframelet_set, check_parseval_scaling_set, check_scaling_set,
    check_superwavelet_equivalence, decomposability_lower_bound, dilation_partition_check,
    dimension_function, FamilyBounds,
};
use lfw_core::{ClopenSet, Error, Field};
use serde_json::json;

mod report;

use report::{extended, Report};

#[derive(Parser)]
#[command(
    name = "lfw",
    version,
    about = "Exact wavelet and framelet set checks over F_q((t))"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one of the set-level decision procedures.
    #[command(subcommand)]
    Verify(Verify),
    /// Compute the dimension function of a family on D.
    Dimension {
        #[command(flatten)]
        family: FamilyArgs,
        /// Print every piece of the step function.
        #[arg(long)]
        emit_steps: bool,
    },
    /// Compare two families with the super-wavelet equivalence test.
    Equiv {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        left: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        right: Vec<String>,
    },
    /// Necessary-condition bound on decomposability of a single set.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Fourier-side cross-checks.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Write a named construction as a set file.
    Catalog {
        name: String,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        c: u32,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    file: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    sets: Vec<String>,
}

#[derive(Subcommand)]
enum Verify {
    /// Parseval multiframelet set.
    FrameletSet(FamilyArgs),
    /// Multiwavelet set.
    WaveletSet(FamilyArgs),
    /// Orthonormality of the affine system.
    Orthonormal(FamilyArgs),
    /// Dilation tiling of K.
    Tiling(FamilyArgs),
    /// Scaling set, or Parseval scaling set with --parseval.
    ScalingSet {
        file: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long)]
        parseval: bool,
    },
    /// MRA multiwavelet set.
    Mra {
        #[command(flatten)]
        family: FamilyArgs,
        /// Allow families whose size is not q - 1.
        #[arg(long)]
        force_order: bool,
    },
}

#[derive(Subcommand)]
enum Oracle {
    /// Frame sums of random test functions against ||g||^2.
    FrameSum {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Calderón sums at random points.
    Calderon {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Usage and parse failures, reported with exit code 2.
struct Usage(String);

fn load(path: &Path) -> Result<SetFile, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let parsed = parse_setfile(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.file)
}

fn family(file: &SetFile, names: &[String]) -> Result<Vec<ClopenSet>, Usage> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    file.family(&refs).map_err(Usage)
}

fn load_family(args: &FamilyArgs) -> Result<(SetFile, Vec<ClopenSet>), Usage> {
    let file = load(&args.file)?;
    let fam = family(&file, &args.sets)?;
    Ok((file, fam))
}

/// Library errors: refusals become exit 3, malformed input exit 2.
fn absorb_error(report: &mut Report, e: Error) -> Result<(), Usage> {
    match e {
        Error::Precondition(_) | Error::Domain(_) | Error::Overflow(_) => {
            report.refusal = Some(e.to_string());
            Ok(())
        }
        Error::ParamsMismatch | Error::InvalidParams(_) => Err(Usage(e.to_string())),
    }
}

fn run(cli: &Cli) -> Result<Report, Usage> {
    match &cli.command {
        Command::Verify(v) => run_verify(v),
        Command::Dimension {
            family: args,
            emit_steps,
        } => {
            let (file, fam) = load_family(args)?;
            let mut r = Report::new("dimension");
            r.field = Some(file.field().clone());
            r.sets = args.sets.clone();
            match dimension_function(&fam).and_then(|d| Ok((d, check_dim_integral_identity(&fam)?))) {
                Ok((d, v)) => {
                    let ones = d.pieces().iter().filter(|(_, n)| *n == 1).count();
                    r.extra.insert(
                        "dimension_summary".into(),
                        json!({ "pieces": d.pieces().len(), "pieces_equal_to_one": ones,
                                "integral": report::rational(&d.integral()) }),
                    );
                    if *emit_steps {
                        r.extra.insert(
                            "dimension_function".into(),
                            report::quantity(&lfw_core::verify::Quantity::Step(d)),
                        );
                    }
                    r.verdict = Some(v);
                }
                Err(e) => absorb_error(&mut r, e)?,
            }
            Ok(r)
        }
        Command::Equiv { file, left, right } => {
            let f = load(file)?;
            let a = family(&f, left)?;
            let b = family(&f, right)?;
            let mut r = Report::new("equiv");
            r.field = Some(f.field().clone());
            r.sets = left.iter().chain(right).cloned().collect();
            match check_superwavelet_equivalence(&a, &b) {
                Ok(v) => r.verdict = Some(v),
                Err(e) => absorb_error(&mut r, e)?,
            }
            Ok(r)
        }
        Command::Decompose { file, set } => {
            let f = load(file)?;
            let s = family(&f, std::slice::from_ref(set))?.remove(0);
            let mut r = Report::new("decompose");
            r.field = Some(f.field().clone());
            r.sets = vec![set.clone()];
            match decomposability_lower_bound(&s) {
                Ok(d) => {
                    r.extra.insert(
                        "decomposability".into(),
                        json!({ "value": extended(&d.value), "ring_value": extended(&d.ring_value),
                                "m_max": d.m_max.to_string(),
                                "note": "necessary condition only" }),
                    );
                }
                Err(e) => absorb_error(&mut r, e)?,
            }
            Ok(r)
        }
        Command::Oracle(o) => run_oracle(o),
        Command::Catalog { name, p, c, output } => {
            let field = Field::with_default_modulus(*p, *c).map_err(|e| Usage(e.to_string()))?;
            let entry = catalog::entry(name, &field).map_err(|e| Usage(e.to_string()))?;
            let text = entry.to_setfile().to_string();
            let mut r = Report::new("catalog");
            r.field = Some(field);
            r.sets = entry.set_names();
            let expected: serde_json::Map<String, serde_json::Value> = entry
                .expected
                .iter()
                .map(|(k, v)| (k.clone(), json!(if *v { "PASS" } else { "FAIL" })))
                .collect();
            r.extra
                .insert("expected".into(), serde_json::Value::Object(expected));
            match output {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
                    r.extra
                        .insert("written".into(), json!(path.display().to_string()));
                }
                None => {
                    r.extra.insert("setfile".into(), json!(text));
                }
            }
            Ok(r)
        }
    }
}

fn run_verify(v: &Verify) -> Result<Report, Usage> {
    let (args, command) = match v {
        Verify::FrameletSet(a) => (a, "verify framelet-set"),
        Verify::WaveletSet(a) => (a, "verify wavelet-set"),
        Verify::Orthonormal(a) => (a, "verify orthonormal"),
        Verify::Tiling(a) => (a, "verify tiling"),
        Verify::Mra { family, .. } => (family, "verify mra"),
        Verify::ScalingSet { file, set, parseval } => {
            let f = load(file)?;
            let s = family(&f, std::slice::from_ref(set))?.remove(0);
            let mut r = Report::new("verify scaling-set");
            r.field = Some(f.field().clone());
            r.sets = vec![set.clone()];
            r.verdict = Some(if *parseval {
                check_parseval_scaling_set(&s)
            } else {
                check_scaling_set(&s)
            });
            return Ok(r);
        }
    };
    let (file, fam) = load_family(args)?;
    let mut r = Report::new(command);
    r.field = Some(file.field().clone());
    r.sets = args.sets.clone();
    let result = match v {
        Verify::FrameletSet(_) => check_parseval_multiframelet_set(&fam),
        Verify::WaveletSet(_) => check_multiwavelet_set(&fam),
        Verify::Orthonormal(_) => check_orthonormal_system(&fam),
        Verify::Tiling(_) => Ok(dilation_partition_check(&fam)),
        Verify::Mra { force_order, .. } => check_mra(&fam, *force_order),
        Verify::ScalingSet { .. } => unreachable!("handled above"),
    };
    match result {
        Ok(verdict) => r.verdict = Some(verdict),
        Err(e) => absorb_error(&mut r, e)?,
    }
    Ok(r)
}

fn run_oracle(o: &Oracle) -> Result<Report, Usage> {
    match o {
        Oracle::FrameSum {
            family: args,
            trials,
            seed,
            tol,
        } => {
            let (file, fam) = load_family(args)?;
            let mut r = Report::new("oracle frame-sum");
            r.field = Some(file.field().clone());
            r.sets = args.sets.clone();
            let mut sampler = Sampler::new(file.field(), *seed);
            let mut worst = 0.0f64;
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            let mut failures = 0usize;
            for _ in 0..*trials {
                let g = sampler.frequency_function();
                let norm = g.norm_sqr();
                let sum = match frame_sum(&fam, &g) {
                    Ok(s) => s.value,
                    Err(e) => {
                        absorb_error(&mut r, e)?;
                        return Ok(r);
                    }
                };
                if norm == 0.0 {
                    continue;
                }
                let ratio = sum / norm;
                lo = lo.min(ratio);
                hi = hi.max(ratio);
                let rel = (sum - norm).abs() / norm;
                worst = worst.max(rel);
                if rel > *tol {
                    failures += 1;
                }
            }
            let parseval = check_parseval_multiframelet_set(&fam)
                .map(|v| v.is_pass())
                .unwrap_or(false);
            r.oracle = Some(json!({
                "trials": trials, "seed": seed, "tolerance": tol,
                "max_relative_deviation": worst, "min_ratio": lo, "max_ratio": hi,
                "failures": failures, "verifier_parseval": parseval,
            }));
            Ok(finish_oracle(r, failures == 0))
        }
        Oracle::Calderon {
            family: args,
            samples,
            seed,
        } => {
            let (file, fam) = load_family(args)?;
            let mut r = Report::new("oracle calderon");
            r.field = Some(file.field().clone());
            r.sets = args.sets.clone();
            let mut sampler = Sampler::new(file.field(), *seed);
            let mut off = 0usize;
            let mut first_bad = None;
            for _ in 0..*samples {
                let xi = sampler.point(-3, 3, 3);
                match calderon_sum_at(&fam, &xi) {
                    Ok(1) => {}
                    Ok(n) => {
                        off += 1;
                        first_bad.get_or_insert((xi.to_string(), n));
                    }
                    Err(e) => {
                        absorb_error(&mut r, e)?;
                        return Ok(r);
                    }
                }
            }
            let bounds = FamilyBounds::of(&fam).map(|b| json!({ "R": b.r, "S": b.s }));
            r.oracle = Some(json!({
                "samples": samples, "seed": seed, "points_not_equal_to_one": off,
                "first_counterexample": first_bad.map(|(x, n)| json!({ "xi": x, "sum": n })),
                "bounds": bounds,
            }));
            Ok(finish_oracle(r, off == 0))
        }
    }
}

/// Oracle commands carry no verdict; their status comes from the
/// numerical comparison.
fn finish_oracle(mut r: Report, ok: bool) -> Report {
    r.extra
        .insert("oracle_status".into(), json!(if ok { "PASS" } else { "FAIL" }));
    r.oracle_failed = !ok;
    r
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("json")
                ),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
