use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use critcyc::coloring::{is_k_critical_with, DEFAULT_COLOR_BUDGET};
use critcyc::decomposition::{standard_tree_decomposition, validate_decomposition, ValidationReport};
use critcyc::extraction::{long_cycle_critical_with, RootedDecomposition};
use critcyc::harness::{parse_family, run_bounds_suite, verify_coro2, BoundReport};
use critcyc::{dimacs, CycleWitness, Error, Graph};
use serde::Serialize;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "critcyc", version, about = "Long cycles in colour-critical graphs")]
struct Cli {
    /// Node-expansion budget for the exact searches.
    #[arg(long, global = true, default_value_t = DEFAULT_COLOR_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write results into this directory instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family as DIMACS files.
    Gen {
        #[arg(long)]
        family: String,
    },
    /// Decide k-criticality with colouring certificates.
    CheckCritical {
        /// DIMACS file, or `-` for stdin.
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Standard tree-decomposition with its validation report.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Extract a long cycle from a k-critical graph.
    FindCycle {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Evaluate every bound on the instances of a family.
    VerifyBounds {
        #[arg(long)]
        family: String,
    },
    /// Long cycle followed by a long odd cycle.
    VerifyCoro2 {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(dimacs::parse_with_labels(&text)?)
}

fn emit(out: &Option<PathBuf>, name: &str, body: &str) -> anyhow::Result<()> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join(name), body)?;
        }
        None => io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".into(), |v| v.to_string())
}

fn bounds_csv(reports: &[BoundReport]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "instance",
        "n",
        "k",
        "m",
        "circumference",
        "longest_path",
        "thm1_lower",
        "dirac_lower",
        "gallai_upper",
        "status",
    ])?;
    for r in reports {
        w.write_record([
            r.instance.clone(),
            r.n.to_string(),
            r.k.to_string(),
            r.m.to_string(),
            r.circumference.to_string(),
            r.longest_path.to_string(),
            format!("{:.6}", r.thm1_lower),
            r.dirac_lower.to_string(),
            opt(r.gallai_upper.map(|v| format!("{v:.3}"))),
            r.status.clone(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[derive(Serialize)]
struct FoundCycle<'a> {
    cycle: &'a [usize],
    length: usize,
    claimed_bound: usize,
    trace: &'a [String],
}

#[derive(Serialize)]
struct Decomposed {
    decomposition: RootedDecomposition,
    validation: ValidationReport,
}

fn seed() -> anyhow::Result<Option<u64>> {
    match std::env::var("CRITCYC_SEED") {
        // Every routine is deterministic; the seed is accepted and checked only.
        Ok(s) => Ok(Some(s.trim().parse().context("CRITCYC_SEED must be an unsigned integer")?)),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    seed()?;
    let budget = cli.budget;
    match cli.cmd {
        Cmd::Gen { family } => {
            let instances = parse_family(&family)?;
            for inst in &instances {
                let text = format!("c instance {} k {}\n{}", inst.id, inst.k, dimacs::write(&inst.graph));
                match &cli.out {
                    Some(_) => emit(&cli.out, &format!("{}.dimacs", inst.id), &text)?,
                    None => emit(&None, "", &text)?,
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CheckCritical { input, k } => {
            let g = read_graph(&input)?;
            let report = is_k_critical_with(&g, k, budget)?;
            emit(&cli.out, "critical.json", &json(&report)?)?;
            Ok(if report.is_critical { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::Decompose { input, k } => {
            let g = read_graph(&input)?;
            let dec = standard_tree_decomposition(&g)?;
            let validation = validate_decomposition(&g, &dec, k)?;
            let decomposition = RootedDecomposition::new_with(&g, &dec, k, budget)?;
            emit(&cli.out, "decomposition.json", &json(&Decomposed { decomposition, validation })?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::FindCycle { input, k } => {
            let g = read_graph(&input)?;
            let c: CycleWitness = match long_cycle_critical_with(&g, k, budget) {
                Ok(c) => c,
                Err(e @ Error::NotCritical(_)) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
                Err(e @ Error::BudgetExceeded { .. }) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(3));
                }
                Err(e) => return Err(e.into()),
            };
            let found = FoundCycle { cycle: &c.vertices, length: c.length(), claimed_bound: c.claimed_length, trace: &c.trace };
            emit(&cli.out, "cycle.json", &json(&found)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyBounds { family } => {
            let reports = run_bounds_suite(&family, budget)?;
            match cli.format {
                Format::Json => emit(&cli.out, "bounds.json", &json(&reports)?)?,
                Format::Csv => emit(&cli.out, "bounds.csv", &bounds_csv(&reports)?)?,
            }
            let failed: Vec<&BoundReport> = reports.iter().filter(|r| !r.passed()).collect();
            for r in &failed {
                eprintln!("FAIL {}\n{}", r.instance, serde_json::to_string_pretty(r)?);
            }
            Ok(if failed.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::VerifyCoro2 { input, k } => {
            let g = read_graph(&input)?;
            let report = verify_coro2(&g, k, budget)?;
            emit(&cli.out, "coro2.json", &json(&report)?)?;
            if !report.passed() {
                bail!("odd cycle of length {} misses its bound", report.odd_cycle.length());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
