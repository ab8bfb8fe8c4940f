use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wsd_core::closure::{run_closure, FieldChoice, Scalars};
use wsd_core::hw_bases::HwKind;
use wsd_core::suites::{self, Context, SuiteReport};
use wsd_core::{Canonical, PrimeField};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "wsd",
    version,
    about = "Verification suites for the operator algebra of a rank three weakly self-dual structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Prime for modular runs; repeat or separate by commas. Must be 1 mod 4.
    #[arg(long = "prime", global = true, env = "WSD_PRIMES", value_delimiter = ',', value_parser = parse_prime)]
    primes: Vec<u64>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one suite, or `all` in dependency order.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        /// Double one Clifford generator (E<i><j> or I<i><j>) before running.
        #[arg(long, hide = true)]
        corrupt_operator: Option<String>,
    },
    /// Compute the generated algebra on some of the highest weight blocks.
    Closure {
        #[arg(long, value_enum, default_value_t = Block::All)]
        block: Block,
        #[arg(long, value_enum, default_value_t = Field::Modular)]
        field: Field,
        /// Real coordinates (default) or complexified ones.
        #[arg(long)]
        complex: bool,
    },
    /// Run every suite; same as `verify all`.
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Block {
    Hw0,
    Hw1,
    Hw2,
    Hw3,
    All,
}

impl Block {
    fn kinds(self) -> Vec<HwKind> {
        match self {
            Block::Hw0 => vec![HwKind::HW0],
            Block::Hw1 => vec![HwKind::HW1],
            Block::Hw2 => vec![HwKind::HW2],
            Block::Hw3 => vec![HwKind::HW3],
            Block::All => HwKind::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Field {
    Exact,
    Modular,
}

fn parse_prime(s: &str) -> std::result::Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(p)
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&str> = suites::SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

/// Flat record used by the text and CSV renderings.
struct Row {
    group: String,
    name: String,
    passed: bool,
    detail: String,
}

struct Outcome {
    command: String,
    passed: bool,
    results: Value,
    rows: Vec<Row>,
}

fn rows_of(reports: &[SuiteReport]) -> Vec<Row> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(|c| Row {
                group: r.suite.clone(),
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
        })
        .collect()
}

fn verify(selector: &str, primes: Vec<u64>, corrupt: Option<&str>) -> Result<Outcome> {
    let corrupted;
    let canonical: &Canonical = match corrupt {
        Some(name) => {
            corrupted = suites::corrupted_canonical(name)?;
            &corrupted
        }
        None => Canonical::get(),
    };
    let ctx = Context { canonical, primes };
    let mut reports = Vec::new();
    for name in suites::expand_selector(selector)? {
        reports.push(suites::run_suite(name, &ctx)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok(Outcome {
        command: format!("verify {selector}"),
        passed,
        results: json!({ "passed": passed, "suites": reports }),
        rows: rows_of(&reports),
    })
}

fn closure(block: Block, field: Field, complex: bool, primes: Vec<u64>) -> Result<Outcome> {
    let kinds = block.kinds();
    let scalars = if complex {
        Scalars::Complex
    } else {
        Scalars::Real
    };
    let gens = &Canonical::get().generators;
    let expected = suites::expected_dimension(&kinds);
    let mut runs = Vec::new();
    let mut rows = Vec::new();
    match field {
        Field::Exact => {
            runs.push((
                run_closure(FieldChoice::Exact, scalars, gens, &kinds)?,
                Vec::new(),
            ));
        }
        Field::Modular => {
            for &p in &primes {
                runs.push(suites::closure_with_retry(p, scalars, gens, &kinds)?);
            }
        }
    }
    for (s, skipped) in &runs {
        let tag = match s.prime {
            Some(p) => format!("mod {p}"),
            None => "exact".to_string(),
        };
        if !skipped.is_empty() {
            rows.push(Row {
                group: tag.clone(),
                name: "pivot loss".into(),
                passed: true,
                detail: format!("skipped {skipped:?}"),
            });
        }
        let ok = expected.is_none_or(|d| d == s.dimension);
        let detail = match expected {
            Some(d) if d != s.dimension => format!("got {}, expected {d}", s.dimension),
            _ => s.dimension.to_string(),
        };
        rows.push(Row {
            group: tag.clone(),
            name: "dimension".into(),
            passed: ok,
            detail,
        });
        rows.push(Row {
            group: tag.clone(),
            name: "block dimensions".into(),
            passed: true,
            detail: format!("{:?}", s.block_dimensions),
        });
        rows.push(Row {
            group: tag.clone(),
            name: "even|odd".into(),
            passed: true,
            detail: format!("{}|{}", s.even_dimension, s.odd_dimension),
        });
        rows.push(Row {
            group: tag,
            name: "basis hash".into(),
            passed: true,
            detail: s.basis_hash.clone(),
        });
    }
    if runs.len() > 1 {
        let agree = runs
            .windows(2)
            .all(|w| w[0].0.dimension == w[1].0.dimension);
        rows.push(Row {
            group: "closure".into(),
            name: "primes agree".into(),
            passed: agree,
            detail: String::new(),
        });
    }
    let passed = rows.iter().all(|r| r.passed);
    let summaries: Vec<_> = runs
        .iter()
        .map(|(s, skipped)| json!({ "summary": s, "skipped_primes": skipped }))
        .collect();
    Ok(Outcome {
        command: format!(
            "closure --block {} --field {}",
            format!("{block:?}").to_lowercase(),
            format!("{field:?}").to_lowercase()
        ),
        passed,
        results: json!({ "passed": passed, "expected_dimension": expected, "runs": summaries }),
        rows,
    })
}

fn render(outcome: &Outcome, format: Format, wall: f64, threads: usize) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": outcome.command,
                "results": outcome.results,
                "meta": {
                    "timestamp": chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
                    "wall_time_seconds": wall,
                    "threads": threads,
                },
            });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["group", "check", "passed", "detail"])?;
            for r in &outcome.rows {
                w.write_record([
                    r.group.as_str(),
                    r.name.as_str(),
                    if r.passed { "true" } else { "false" },
                    r.detail.as_str(),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &outcome.rows {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                if r.detail.is_empty() {
                    s += &format!("[{tag}] {}: {}\n", r.group, r.name);
                } else {
                    s += &format!("[{tag}] {}: {} ({})\n", r.group, r.name, r.detail);
                }
            }
            let failed = outcome.rows.iter().filter(|r| !r.passed).count();
            s += &format!(
                "{} checks, {failed} failed, {wall:.2}s\n",
                outcome.rows.len()
            );
            s
        }
    })
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temporary file in {}", dir.display()))?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    let primes = if cli.primes.is_empty() {
        wsd_core::exact_arith::DEFAULT_PRIMES.to_vec()
    } else {
        cli.primes.clone()
    };
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Verify {
            suite,
            corrupt_operator,
        } => verify(suite, primes, corrupt_operator.as_deref())?,
        Command::Report => verify("all", primes, None)?,
        Command::Closure {
            block,
            field,
            complex,
        } => closure(*block, *field, *complex, primes)?,
    };
    let text = render(
        &outcome,
        cli.format,
        start.elapsed().as_secs_f64(),
        rayon::current_num_threads(),
    )?;
    match &cli.out {
        Some(path) => {
            write_atomic(path, &text)?;
            let status = if outcome.passed { "passed" } else { "FAILED" };
            eprintln!(
                "{}: {status}, report written to {}",
                outcome.command,
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
