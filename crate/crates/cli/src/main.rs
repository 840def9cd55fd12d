//! ccss: construct and certify nonbinary CSS quantum codes from
//! q-cyclotomic coset data.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 mathematical refusal
//! (bad field order, gcd obstruction, unsolvable system, code not
//! dual-containing), 3 catalogue reproduction mismatch.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use cyclotomic_css::congruence::{self, SolveOutcome, Theorem1Instance};
use cyclotomic_css::cosets::{all_cosets, DefiningSet};
use cyclotomic_css::css::css_construct;
use cyclotomic_css::cyclic::build_code;
use cyclotomic_css::field::field_for_order;
use cyclotomic_css::report::{self, ReportRow};
use cyclotomic_css::scan::{scan, ScanConfig};
use cyclotomic_css::table1::{all_as_documented, reproduce_table1};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Jsonl,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "ccss", version)]
#[command(about = "CSS quantum codes from cyclic codes with consecutive-run defining sets")]
struct Cli {
    /// Report format for row-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Codeword budget for exact distance enumeration.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,

    /// Write report data to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the q-cyclotomic coset partition of Z_n.
    Cosets { q: u64, n: u64 },

    /// Decide the consecutive-residue congruence system for the
    /// exponents a_1 .. a_r; prints the solution certificate.
    Solve {
        q: u64,
        n: u64,
        /// Exponent list a_1 .. a_r, one per congruence.
        #[arg(required = true)]
        a: Vec<u64>,
        /// Use the prime-length shortcut (n prime waives the
        /// per-exponent gcd checks).
        #[arg(long)]
        corollary: bool,
    },

    /// Build one quantum code from comma-separated coset
    /// representatives, e.g. `build 27 35 2,3`.
    Build {
        q: u64,
        n: u64,
        reps: String,
    },

    /// Sweep (q, n) pairs for dual-containing runs and report every
    /// code found.
    Scan {
        /// Comma-separated prime-power field orders.
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        /// Smallest length to try.
        #[arg(long)]
        n_min: u64,
        /// Largest length to try (inclusive).
        #[arg(long)]
        n_max: u64,
        /// Keep only defining sets whose longest run reaches this.
        #[arg(long, default_value_t = 2)]
        min_run: u64,
        /// 1 = single cosets, 2 = also unions of two cosets.
        #[arg(long, default_value_t = 1)]
        union_limit: u8,
    },

    /// Rebuild the built-in catalogue of fourteen codes and verify
    /// each against its recorded parameters.
    ReproduceTable1,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if cli.budget == 0 {
        eprintln!("error: --budget must be at least 1");
        return Ok(ExitCode::from(1));
    }
    match cli.command {
        Command::Cosets { q, n } => {
            let cosets = match all_cosets(q, n) {
                Ok(c) => c,
                Err(e) => return refuse(e),
            };
            emit(&report::render_cosets(&cosets), &cli.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { q, n, a, corollary } => {
            let outcome = if corollary {
                congruence::corollary1_check(q, n, &a)
            } else {
                congruence::theorem1_check(&Theorem1Instance::new(q, n, a))
            };
            match outcome {
                Ok(SolveOutcome::Certificate(cert)) => {
                    emit(&report::render_certificate(&cert), &cli.out)?;
                    Ok(ExitCode::SUCCESS)
                }
                Ok(SolveOutcome::Unsolvable { t, violations }) => {
                    eprintln!(
                        "unsolvable: t_j nonzero mod {n} at j = [{}] (t = [{}])",
                        join(&violations),
                        join(&t),
                    );
                    Ok(ExitCode::from(2))
                }
                Err(e) => refuse(e),
            }
        }
        Command::Build { q, n, reps } => {
            let reps = match parse_reps(&reps) {
                Ok(r) => r,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(ExitCode::from(1));
                }
            };
            let field = match field_for_order(q) {
                Ok(f) => f,
                Err(e) => return refuse(e),
            };
            let t = match DefiningSet::from_reps(q, n, &reps) {
                Ok(t) => t,
                Err(e) => return refuse(e),
            };
            let code = match build_code(&field, &t) {
                Ok(c) => c,
                Err(e) => return refuse(e),
            };
            let rec = match css_construct(&code, cli.budget) {
                Ok(r) => r,
                Err(e) => return refuse(e),
            };
            let row = ReportRow::from_record(
                &rec,
                t.elements().iter().copied().collect(),
                code.generator().coeffs().to_vec(),
                field.descriptor(),
            );
            emit(&render(&[row], cli.format), &cli.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { q, n_min, n_max, min_run, union_limit } => {
            if n_min > n_max {
                eprintln!("error: --n-min must not exceed --n-max");
                return Ok(ExitCode::from(1));
            }
            if union_limit != 1 && union_limit != 2 {
                eprintln!("error: --union-limit must be 1 or 2");
                return Ok(ExitCode::from(1));
            }
            if q.is_empty() {
                eprintln!("error: --q needs at least one field order");
                return Ok(ExitCode::from(1));
            }
            let cfg = ScanConfig::new(q, (n_min, n_max), min_run, cli.budget, union_limit);
            eprintln!(
                "scanning {} field order(s) x lengths {}..={}, union limit {}",
                cfg.q_values.len(),
                n_min,
                n_max,
                union_limit
            );
            let rows = match scan(&cfg) {
                Ok(rows) => rows,
                Err(e) => return refuse(e),
            };
            eprintln!("{} row(s)", rows.len());
            emit(&render(&rows, cli.format), &cli.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ReproduceTable1 => {
            let outcomes = reproduce_table1(cli.budget);
            for o in &outcomes {
                let status = if o.verified {
                    "ok"
                } else if o.as_documented {
                    "flagged (documented)"
                } else {
                    "MISMATCH"
                };
                let detail = if o.flags.is_empty() {
                    String::new()
                } else {
                    format!(" -- {}", o.flags.join("; "))
                };
                eprintln!(
                    "row {:2}: [[{}, {}, >= {}]]_{} {}{}",
                    o.index, o.row.n, o.claimed_k_q, o.claimed_d, o.row.q, status, detail
                );
            }
            let ok = all_as_documented(&outcomes);
            eprintln!(
                "{}",
                if ok {
                    "all rows verified or flagged as documented"
                } else {
                    "reproduction mismatch"
                }
            );
            let rows: Vec<ReportRow> = outcomes.into_iter().map(|o| o.row).collect();
            emit(&render(&rows, cli.format), &cli.out)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
    }
}

fn refuse(e: impl std::fmt::Display) -> anyhow::Result<ExitCode> {
    eprintln!("refused: {e}");
    Ok(ExitCode::from(2))
}

fn render(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Table => report::render_table(rows),
        Format::Jsonl => report::render_jsonl(rows),
        Format::Csv => report::render_csv(rows),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_reps(s: &str) -> Result<Vec<u64>, String> {
    let reps: Result<Vec<u64>, _> = s
        .split(',')
        .map(|part| part.trim().parse::<u64>())
        .collect();
    match reps {
        Ok(r) if !r.is_empty() => Ok(r),
        Ok(_) => Err("representative list is empty".to_string()),
        Err(_) => Err(format!("cannot parse representatives from {s:?}")),
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
