//! Command-line front end: construct one expansion, sweep the identity
//! checks, or export coefficient tables.
//!
//! Exit codes: 0 success / all checks pass, 1 a mathematical check failed,
//! 2 usage error. Data goes to stdout, diagnostics to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_rational::BigRational;

use jackpoly::output::{jack_csv, jack_json, jack_plain, parse_alpha};
use jackpoly::table::{coefficient_table, table_to_csv, table_to_json};
use jackpoly::verify::{run_verify, Check};
use jackpoly::{rodrigues_jack, Partition};

#[derive(Parser)]
#[command(
    name = "jackpoly",
    version,
    about = "Exact Jack polynomial expansions, identity checks, and coefficient tables"
)]
struct Cli {
    /// Worker threads for bulk commands
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,

    /// Evaluate printed coefficients at an exact rational alpha, e.g. 1/2
    #[arg(long, global = true, value_name = "P/Q")]
    alpha: Option<String>,

    /// Output format: plain|json|csv for compute, csv|json for table
    #[arg(long, global = true, value_name = "FORMAT")]
    format: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one polynomial and print its monomial-basis expansion
    Compute {
        /// Partition as comma-separated parts, e.g. 2,1 (0 for the empty one)
        #[arg(long)]
        partition: String,
        /// Number of variables; defaults to the partition weight
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run identity checks over all partitions up to a weight bound
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        max_weight: u32,
        /// Comma-separated subset of checks; all of them when omitted
        #[arg(long, value_name = "LIST")]
        checks: Option<String>,
    },
    /// Export every (lambda, mu) coefficient up to a weight bound
    Table {
        #[arg(long)]
        max_weight: u32,
        /// Write to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let alpha = match cli.alpha.as_deref().map(parse_alpha).transpose() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let outcome = match cli.command {
        Command::Compute { partition, n } => {
            cmd_compute(&partition, n, cli.format.as_deref(), alpha.as_ref())
        }
        // verify reports symbolically and in a fixed format; --alpha and
        // --format are accepted but have no effect
        Command::Verify { max_weight, checks } => {
            cmd_verify(max_weight, checks.as_deref(), cli.jobs as usize)
        }
        Command::Table { max_weight, out } => cmd_table(
            max_weight,
            cli.format.as_deref(),
            alpha.as_ref(),
            out.as_deref(),
        ),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_compute(
    partition: &str,
    n: Option<usize>,
    format: Option<&str>,
    alpha: Option<&BigRational>,
) -> Result<ExitCode, Failure> {
    let lambda = Partition::from_str(partition).map_err(|e| usage(e.to_string()))?;
    let n = n.unwrap_or_else(|| (lambda.weight() as usize).max(1));
    if lambda.len() > n {
        return Err(usage(format!(
            "partition has {} parts but n = {}",
            lambda.len(),
            n
        )));
    }
    let result = rodrigues_jack(&lambda, n).map_err(|e| usage(e.to_string()))?;
    let text = match format.unwrap_or("plain") {
        "plain" => jack_plain(&result, alpha),
        "json" => jack_json(&result, alpha).map(|v| pretty(&v)),
        "csv" => jack_csv(&result, alpha),
        other => return Err(usage(format!("unknown format: {other}"))),
    }
    .map_err(|e| usage(e.to_string()))?;
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(max_weight: u32, checks: Option<&str>, jobs: usize) -> Result<ExitCode, Failure> {
    let checks: Vec<Check> = match checks {
        None => Check::ALL.to_vec(),
        Some(list) => {
            let mut selected = Vec::new();
            for name in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let check =
                    Check::parse(name).ok_or_else(|| usage(format!("unknown check: {name}")))?;
                if !selected.contains(&check) {
                    selected.push(check);
                }
            }
            if selected.is_empty() {
                return Err(usage("no checks selected"));
            }
            selected
        }
    };
    // construction errors surface counterexamples (for example an expansion
    // coefficient that fails to clear to an integer polynomial)
    let summary = run_verify(max_weight, &checks, jobs).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    print!("{}", summary.render());
    Ok(if summary.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_table(
    max_weight: u32,
    format: Option<&str>,
    alpha: Option<&BigRational>,
    out: Option<&Path>,
) -> Result<ExitCode, Failure> {
    let rows = coefficient_table(max_weight).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    let text = match format.unwrap_or("csv") {
        "csv" => table_to_csv(&rows, alpha).map_err(|e| usage(e.to_string()))?,
        "json" => {
            let v = table_to_json(&rows, alpha).map_err(|e| usage(e.to_string()))?;
            pretty(&v)
        }
        other => return Err(usage(format!("unknown format: {other}"))),
    };
    match out {
        None => print!("{text}"),
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}
