use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pfgr::cache::{TableCache, CACHE_DIR_ENV};
use pfgr::dsl::{eval_dsl, Value};
use pfgr::grid::{run_grid, GridRequest};
use pfgr::pairs::{pair_report, CheckId};
use pfgr::render::{render_grid, render_pair, OutputFormat};
use pfgr::schubert::Engine;
use pfgr::{Diagnostic, Error};

/// Verification reports for Pfaffian–Grassmannian pairs.
#[derive(Parser)]
#[command(name = "pfgr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one pair (n, k).
    Pair {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        /// Directory for multiplication-table files.
        #[arg(long, env = CACHE_DIR_ENV)]
        cache_dir: Option<PathBuf>,
    },
    /// Run named checks over every valid pair in a rectangle.
    Grid {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for multiplication-table files.
        #[arg(long, env = CACHE_DIR_ENV)]
        cache_dir: Option<PathBuf>,
    },
    /// Evaluate an expression over classes in Z[L]; `==` prints true or false.
    Eval {
        expr: String,
    },
}

fn parse_checks(spec: &str) -> Result<Vec<CheckId>, Error> {
    if spec.trim() == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Pair {
            n,
            k,
            format,
            cache_dir,
        } => {
            if let Some(dir) = cache_dir {
                let cache = TableCache::new(dir);
                if n >= 4 {
                    for engine in Engine::ALL {
                        cache.warm(n, engine)?;
                    }
                }
            }
            let report = pair_report(n, k)?;
            print!("{}", render_pair(&report, format)?);
            Ok(report.exit_code())
        }
        Command::Grid {
            n_min,
            n_max,
            k_min,
            k_max,
            checks,
            format,
            jobs,
            cache_dir,
        } => {
            let parallelism = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |p| p.get())
            });
            let request = GridRequest {
                n_range: (n_min, n_max),
                k_range: (k_min, k_max),
                checks: parse_checks(&checks)?,
                output_format: format,
                parallelism,
                cache: cache_dir.map(TableCache::new),
            };
            let report = run_grid(&request)?;
            print!("{}", render_grid(&report, format)?);
            Ok(report.exit_code())
        }
        Command::Eval { expr } => {
            let value = eval_dsl(&expr)?;
            println!("{value}");
            Ok(match value {
                Value::Bool(false) => 1,
                _ => 0,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let diagnostic = Diagnostic::from(&e);
            if let Ok(line) = serde_json::to_string(&diagnostic) {
                eprintln!("{line}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
