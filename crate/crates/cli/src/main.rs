use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lsurkit::check::cmd_check;
use lsurkit::config::{parse_n_list, Family, Grid, ScanOverrides};
use lsurkit::oracle_cmd::cmd_oracle;
use lsurkit::scan::cmd_scan;
use lsurkit::CliResult;

const EXIT_VIOLATION: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "lsurkit",
    version,
    about = "LSUR entanglement tests for symmetric multiqubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a state family over a parameter grid and write CSV.
    Scan {
        /// werner, ku or wclass.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        /// Comma-separated half sizes n = N/2.
        #[arg(long = "n")]
        n_list: Option<String>,
        /// start:stop:points; bounds may use pi, pi/k or k*pi.
        #[arg(long, value_parser = parse_grid)]
        grid: Option<Grid>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Flat key = value file; flags take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Report the LSUR verdict for a symmetric state stored as JSON.
    Check {
        state: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the closed forms against the tensor-space oracle.
    Oracle {
        #[arg(long = "n-qubits")]
        n_qubits: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: lsurkit::CliError| e.to_string())
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.parse().map_err(|e: lsurkit::CliError| e.to_string())
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Scan {
            family,
            n_list,
            grid,
            out,
            seed,
            config,
        } => {
            let base = match &config {
                Some(path) => ScanOverrides::load(path)?,
                None => ScanOverrides::default(),
            };
            let flags = ScanOverrides {
                family,
                n_list: n_list.as_deref().map(parse_n_list).transpose()?,
                grid,
                out,
                seed,
            };
            let cfg = base.merged(flags).resolve()?;
            let rows = cmd_scan(&cfg)?;
            let violated = rows.iter().filter(|r| r.violated).count();
            println!(
                "wrote {} rows to {} ({violated} violating)",
                rows.len(),
                cfg.out.display()
            );
            Ok(0)
        }
        Command::Check { state, json } => {
            let report = cmd_check(&state)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.violated { EXIT_VIOLATION } else { 0 })
        }
        Command::Oracle {
            n_qubits,
            trials,
            seed,
        } => {
            let report = cmd_oracle(n_qubits, trials, seed)?;
            print!("{}", report.to_text());
            Ok(if report.passed { 0 } else { EXIT_VIOLATION })
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
