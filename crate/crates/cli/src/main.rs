mod error;
mod ghw;
mod table;
mod variety;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rmghw::evalcode::{build_code, verify_veronese_theorem};
use serde::Serialize;

use crate::error::CliError;
use crate::ghw::MethodArg;
use crate::table::Fixture;
use crate::variety::VarietyArgs;

#[derive(Parser)]
#[command(name = "rmghw", version, about = "Reed-Muller-type evaluation codes and their generalized Hamming weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Points,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Length, dimension and generalized Hamming weights for a range of degrees.
    Table {
        /// One of the built-in example tables.
        #[arg(value_enum, conflicts_with_all = ["q", "s", "kind", "factors", "k"])]
        fixture: Option<Fixture>,
        #[command(flatten)]
        variety: VarietyArgs,
        /// Largest degree (default: the regularity index).
        #[arg(long)]
        dmax: Option<u32>,
        /// Largest rank r of delta_r (default: 3 for the F5 fixtures, else 1).
        #[arg(long)]
        rmax: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Compare a fixture with its published values; exit 2 on mismatch.
        #[arg(long, requires = "fixture")]
        check: bool,
    },
    /// One generalized Hamming weight delta_r of C_X(d).
    Ghw {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Check C_X(kd) against C_{rho_k(X)}(d) and the same for the duals.
    VerifyVeronese {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        d: u32,
    },
    /// Print the point set or the generator matrix of C_X(d).
    Build {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum)]
        emit: Emit,
    },
}

#[derive(Serialize)]
struct VeroneseOutput {
    schema: u32,
    q: u32,
    s: usize,
    kind: String,
    k: u32,
    d: u32,
    m: usize,
    kappa_base: usize,
    kappa_veronese: usize,
    lengths_equal: bool,
    dims_equal: bool,
    primal_equivalence: bool,
    dual_equivalence: bool,
    passed: bool,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Table { fixture, variety, dmax, rmax, format, check } => {
            let (v, dmax, rmax) = match fixture {
                Some(f) => {
                    let expected = f.expected();
                    let rmax = rmax.unwrap_or(expected.deltas.len());
                    (f.variety()?, dmax.or(Some(expected.h.len() as u32)), rmax)
                }
                None => (variety.build()?, dmax, rmax.unwrap_or(1)),
            };
            let t = table::compute(&v, dmax, rmax)?;
            let out = match format {
                Format::Json => json(&t),
                Format::Csv => table::to_csv(&t),
                Format::Pretty => table::to_pretty(&t),
            };
            if let (true, Some(f)) = (check, fixture) {
                let problems = table::check(&t, &f.expected());
                if !problems.is_empty() {
                    print!("{out}");
                    return Err(CliError::Mismatch(problems.join("; ")));
                }
            }
            Ok(out)
        }
        Command::Ghw { variety, d, r, method } => {
            let v = variety.build()?;
            Ok(json(&ghw::run(&v, d, r, method)?))
        }
        Command::VerifyVeronese { variety, d } => {
            let v = variety.build()?;
            let rep = verify_veronese_theorem(&v.base, v.k, d)?;
            let out = VeroneseOutput {
                schema: 1,
                q: v.field.q(),
                s: v.base.s(),
                kind: v.base.kind().tag(),
                k: v.k,
                d,
                m: rep.length,
                kappa_base: rep.dim_base,
                kappa_veronese: rep.dim_veronese,
                lengths_equal: rep.lengths_equal,
                dims_equal: rep.dims_equal,
                primal_equivalence: rep.primal_equivalence,
                dual_equivalence: rep.dual_equivalence,
                passed: rep.passed(),
            };
            if !out.passed {
                print!("{}", json(&out));
                return Err(CliError::Mismatch("Veronese equivalence failed".into()));
            }
            Ok(json(&out))
        }
        Command::Build { variety, d, emit } => {
            let v = variety.build()?;
            match emit {
                Emit::Points => Ok(v.points.to_text()),
                Emit::Matrix => {
                    let d = d.ok_or_else(|| CliError::BadArgs("--emit matrix needs --d".into()))?;
                    Ok(build_code(&v.points, d)?.to_text())
                }
            }
        }
    }
}

/// Caps the global pool at `RMGHW_THREADS` threads when set.
fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("RMGHW_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::BadArgs(format!("RMGHW_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::BadArgs(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
