//! `helly`: exact homology, Betti tables and Helly-type checks from the
//! command line.
//!
//! Exit status is 0 on success or pass, 1 on a failed check or a computation
//! that could not finish, 2 when a degree cap leaves the answer open and 3 on
//! malformed input. `--json` prints one JSON object with `"schema": 1`.

mod commands;
mod instances;
mod output;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use helly_core::Field;
use serde_json::json;

use crate::instances::{Kind, Params};
use crate::output::{CliError, CliResult, Report};

#[derive(Parser)]
#[command(name = "helly", version, about = "Exact Helly-type and Betti-number computations")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Options {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field: QQ or p:<prime>. Overrides a file's field line.
    #[arg(long, global = true, value_name = "FIELD")]
    pub field: Option<Field>,
    /// Largest total degree scanned for non-monomial ideals.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Seed for random choices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Include wall-clock timings, which makes output nondeterministic.
    #[arg(long, global = true)]
    pub timing: bool,
}

impl Options {
    pub fn field(&self) -> Field {
        self.field.unwrap_or(Field::Rationals)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced homology of a simplicial complex.
    Homology {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Whether a complex is d-Leray, with a witness restriction if not.
    Leray {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Nerve of a family, compared with the union at the level of homology.
    Nerve {
        #[arg(long)]
        family: PathBuf,
    },
    /// Alexander dual of a complex.
    Dual {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Stanley-Reisner ideal of a complex, or the complex of a squarefree ideal.
    Sr {
        #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
        complex: Option<PathBuf>,
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Colors of the vertices, comma separated; all 1 by default.
        #[arg(long, value_delimiter = ',', conflicts_with = "ideal")]
        colors: Option<Vec<usize>>,
    },
    /// Multigraded Betti table of an ideal.
    Betti {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Koszul)]
        method: Method,
    },
    /// Castelnuovo-Mumford regularity and linearity of the resolution.
    Regularity {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Eliahou-Kervaire resolution of the (d+1)-st power of the maximal ideal.
    Ek {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: u32,
        /// Check d^2 = 0, exactness and the Betti numbers.
        #[arg(long)]
        verify: bool,
    },
    /// Whether a monomially labeled complex supports a cellular resolution.
    CellularCheck {
        #[arg(long)]
        labeled: PathBuf,
        /// Also check the codimension bound for this d.
        #[arg(long)]
        helly_d: Option<usize>,
    },
    /// Image of an ideal under x -> lambda(x) y_color(x).
    Specialize {
        #[arg(long)]
        ideal: PathBuf,
        /// One nonzero integer per variable; random from --seed if absent.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lambda: Option<Vec<i64>>,
    },
    /// Run a theorem checker or a suite of them.
    Check {
        #[command(subcommand)]
        theorem: CheckCommand,
    },
    /// Write a reproducible random instance.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        params: Params,
        /// Input ideal for taylor-label.
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Koszul,
    Hochster,
}

#[derive(Subcommand)]
pub enum CheckCommand {
    /// Squarefree ideal with d-Leray complex and all pure colors has a rainbow monomial.
    ColorfulMonomial {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Every minimal prime of a squarefree ideal contains a rainbow transversal.
    ColorfulPrimes {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// A (d+1)-regular ideal with all pure colors meets every color vector of degree d+1.
    Idcol {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Syzygy pieces of a linear ideal are at least binom(s-1, l-1).
    SyzygyBound {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// reg(target) <= reg(ideal), where target is a specialization image.
    RegularityComparison {
        #[arg(long)]
        ideal: PathBuf,
        /// Monomial ideal in the standard colored ring; the image of --ideal if absent.
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lambda: Option<Vec<i64>>,
    },
    /// A linear resolution stays linear under specialization.
    LinearSpecialization {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lambda: Option<Vec<i64>>,
    },
    /// Exhaustive: the only linear ideal of degree d+1 with all pure powers is m^(d+1).
    Uniqueness {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: u32,
    },
    /// Run every case of a TOML manifest.
    Suite {
        #[arg(long)]
        manifest: PathBuf,
    },
}

fn run(cli: Cli) -> CliResult<(String, Report)> {
    let o = &cli.opts;
    let named = |name: &str, r: CliResult<Report>| r.map(|r| (name.to_string(), r));
    match cli.command {
        Command::Homology { complex } => named("homology", commands::homology(o, &complex)),
        Command::Leray { complex, d } => named("leray", commands::leray(o, &complex, d)),
        Command::Nerve { family } => named("nerve", commands::nerve(o, &family)),
        Command::Dual { complex } => named("dual", commands::dual(&complex)),
        Command::Sr {
            complex,
            ideal,
            colors,
        } => named(
            "sr",
            commands::sr(complex.as_deref(), ideal.as_deref(), colors),
        ),
        Command::Betti { ideal, method } => named("betti", commands::betti(o, &ideal, method)),
        Command::Regularity { ideal } => named("regularity", commands::regularity_cmd(o, &ideal)),
        Command::Ek { r, d, verify } => named("ek", commands::ek(o, r, d, verify)),
        Command::CellularCheck { labeled, helly_d } => named(
            "cellular-check",
            commands::cellular_check(o, &labeled, helly_d),
        ),
        Command::Specialize { ideal, lambda } => {
            named("specialize", commands::specialize(o, &ideal, lambda))
        }
        Command::Check { theorem } => {
            let name = match &theorem {
                CheckCommand::Suite { .. } => "check suite",
                _ => "check",
            };
            named(name, commands::check(o, theorem))
        }
        Command::Generate {
            kind,
            params,
            ideal,
            out,
        } => named(
            "generate",
            commands::generate(o, kind, &params, ideal.as_deref(), out.as_deref()),
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.opts.json;
    if let Some(n) = cli.opts.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok((command, report)) => {
            if json {
                println!("{}", report.to_json(&command));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.status.code() as u8)
        }
        Err(e) => report_error(json, &e),
    }
}

fn report_error(json: bool, e: &CliError) -> ExitCode {
    if json {
        let v = json!({ "schema": 1, "error": e.kind(), "message": e.to_string() });
        println!("{v}");
    }
    eprintln!("error: {e}");
    ExitCode::from(e.code() as u8)
}
