//! `zeta`: evaluates JSON problem documents with the zeta-infinity pipelines.
//!
//! Exit status: 0 on success, 2 on unreadable or invalid input, 3 when two
//! routes that must agree do not (including failed `--check` assertions).

mod checks;
mod commands;
mod document;
mod report;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use commands::{evaluate, Options, ZetaOp};
use document::Document;
use report::{CliError, Report};

const DEFAULT_SEED: u64 = 0x5eed_2e7a;

#[derive(Parser)]
#[command(
    name = "zeta",
    version,
    about = "Zeta-functions of the monodromy at infinity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Problem document; standard input is read when absent.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Evaluate every `*.json` document in a directory.
    #[arg(long, global = true, value_name = "DIR", conflicts_with = "input")]
    input_dir: Option<PathBuf>,

    /// Print the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Run cross-route assertions; any failure exits with status 3.
    #[arg(long, global = true)]
    check: bool,

    /// Seed for the randomized assertions behind `--check`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Combine an explicit stratification of the hyperplane at infinity.
    Strata,
    /// Polynomials P_d + P_(d-k) + ... with isolated singular points at infinity.
    Yomdin,
    /// Plane-curve configuration of three-variable polynomials.
    Curve,
    /// Zero-level zeta-function of x^a y^b (x^c y^d - z^(c+d)) + z.
    Family,
    /// Local zeta-functions of a germ.
    Germ,
    /// Arithmetic on factored zeta-functions.
    ZetaCalc(ZetaCalcArgs),
    /// Zeta-function of a permutation.
    Perm(PermArgs),
}

#[derive(Args)]
struct ZetaCalcArgs {
    #[arg(long, value_enum)]
    op: Option<ZetaOp>,
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    other: Option<String>,
    /// Power-transform order.
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    /// Exponent for `pow`.
    #[arg(long, allow_negative_numbers = true)]
    e: Option<i64>,
    /// Substitution order for `substitute`.
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
}

#[derive(Args)]
struct PermArgs {
    /// Zero-based images, comma separated, e.g. `1,2,0`.
    #[arg(long)]
    images: Option<String>,
    /// Compare with the k-th iterate.
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
}

/// The document kinds; names match the subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strata,
    Yomdin,
    Curve,
    Family,
    Germ,
    ZetaCalc,
    Perm,
}

impl Mode {
    const ALL: [Mode; 7] = [
        Mode::Strata,
        Mode::Yomdin,
        Mode::Curve,
        Mode::Family,
        Mode::Germ,
        Mode::ZetaCalc,
        Mode::Perm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Strata => "strata",
            Mode::Yomdin => "yomdin",
            Mode::Curve => "curve",
            Mode::Family => "family",
            Mode::Germ => "germ",
            Mode::ZetaCalc => "zeta-calc",
            Mode::Perm => "perm",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl Command {
    fn mode(&self) -> Mode {
        match self {
            Command::Strata => Mode::Strata,
            Command::Yomdin => Mode::Yomdin,
            Command::Curve => Mode::Curve,
            Command::Family => Mode::Family,
            Command::Germ => Mode::Germ,
            Command::ZetaCalc(_) => Mode::ZetaCalc,
            Command::Perm(_) => Mode::Perm,
        }
    }

    /// A document built from flags, when the subcommand was given one inline.
    fn inline_document(&self) -> Result<Option<Document>, CliError> {
        match self {
            Command::ZetaCalc(args) if args.op.is_some() || args.zeta.is_some() => {
                let op = args
                    .op
                    .ok_or_else(|| CliError::invalid("`--op` is required with `--zeta`"))?;
                let zeta = args
                    .zeta
                    .as_ref()
                    .ok_or_else(|| CliError::invalid("`--zeta` is required with `--op`"))?;
                Ok(Some(Document::from_payload(json!({
                    "op": op,
                    "zeta": zeta,
                    "other": args.other,
                    "k": args.k,
                    "e": args.e,
                    "r": args.r,
                }))))
            }
            Command::Perm(PermArgs {
                images: Some(images),
                k,
            }) => {
                let images = images
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::invalid(format!("`--images`: {e}")))?;
                Ok(Some(Document::from_payload(
                    json!({ "images": images, "k": k }),
                )))
            }
            _ => Ok(None),
        }
    }
}

fn read_stdin(mode: Mode) -> Result<Document, CliError> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| CliError::invalid(format!("cannot read standard input: {e}")))?;
    Document::parse(&text, mode)
}

fn run_one(
    mode: Mode,
    doc: Result<Document, CliError>,
    opts: &Options,
) -> Result<Report, CliError> {
    evaluate(mode, &doc?, opts)
}

fn json_outcome(outcome: &Result<Report, CliError>) -> Value {
    match outcome {
        Ok(report) => report.to_json(),
        Err(e) => json!({ "error": e.message, "exit": e.code }),
    }
}

fn exit_status(outcome: &Result<Report, CliError>) -> u8 {
    match outcome {
        Ok(report) => report.exit_code(),
        Err(e) => e.code,
    }
}

fn json_documents(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::invalid(format!("cannot read directory {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    Ok(paths)
}

fn run_batch(mode: Mode, dir: &Path, opts: &Options, as_json: bool) -> u8 {
    let paths = match json_documents(dir) {
        Ok(paths) => paths,
        Err(e) => {
            eprintln!("zeta: {}", e.message);
            return e.code;
        }
    };
    let outcomes: Vec<_> = paths
        .par_iter()
        .map(|path| run_one(mode, Document::read(path, mode), opts))
        .collect();
    if as_json {
        let items: Vec<Value> = paths
            .iter()
            .zip(&outcomes)
            .map(|(path, outcome)| {
                let mut item = json_outcome(outcome);
                item["file"] = path.display().to_string().into();
                item
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&items).expect("json"));
    } else {
        for (path, outcome) in paths.iter().zip(&outcomes) {
            println!("== {} ==", path.display());
            match outcome {
                Ok(report) => print!("{}", report.render_text()),
                Err(e) => println!("error: {}", e.message),
            }
        }
    }
    outcomes.iter().map(exit_status).max().unwrap_or(0)
}

fn run(cli: Cli) -> u8 {
    let mode = cli.command.mode();
    let opts = Options {
        check: cli.check,
        seed: cli.seed,
    };
    if let Some(dir) = &cli.input_dir {
        return run_batch(mode, dir, &opts, cli.json);
    }
    let doc = match (cli.command.inline_document(), &cli.input) {
        (Err(e), _) => Err(e),
        (Ok(Some(doc)), None) => Ok(doc),
        (Ok(Some(_)), Some(_)) => Err(CliError::invalid(
            "give the problem either inline or with `--input`, not both",
        )),
        (Ok(None), Some(path)) => Document::read(path, mode),
        (Ok(None), None) => read_stdin(mode),
    };
    let outcome = run_one(mode, doc, &opts);
    if let Err(e) = &outcome {
        eprintln!("zeta: {}", e.message);
    }
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json_outcome(&outcome)).expect("json")
        );
    } else if let Ok(report) = &outcome {
        print!("{}", report.render_text());
    }
    exit_status(&outcome)
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
