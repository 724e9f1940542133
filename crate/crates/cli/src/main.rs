//! `refperm`: fixed-point refined counts of permutations avoiding length-3
//! patterns.
//!
//! Exit codes: 0 success, 1 audit found a discrepancy, 2 usage error,
//! 3 enumeration cap exceeded.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use refperm::audit;
use refperm::equivalence::{orbit_classes, super_wilf_classes, symmetry_classes};
use refperm::genfun::gf_for_k;
use refperm::{evaluate, Error, EvalResult, FormulaId, Generators, Oracle, PatternSet};

use render::{Cell, Format};

const EXIT_DISCREPANT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "refperm",
    version,
    about = "Refined enumeration of pattern-avoiding permutations by fixed points"
)]
struct Cli {
    /// Largest n the brute-force oracle will enumerate.
    #[arg(long, global = true, env = "REFPERM_ORACLE_CAP")]
    cap: Option<usize>,

    /// Output format; each command has its own default.
    #[arg(long, short, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triangle of s_n^k(T) for n = 0..=n_max.
    Table {
        #[arg(long, short)]
        patterns: PatternSet,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// s_n^k(T) for one k and n = 0..=n_max.
    Sequence {
        #[arg(long, short)]
        patterns: PatternSet,
        #[arg(long, short)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Audit closed forms, constructions and identities against the oracle.
    Verify {
        #[arg(long, conflicts_with = "formula", required_unless_present = "formula")]
        all: bool,
        /// Formula id such as `thm-231-312`.
        #[arg(long)]
        formula: Option<String>,
        #[arg(long, default_value_t = audit::CI_N_MAX)]
        n_max: usize,
        /// Write a markdown summary of discrepant items.
        #[arg(long, value_name = "PATH")]
        discrepancies: Option<PathBuf>,
    },
    /// Partition the pattern sets of one size.
    Classes {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = ClassMode::Symmetry)]
        mode: ClassMode,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Generating function G_k of {231,321} and its first terms.
    Gf {
        #[arg(long, short)]
        k: usize,
        #[arg(long)]
        terms: usize,
    },
    /// List the avoiders of size n in lexicographic order.
    Avoiders {
        #[arg(long, short)]
        patterns: PatternSet,
        #[arg(long, short)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Formula,
    Generator,
    Gf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassMode {
    Symmetry,
    Orbit,
    Superwilf,
}

struct Context {
    oracle: Oracle,
    generators: Generators,
    format: Option<Format>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let oracle = match cli.cap {
        Some(cap) => Oracle::with_cap(cap),
        None => Oracle::new(),
    };
    let ctx = Context {
        oracle,
        generators: Generators::new(),
        format: cli.format,
    };
    match run(&ctx, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => EXIT_CAP,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(ctx: &Context, command: Command) -> refperm::Result<u8> {
    match command {
        Command::Table {
            patterns,
            n_max,
            method,
        } => {
            let rows = (0..=n_max)
                .map(|n| row(ctx, &patterns, n, method))
                .collect::<refperm::Result<Vec<_>>>()?;
            let format = ctx.format.unwrap_or(Format::Plain);
            print!(
                "{}",
                render::table(format, &patterns, method_name(method), &rows)
            );
        }
        Command::Sequence {
            patterns,
            k,
            n_max,
            method,
        } => {
            let values = (0..=n_max)
                .map(|n| {
                    let cells = row(ctx, &patterns, n, method)?;
                    Ok(cells
                        .get(k)
                        .cloned()
                        .unwrap_or_else(|| Cell::Value("0".into())))
                })
                .collect::<refperm::Result<Vec<_>>>()?;
            let format = ctx.format.unwrap_or(Format::Plain);
            print!(
                "{}",
                render::sequence(format, &patterns, k, method_name(method), &values)
            );
        }
        Command::Verify {
            all,
            formula,
            n_max,
            discrepancies,
        } => {
            let reports = if all {
                audit::audit_all(&ctx.oracle, &ctx.generators, n_max)?
            } else {
                let id: FormulaId = formula.unwrap_or_default().parse()?;
                vec![audit::audit_formula(&ctx.oracle, id, n_max)?]
            };
            if let Some(path) = discrepancies {
                fs::write(&path, audit::discrepancies_markdown(&reports)).map_err(|e| {
                    Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let format = ctx.format.unwrap_or(Format::Json);
            print!("{}", render::reports(format, &reports));
            if !audit::all_verified(&reports) {
                return Ok(EXIT_DISCREPANT);
            }
        }
        Command::Classes { size, mode, n_max } => {
            let format = ctx.format.unwrap_or(Format::Json);
            let out = match mode {
                ClassMode::Symmetry => {
                    render::classes(format, "symmetry", &symmetry_classes(size)?)
                }
                ClassMode::Orbit => render::classes(format, "orbit", &orbit_classes(size)?),
                ClassMode::Superwilf => {
                    let candidates = PatternSet::all_of_size(size)?;
                    let report = super_wilf_classes(&ctx.oracle, &candidates, n_max)?;
                    render::super_wilf(format, &report)
                }
            };
            print!("{out}");
        }
        Command::Gf { k, terms } => {
            let gf = gf_for_k(k);
            let series = gf.series_coefficients(terms)?;
            let format = ctx.format.unwrap_or(Format::Plain);
            print!("{}", render::gf(format, k, &gf, &series));
        }
        Command::Avoiders { patterns, n } => {
            let list: Vec<_> = ctx.oracle.enumerate_avoiders(n, &patterns)?.collect();
            let format = ctx.format.unwrap_or(Format::Plain);
            print!("{}", render::avoiders(format, &list));
        }
    }
    Ok(0)
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Oracle => "oracle",
        Method::Formula => "formula",
        Method::Generator => "generator",
        Method::Gf => "gf",
    }
}

/// Row `n` of the table, cells `k = 0..=n`.
fn row(
    ctx: &Context,
    patterns: &PatternSet,
    n: usize,
    method: Method,
) -> refperm::Result<Vec<Cell>> {
    let values = |v: Vec<BigUint>| v.iter().map(|c| Cell::Value(c.to_string())).collect();
    Ok(match method {
        Method::Oracle => values(ctx.oracle.refined_count(n, patterns)?),
        Method::Generator => values(ctx.generators.generate_refined(patterns, n)?),
        Method::Formula => {
            let id = FormulaId::for_patterns(patterns).ok_or_else(|| {
                Error::InvalidInput(format!("no closed form is known for {{{patterns}}}"))
            })?;
            (0..=n)
                .map(|k| match evaluate(id, n as i64, k as i64) {
                    EvalResult::OutOfDomain => Cell::Missing,
                    other => Cell::Value(other.to_string()),
                })
                .collect()
        }
        Method::Gf => {
            let supported: PatternSet = "231,321".parse()?;
            if *patterns != supported {
                return Err(Error::InvalidInput(format!(
                    "the gf method only covers {{{supported}}}, not {{{patterns}}}"
                )));
            }
            (0..=n)
                .map(|k| {
                    Ok(Cell::Value(
                        gf_for_k(k).series_coefficients(n)?[n].to_string(),
                    ))
                })
                .collect::<refperm::Result<_>>()?
        }
    })
}
