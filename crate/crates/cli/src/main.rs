//! pifinite: build truncated spaces, compute their invariants, audit laws.
//!
//! Exit codes: 0 on success, 1 for a negative decision (`equiv` found the
//! spaces distinct, `laws` found a failure), 2 for errors and for law runs
//! that could not finish inside their resource budget.

mod eval;
mod expr;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pifinite::hom::hom_complex;
use pifinite::invariants::{are_equivalent, homotopy_cardinality, pi0, pi_n, EquivalenceDecision};
use pifinite::laws::{render, run_suite, Verdict};
use pifinite::{io, KanComplex, Limits};

use eval::CliError;

#[derive(Parser)]
#[command(name = "pifinite", version, about = "Finite homotopy types on the command line")]
struct Cli {
    /// Largest simplex count allowed per level (env PIFINITE_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Seconds before a single engine operation gives up (env PIFINITE_TIMEOUT)
    #[arg(long, global = true)]
    timeout: Option<u64>,

    /// How results are printed
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// Every TARGET below is either an expression like "Prod(B(Z/2), Fin(3))"
/// or the path of a complex file written earlier by `build` or `hom`.
#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and write the complex to a file
    Build {
        /// Space expression
        expr: String,
        /// Output complex file
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print one homotopy group of a space
    Pi {
        /// Degree
        #[arg(short, default_value_t = 1)]
        n: usize,
        target: String,
        /// Vertex the group is based at
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
    },
    /// Print the homotopy cardinality of a space as an exact fraction
    Card { target: String },
    /// Decide whether two spaces are equivalent; exits 1 when they are not
    Equiv {
        a: String,
        b: String,
        /// Where the witness map goes when the spaces are equivalent
        #[arg(short, long, default_value = "witness.map")]
        out: PathBuf,
    },
    /// Run the seeded law audit; failures leave witness files in the
    /// current directory
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute the function complex hom(SOURCE, TARGET) and write it
    Hom {
        source: String,
        target: String,
        /// Output complex file
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("pifinite: {e}");
            ExitCode::from(2)
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Some(cap) = setting(cli.cap, "PIFINITE_CAP")? {
        limits.level_cap = cap;
    }
    if let Some(secs) = setting(cli.timeout, "PIFINITE_TIMEOUT")? {
        limits.timeout = Duration::from_secs(secs);
    }
    Ok(limits)
}

/// Flag beats environment beats default.
fn setting<T: FromStr>(flag: Option<T>, var: &str) -> Result<Option<T>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(var) {
        Ok(text) => text
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{var} must be a number, got `{text}`"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let limits = limits(cli)?;
    match &cli.command {
        Command::Build { expr, out } => {
            let space = eval::load(expr, &limits)?;
            eval::write(out, &io::write_complex(space.data(), &limits)?)?;
            match cli.format {
                Format::Text => println!(
                    "wrote {} (bound {}, levels [{}])",
                    out.display(),
                    space.bound(),
                    levels(&space).join(", ")
                ),
                Format::Machine => emit(serde_json::json!({
                    "out": out.display().to_string(),
                    "bound": space.bound(),
                    "levels": level_counts(&space),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Pi { n, target, basepoint } => {
            let space = eval::load(target, &limits)?;
            if *n == 0 {
                let components = pi0(&space);
                match cli.format {
                    Format::Text => println!("pi_0: {} components", components.count()),
                    Format::Machine => emit(serde_json::json!({
                        "degree": 0,
                        "count": components.count(),
                        "representatives": components.reps(),
                    })),
                }
                return Ok(ExitCode::SUCCESS);
            }
            let group = pi_n(&space, *basepoint, *n, &limits)?;
            let g = group.group();
            match cli.format {
                Format::Text => {
                    println!("pi_{n} at vertex {basepoint}: {} (order {})", g.name(), g.order());
                    for a in 0..g.order() {
                        let row: Vec<String> =
                            (0..g.order()).map(|b| g.mul(a, b).to_string()).collect();
                        println!("{}", row.join(" "));
                    }
                }
                Format::Machine => {
                    let table: Vec<Vec<usize>> = (0..g.order())
                        .map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect())
                        .collect();
                    emit(serde_json::json!({
                        "degree": n,
                        "basepoint": basepoint,
                        "name": g.name(),
                        "order": g.order(),
                        "table": table,
                    }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Card { target } => {
            let space = eval::load(target, &limits)?;
            let value = homotopy_cardinality(&space, &limits)?;
            let fraction = format!("{}/{}", value.numer(), value.denom());
            match cli.format {
                Format::Text => println!("{fraction}"),
                Format::Machine => emit(serde_json::json!({ "cardinality": fraction })),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Equiv { a, b, out } => {
            let x = eval::load(a, &limits)?;
            let y = eval::load(b, &limits)?;
            match are_equivalent(&x, &y, &limits)? {
                EquivalenceDecision::Equivalent(map) => {
                    eval::write(out, &io::write_map(&map, &limits)?)?;
                    match cli.format {
                        Format::Text => {
                            println!("equivalent; witness written to {}", out.display())
                        }
                        Format::Machine => emit(serde_json::json!({
                            "equivalent": true,
                            "witness": out.display().to_string(),
                        })),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                EquivalenceDecision::Distinct { classes_searched } => {
                    match cli.format {
                        Format::Text => println!(
                            "not equivalent ({classes_searched} homotopy classes searched)"
                        ),
                        Format::Machine => emit(serde_json::json!({
                            "equivalent": false,
                            "classes_searched": classes_searched,
                        })),
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }

        Command::Laws { seed } => {
            let reports = run_suite(*seed, &limits);
            match cli.format {
                Format::Text => print!("{}", render(&reports)),
                Format::Machine => {
                    let rows: Vec<_> = reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "law": r.law,
                                "instance": r.instance,
                                "verdict": r.verdict.to_string(),
                                "detail": r.detail,
                            })
                        })
                        .collect();
                    emit(serde_json::json!(rows));
                }
            }
            let mut worst = ExitCode::SUCCESS;
            for r in &reports {
                match r.verdict {
                    Verdict::Pass => {}
                    Verdict::Inconclusive => {
                        if worst == ExitCode::SUCCESS {
                            worst = ExitCode::from(2);
                        }
                    }
                    Verdict::Fail => {
                        let name = format!("law-{}-{}.witness", r.law, r.hash());
                        let body = match &r.detail {
                            Some(detail) => format!("{}\n\n{detail}", r.instance),
                            None => r.instance.clone(),
                        };
                        eval::write(Path::new(&name), &body)?;
                        eprintln!("witness written to {name}");
                        worst = ExitCode::from(1);
                    }
                }
            }
            Ok(worst)
        }

        Command::Hom { source, target, out } => {
            let a = eval::load(source, &limits)?;
            let y = eval::load(target, &limits)?;
            let maps = hom_complex(a.data(), &y, &limits)?.into_space();
            eval::write(out, &io::write_complex(maps.data(), &limits)?)?;
            match cli.format {
                Format::Text => println!(
                    "wrote {} ({} components, levels [{}])",
                    out.display(),
                    pi0(&maps).count(),
                    levels(&maps).join(", ")
                ),
                Format::Machine => emit(serde_json::json!({
                    "out": out.display().to_string(),
                    "components": pi0(&maps).count(),
                    "levels": level_counts(&maps),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn level_counts(space: &KanComplex) -> Vec<usize> {
    (0..=space.bound()).map(|d| space.total_count(d)).collect()
}

fn levels(space: &KanComplex) -> Vec<String> {
    level_counts(space).iter().map(|n| n.to_string()).collect()
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}
