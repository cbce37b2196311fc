//! Elaboration of expressions through the engine.
//!
//! Every constructor that finishes logs one line to stderr with the level
//! sizes of its result and how long it took, so a slow build shows where
//! the time went. Results land on stdout; stderr is commentary.

use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use pifinite::groups::{self, FiniteGroup};
use pifinite::hom::{coproduct, hom_complex, product};
use pifinite::invariants::pointed_hom;
use pifinite::kan::truncate;
use pifinite::paths::{homotopy_pullback, loop_space};
use pifinite::sections::dependent_product;
use pifinite::spaces::{
    classifying_space, discrete, eilenberg_maclane, homotopy_quotient, nerve_groupoid,
    symmetric_universe,
};
use pifinite::{io, kan_check, EngineError, KanComplex, Limits};

use crate::expr::{self, Expr, GroupLit, SyntaxError};

#[derive(Debug)]
pub enum CliError {
    Engine(EngineError),
    Syntax(SyntaxError),
    File { path: String, error: std::io::Error },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Syntax(e) => write!(f, "syntax error at {e}"),
            CliError::File { path, error } => write!(f, "{path}: {error}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

impl From<SyntaxError> for CliError {
    fn from(e: SyntaxError) -> Self {
        CliError::Syntax(e)
    }
}

pub fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|error| CliError::File { path: path.into(), error })
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|error| CliError::File { path: path.display().to_string(), error })
}

/// Group tables are order by order, built before any level cap can bite,
/// so the command line refuses orders that would allocate silly tables.
const LARGEST_GROUP: usize = 2000;

pub fn group(lit: &GroupLit) -> Result<FiniteGroup, CliError> {
    if let Some(order) = projected_order(lit) {
        if order > LARGEST_GROUP {
            return Err(CliError::Usage(format!(
                "group {lit} has order {order}, over the command line cap of {LARGEST_GROUP}"
            )));
        }
    }
    Ok(match lit {
        GroupLit::Cyclic(n) => groups::cyclic(*n),
        GroupLit::Symmetric(n) => groups::symmetric(*n),
        GroupLit::Alternating(n) => groups::alternating(*n),
        GroupLit::Dihedral(n) => groups::dihedral(*n),
        GroupLit::File(p) => io::read_group(&read(p)?)?,
    })
}

fn projected_order(lit: &GroupLit) -> Option<usize> {
    fn factorial(n: usize) -> usize {
        (2..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX)
    }
    match lit {
        GroupLit::Cyclic(n) => Some(*n),
        GroupLit::Symmetric(n) => Some(factorial(*n)),
        GroupLit::Alternating(n) => Some((factorial(*n) / 2).max(1)),
        GroupLit::Dihedral(n) => Some(2 * n),
        GroupLit::File(_) => None,
    }
}

/// A target on the command line is either a complex file or an expression.
/// Files are certified on the way in; nothing downstream trusts raw text.
pub fn load(target: &str, limits: &Limits) -> Result<KanComplex, CliError> {
    if Path::new(target).is_file() {
        let started = Instant::now();
        let data = io::read_complex(&read(target)?, limits)?;
        let space = kan_check(data, limits)?;
        log_step(target, started, &space);
        return Ok(space);
    }
    match expr::parse(target) {
        Ok(e) => evaluate(&e, limits),
        // `two.complex` was almost surely a path, not an expression
        Err(err) if !target.contains('(') && target.contains(['.', '/']) => Err(
            CliError::Usage(format!("no file named `{target}` ({err})")),
        ),
        Err(err) => Err(err.into()),
    }
}

pub fn evaluate(e: &Expr, limits: &Limits) -> Result<KanComplex, CliError> {
    let started = Instant::now();
    let space = build(e, limits)?;
    log_step(&e.to_string(), started, &space);
    Ok(space)
}

fn log_step(label: &str, started: Instant, space: &KanComplex) {
    let sizes: Vec<String> =
        (0..=space.bound()).map(|d| space.total_count(d).to_string()).collect();
    eprintln!("{label}: levels [{}] in {:.1?}", sizes.join(", "), started.elapsed());
}

fn build(e: &Expr, limits: &Limits) -> Result<KanComplex, CliError> {
    Ok(match e {
        Expr::Fin(n) => discrete(*n, limits)?,
        Expr::Classifying(g) => classifying_space(&group(g)?, limits)?,
        Expr::EilenbergMacLane(g, n) => eilenberg_maclane(&group(g)?, *n, limits)?,
        Expr::Nerve(p) => nerve_groupoid(&io::read_groupoid(&read(p)?)?, limits)?,
        Expr::Prod(a, b) => {
            product(&evaluate(a, limits)?, &evaluate(b, limits)?, limits)?.space
        }
        Expr::Sum(a, b) => coproduct(&evaluate(a, limits)?, &evaluate(b, limits)?, limits)?,
        Expr::Omega(e) => loop_space(&evaluate(e, limits)?, 0, limits)?,
        Expr::Trunc(n, e) => truncate(&evaluate(e, limits)?, *n, limits)?,
        Expr::Hom(a, b) => {
            let a = evaluate(a, limits)?;
            let b = evaluate(b, limits)?;
            hom_complex(a.data(), &b, limits)?.into_space()
        }
        Expr::PointedHom(a, b) => {
            let a = evaluate(a, limits)?;
            let b = evaluate(b, limits)?;
            pointed_hom(&a, 0, &b, 0, limits)?
        }
        Expr::Pullback(f, g) => {
            let f = io::read_map(&read(f)?, limits)?;
            let g = io::read_map(&read(g)?, limits)?;
            homotopy_pullback(&f, &g, limits)?.space
        }
        Expr::Quotient(p) => {
            homotopy_quotient(&io::read_action(&read(p)?, limits)?, limits)?.space
        }
        Expr::Sections(p, f) => {
            let p = io::read_map(&read(p)?, limits)?;
            let f = io::read_map(&read(f)?, limits)?;
            dependent_product(&p, &f, limits)?.space
        }
        Expr::SymUniverse(n) => symmetric_universe(*n, limits)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn groups_elaborate_with_engine_names() {
        assert_eq!(group(&GroupLit::Cyclic(4)).unwrap().name(), "Z/4");
        assert_eq!(group(&GroupLit::Symmetric(3)).unwrap().order(), 6);
        assert_eq!(group(&GroupLit::Alternating(4)).unwrap().order(), 12);
        assert_eq!(group(&GroupLit::Dihedral(5)).unwrap().order(), 10);
    }

    #[test]
    fn oversized_groups_are_refused_before_building() {
        let err = group(&GroupLit::Symmetric(8)).unwrap_err();
        assert!(err.to_string().contains("order 40320"));
        assert!(group(&GroupLit::Symmetric(20)).is_err());
        assert!(group(&GroupLit::Cyclic(LARGEST_GROUP)).is_ok());
    }

    #[test]
    fn expressions_compose() {
        let e = expr::parse("Trunc(1, Omega(K(Z/3, 2)))").unwrap();
        let space = evaluate(&e, &lim()).unwrap();
        assert_eq!(pifinite::invariants::pi0(&space).count(), 1);
        let g = pifinite::invariants::pi_n(&space, 0, 1, &lim()).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn load_prefers_files_and_flags_missing_ones() {
        let space = load("Fin(2)", &lim()).unwrap();
        assert_eq!(space.nondeg_count(0), 2);

        let err = load("missing.complex", &lim()).unwrap_err();
        assert!(err.to_string().contains("no file named"));

        let err = load("Fan(2)", &lim()).unwrap_err();
        assert!(matches!(err, CliError::Syntax(_)));
    }
}
