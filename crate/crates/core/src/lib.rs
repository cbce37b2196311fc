//! Exact computation with truncated pi-finite spaces.
//!
//! Spaces are finite Kan complexes stored up to a dimension bound and read
//! coskeletally above it. On that representation the crate computes homotopy
//! groups, homotopy cardinality, mapping spaces, fibers, quotients and
//! dependent products exactly, and decides homotopy equivalence.

pub mod error;
pub mod groupoids;
pub mod groups;
pub mod hom;
pub mod invariants;
pub mod io;
pub mod kan;
pub mod laws;
pub mod limits;
pub mod maps;
pub mod paths;
pub mod sections;
pub mod simplicial;
pub mod spaces;
pub mod word;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{EngineError, Result};
pub use kan::{kan_check, KanComplex};
pub use limits::Limits;
