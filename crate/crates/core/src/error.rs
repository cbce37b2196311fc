use thiserror::Error;

use crate::kan::HornWitness;
use crate::simplicial::ValidationReport;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("simplicial identities violated:\n{0}")]
    InvalidData(ValidationReport),

    #[error("horn without filler: {0}")]
    NotKan(HornWitness),

    #[error("bounds differ: {left} vs {right} (raise the lower one first)")]
    BoundMismatch { left: usize, right: usize },

    #[error("level {dim} holds {count} simplices, over the cap of {cap}")]
    SizeCapExceeded { dim: usize, count: usize, cap: usize },

    #[error("{operation} timed out after {elapsed_ms} ms ({progress})")]
    Timeout {
        operation: &'static str,
        elapsed_ms: u128,
        progress: String,
    },

    #[error("group {name} is not abelian; K(G,n) needs an abelian G for n >= 2")]
    NonAbelian { name: String },

    #[error("universe parameter {requested} exceeds the cap of {cap}")]
    UniverseCap { requested: usize, cap: usize },

    #[error("map is not a fibration: {0}")]
    NotFibration(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("no vertex {vertex} at level 0 (have {count})")]
    NoSuchVertex { vertex: usize, count: usize },

    #[error("line {line}: {message}")]
    FileFormat { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, EngineError>;
