use thiserror::Error;

use crate::perm::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least {min}, got {n}")]
    Degree { n: usize, min: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("family mismatch: {left} vs {right}")]
    FamilyMismatch { left: Family, right: Family },

    #[error("generator subscript {index} out of range {min}..={max}")]
    Subscript {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("not a valid {family} permutation: {reason}")]
    InvalidElement { family: Family, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} at n = {n} exceeds the cap of {cap} (about {estimate} elements)")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        estimate: u128,
    },

    #[error("element is not an involution")]
    NotAnInvolution,

    #[error("element is the identity")]
    Identity,

    #[error("graph has no cycle")]
    NoCycle,

    #[error("vertex sequence is not a simple cycle of the graph: {0}")]
    NotASimpleCycle(String),

    #[error("two-generator cycle check failed: {0}")]
    CycleStructure(String),

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
