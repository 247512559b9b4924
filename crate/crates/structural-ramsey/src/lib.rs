//! Exact computations in structural Ramsey theory over finite relational
//! structures.
//!
//! The crate provides, at desk scale and with exact arithmetic throughout:
//!
//! * [`structure`] — finite relational structures over explicit signatures,
//!   with embeddings, copies, automorphisms and canonical forms;
//! * [`catalog`] — ages as hereditary catalogs of isomorphism classes, with
//!   joint-embedding and amalgamation searches;
//! * [`expansion`] — signature expansions and reducts, expansion counting
//!   t(A), precompactness profiles, expansion-property searches, and the
//!   arc-rewriting transforms between the starred circular structures and
//!   the partitioned rational orders;
//! * [`arrow`] — certified decisions of arrow partition relations
//!   C → (B)^A with k colors and value budget l, plus Ramsey-degree
//!   brackets built from expansion-type colorings;
//! * [`circle`] — the dense circular tournament S(2) and digraph S(3) on
//!   rational turn angles, their unary-part expansions, and a complete
//!   realizability (membership) decision by placement search;
//! * [`flow`] — the doubled-circle point spaces coding the partitions of
//!   S(2) and S(3), with interval basis and rational rotation action.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! byte for byte, across runs and platforms.

pub mod arrow;
pub mod catalog;
pub mod circle;
pub mod cli;
pub mod expansion;
pub mod experiments;
pub mod flow;
pub mod format;
pub mod oracles;
pub mod structure;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("element out of range: {0}")]
    OutOfRange(String),
    #[error("size {size} exceeds bound {bound}")]
    AboveBound { size: usize, bound: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("integrity violation: {0}")]
    Integrity(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
