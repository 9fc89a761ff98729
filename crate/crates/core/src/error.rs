use thiserror::Error;

use crate::exactlin::Subspace;

/// Basis indices carried by the variants are 0-based; messages print them 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("vector {} depends linearly on the preceding ones", .index + 1)]
    LinearlyDependent { index: usize },

    #[error("bracket [e{}, e{}] is given twice", .i + 1, .j + 1)]
    DuplicateBracket { i: usize, j: usize },

    #[error("bracket [e{}, e{}] is not allowed (index out of range or i = j)", .i + 1, .j + 1)]
    BadBracketIndex { i: usize, j: usize },

    #[error("Jacobi identity fails for basis triple (e{}, e{}, e{})", .0.0 + 1, .0.1 + 1, .0.2 + 1)]
    Jacobi((usize, usize, usize)),

    #[error("subspace is not an ideal: [e{}, v{}] leaves it", .algebra_elem + 1, .ideal_elem + 1)]
    NotAnIdeal {
        algebra_elem: usize,
        ideal_elem: usize,
    },

    #[error("subspace is not a subalgebra: [v{}, v{}] leaves it", .0 + 1, .1 + 1)]
    NotASubalgebra(usize, usize),

    #[error("matrix {} is not a derivation: Leibniz rule fails on (e{}, e{})", .generator + 1, .x + 1, .y + 1)]
    NotADerivation {
        generator: usize,
        x: usize,
        y: usize,
    },

    #[error("span is not closed under commutators: [m{}, m{}] leaves it", .0 + 1, .1 + 1)]
    NotClosed(usize, usize),

    #[error("{what} is not nilpotent")]
    NotNilpotent { what: &'static str },

    #[error("{what} is not solvable; only the solvable case is supported")]
    NotSolvable { what: &'static str },

    #[error("nilradical mismatch: expected dimension {}, computed nilradical has dimension {}", .expected.dim(), .computed.dim())]
    NilradicalMismatch {
        expected: Box<Subspace>,
        computed: Box<Subspace>,
    },

    #[error("contract violated by {operation}: {detail}")]
    Contract {
        operation: &'static str,
        detail: String,
    },

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("invalid parameters for {name}: {reason}")]
    InvalidParams { name: String, reason: String },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("{field}: expected {expected}, computed {computed}")]
    InvariantMismatch {
        field: String,
        expected: String,
        computed: String,
    },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
