//! Exact rational linear and polynomial algebra.
//!
//! Everything here is a pure function of immutable values; no floating point is used
//! anywhere.

mod mat;
mod operator;
mod poly;
mod rational;
mod subspace;

pub use mat::Mat;
pub use operator::{
    charpoly, is_nilpotent, is_semisimple, jordan_chevalley, minpoly, operator_predicates,
    semisimple_part, JordanChevalley, OperatorPredicates,
};
pub use poly::Poly;
pub use rational::{bit_size, format_rat, int, one, parse_rat, rat, zero, ParseRatError, Rat};
pub use subspace::{
    column_space, first_dependent, independent_modulo, kernel, rank, rref, unit_vector, Frame,
    Subspace,
};
