//! Exact computations with finite-dimensional Lie algebras over the rationals,
//! aimed at solvable extensions of nilpotent Lie algebras.
//!
//! - [`exactlin`]: rational matrices, subspaces, polynomials, Jordan–Chevalley parts.
//! - [`liecore`]: structure-constant algebras, series, ideals, quotients, sums.
//! - [`structure`]: derivations, Cartan subalgebras, nilradicals, tori, fingerprints.
//! - [`extensions`]: torus extensions, Malcev splittings, rank-bound checks.
//! - [`catalog`]: named algebras, their expected invariants, and JSON I/O.

pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod extensions;
pub mod liecore;
pub mod random;
pub mod structure;

pub use error::{Error, Result};
