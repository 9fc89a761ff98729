//! Lie algebras given by structure constants: brackets, series, subalgebras,
//! ideals, quotients, and the direct and semidirect sum constructions.

mod algebra;
mod ops;
mod semidirect;

pub use algebra::{Bracket, JacobiReport, LieAlgebra, Vector};
pub(crate) use ops::sparse;
pub use ops::{direct_sum, Quotient, SeriesKind, Subalgebra};
pub use semidirect::{leibniz_violation, semidirect_sum};
