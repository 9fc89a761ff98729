use serde::Serialize;

use super::linear::derivations;
use super::radical::nilradical;
use crate::error::Result;
use crate::extensions::malcev_split_solvable;
use crate::liecore::{LieAlgebra, SeriesKind};

/// Isomorphism invariants; different fingerprints certify non-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub derived_algebra_dim: usize,
    pub nilradical_dim: usize,
    pub derivation_dim: usize,
    /// Only computed for solvable algebras.
    pub splitting_dim: Option<usize>,
}

pub fn fingerprint(l: &LieAlgebra) -> Result<Fingerprint> {
    let splitting_dim = if l.is_solvable() {
        Some(malcev_split_solvable(l)?.m.dim())
    } else {
        None
    };
    Ok(Fingerprint {
        dim: l.dim(),
        lower_central_dims: l.series_dims(SeriesKind::LowerCentral),
        derived_dims: l.series_dims(SeriesKind::Derived),
        center_dim: l.center().dim(),
        derived_algebra_dim: l.derived_algebra().dim(),
        nilradical_dim: nilradical(l)?.dim(),
        derivation_dim: derivations(l).dim(),
        splitting_dim,
    })
}
