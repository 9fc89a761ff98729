//! Solvable extensions of nilpotent algebras, the standard torus extension, the
//! Malcev splitting of solvable algebras, and rank-bound verifiers.

mod bounds;
mod split;

pub use bounds::{
    exactness_check, togo_dim_check, verify_rank_bound, ExactnessReport, RankBoundReport,
    TogoReport,
};
pub use split::{
    is_split_solvable, malcev_split_solvable, malcev_split_solvable_with, SplittingResult,
};

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{Mat, Subspace};
use crate::liecore::{semidirect_sum, LieAlgebra};
use crate::random::default_rng;
use crate::structure::{derivations, maximal_torus_with, nilradical, LinearLieAlgebra};

/// How an extension was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A semidirect sum with the given derivation basis.
    Semidirect { derivations: Vec<Mat> },
    /// Adjoining the given derivations to a nilpotent algebra.
    Derivations { generators: Vec<Mat> },
    /// Adjoining a maximal torus of the derivation algebra.
    StandardTorus { torus: Vec<Mat> },
    /// An arbitrary algebra split along its computed nilradical.
    Nilradical,
}

/// A Lie algebra `total = complement ⊕ nilideal` with `nilideal` an ideal.
#[derive(Clone, Debug)]
pub struct Extension {
    pub total: LieAlgebra,
    pub nilideal: Subspace,
    pub complement: Subspace,
    pub provenance: Provenance,
    validated: bool,
}

impl Extension {
    pub(crate) fn new_unvalidated(
        total: LieAlgebra,
        nilideal: Subspace,
        complement: Subspace,
        provenance: Provenance,
    ) -> Self {
        Extension {
            total,
            nilideal,
            complement,
            provenance,
            validated: false,
        }
    }

    /// Checks that `nilideal` is a nilpotent ideal complementary to `complement` and
    /// that it is the whole nilradical of `total`.
    pub fn validate(mut self) -> Result<Self> {
        let l = &self.total;
        l.check_ideal(&self.nilideal)?;
        if !l.subalgebra(&self.nilideal)?.algebra.is_nilpotent() {
            return Err(Error::NotNilpotent {
                what: "extension ideal",
            });
        }
        let sum = self.complement.sum(&self.nilideal)?;
        if !sum.is_full() || self.complement.dim() + self.nilideal.dim() != l.dim() {
            return Err(Error::Contract {
                operation: "Extension::validate",
                detail: "complement and ideal do not span the algebra directly".into(),
            });
        }
        let computed = nilradical(l)?;
        if computed != self.nilideal {
            return Err(Error::NilradicalMismatch {
                expected: Box::new(self.nilideal.clone()),
                computed: Box::new(computed),
            });
        }
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// The structure constants induced on the ideal.
    pub fn ideal_algebra(&self) -> Result<LieAlgebra> {
        Ok(self.total.subalgebra(&self.nilideal)?.algebra)
    }
}

/// `span(gens) ⋉ N`, rejected unless its nilradical is exactly `N`.
pub fn extend_by_derivations(n: &LieAlgebra, gens: Vec<Mat>) -> Result<Extension> {
    for (g, m) in gens.iter().enumerate() {
        if m.rows() != n.dim() || m.cols() != n.dim() {
            return Err(Error::DimensionMismatch {
                expected: n.dim(),
                found: m.rows(),
            });
        }
        if let Some((x, y)) = crate::liecore::leibniz_violation(n, m) {
            return Err(Error::NotADerivation { generator: g, x, y });
        }
    }
    let d = LinearLieAlgebra::spanned_by(n, gens.clone())?;
    let mut e = semidirect_sum(&d, n)?;
    e.provenance = Provenance::Derivations { generators: gens };
    e.validate()
}

/// `L` seen as an extension of its nilradical, with a coordinate complement.
pub fn extension_of_nilradical(l: &LieAlgebra) -> Result<Extension> {
    let nil = nilradical(l)?;
    let complement = nil.complement();
    Extension::new_unvalidated(l.clone(), nil, complement, Provenance::Nilradical).validate()
}

/// `T ⋉ N` for a maximal torus `T` of `Der(N)`.
pub fn standard_solvable_extension(n: &LieAlgebra) -> Result<Extension> {
    standard_solvable_extension_with(n, &mut default_rng())
}

pub fn standard_solvable_extension_with<R: Rng + ?Sized>(
    n: &LieAlgebra,
    rng: &mut R,
) -> Result<Extension> {
    if !n.is_nilpotent() {
        return Err(Error::NotNilpotent {
            what: "input of standard_solvable_extension",
        });
    }
    let t = maximal_torus_with(&derivations(n), rng)?;
    let mut e = semidirect_sum(&t, n)?;
    e.provenance = Provenance::StandardTorus {
        torus: t.basis().to_vec(),
    };
    e.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Mat;

    fn h3() -> LieAlgebra {
        LieAlgebra::from_one_based(3, &[((1, 2), &[(3, 1)])])
    }

    #[test]
    fn nilpotent_derivation_alone_is_rejected() {
        let n = LieAlgebra::abelian(2);
        let r = extend_by_derivations(&n, vec![Mat::from_i64(2, 2, &[0, 1, 0, 0])]);
        match r {
            Err(Error::NilradicalMismatch { computed, .. }) => assert!(computed.is_full()),
            other => panic!("expected nilradical mismatch, got {other:?}"),
        }
    }

    #[test]
    fn non_derivation_is_rejected() {
        let r = extend_by_derivations(&h3(), vec![Mat::unit(3, 3, 0, 0)]);
        assert!(matches!(
            r,
            Err(Error::NotADerivation {
                generator: 0,
                x: 0,
                y: 1
            })
        ));
    }

    #[test]
    fn scalar_extension_of_plane() {
        let e = extend_by_derivations(&LieAlgebra::abelian(2), vec![Mat::identity(2)]).unwrap();
        assert!(e.is_validated());
        assert_eq!(e.total.dim(), 3);
        assert_eq!(e.nilideal, Subspace::coordinate_span(3, [0, 1]));
    }

    #[test]
    fn standard_extensions() {
        let e = standard_solvable_extension(&h3()).unwrap();
        assert_eq!(e.total.dim(), 5);
        let e = standard_solvable_extension(&LieAlgebra::abelian(3)).unwrap();
        assert_eq!(e.total.dim(), 6);
        let r2 = LieAlgebra::from_one_based(2, &[((1, 2), &[(2, 1)])]);
        assert!(matches!(
            standard_solvable_extension(&r2),
            Err(Error::NotNilpotent { .. })
        ));
    }
}
