//! Structural analysis: derivation algebras, Cartan subalgebras, Fitting
//! decompositions, nilradicals, maximal tori and isomorphism invariants.

mod cartan;
mod fingerprint;
mod linear;
mod radical;

pub use cartan::{
    cartan_subalgebra, cartan_subalgebra_with, engel_subalgebra, fitting_decomposition,
    generalized_image, generalized_kernel, Fitting, REGULAR_POOL,
};
pub use fingerprint::{fingerprint, Fingerprint};
pub use linear::{derivations, inner_derivations, LinearLieAlgebra};
pub use radical::{maximal_torus, maximal_torus_with, nilradical, nilradical_with, toric_rank};

use crate::error::{Error, Result};
use crate::liecore::LieAlgebra;

/// A nilpotent algebra whose derivation algebra is nilpotent.
pub fn is_characteristically_nilpotent(l: &LieAlgebra) -> Result<bool> {
    if !l.is_nilpotent() {
        return Err(Error::NotNilpotent {
            what: "input of is_characteristically_nilpotent",
        });
    }
    Ok(derivations(l).is_nilpotent_algebra())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_nilpotency_small_cases() {
        let h3 = LieAlgebra::from_one_based(3, &[((1, 2), &[(3, 1)])]);
        assert!(!is_characteristically_nilpotent(&h3).unwrap());
        assert!(!is_characteristically_nilpotent(&LieAlgebra::abelian(2)).unwrap());
        let r2 = LieAlgebra::from_one_based(2, &[((1, 2), &[(2, 1)])]);
        assert!(matches!(
            is_characteristically_nilpotent(&r2),
            Err(Error::NotNilpotent { .. })
        ));
    }
}
