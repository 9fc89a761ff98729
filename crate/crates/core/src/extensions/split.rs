use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{independent_modulo, is_semisimple, semisimple_part, Mat, Subspace};
use crate::liecore::{semidirect_sum, LieAlgebra};
use crate::random::default_rng;
use crate::structure::{
    cartan_subalgebra_with, inner_derivations, nilradical_with, LinearLieAlgebra,
};

/// `M = T₀ ⋉ L` with `L` embedded as the first `dim L` coordinates.
#[derive(Clone, Debug)]
pub struct SplittingResult {
    pub m: LieAlgebra,
    /// `dim M x dim L`, an injective homomorphism onto an ideal.
    pub embedding: Mat,
    pub torus_part: Subspace,
    pub added_dim: usize,
    /// The adjoined derivations of `L`, one per basis vector of `torus_part`.
    pub torus_derivations: Vec<Mat>,
}

/// `span{S(ad h) : h ∈ H}` for a Cartan subalgebra `H`, as flattened matrices.
fn semisimple_span<R: Rng + ?Sized>(l: &LieAlgebra, rng: &mut R) -> Result<Subspace> {
    let n = l.dim();
    let h = cartan_subalgebra_with(l, rng);
    let parts = h
        .vectors()
        .map(|v| semisimple_part(&l.ad(v)).map(|m| m.to_vector()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(n * n, parts))
}

pub fn malcev_split_solvable(l: &LieAlgebra) -> Result<SplittingResult> {
    malcev_split_solvable_with(l, &mut default_rng())
}

/// Adjoins the semisimple parts of `ad H` that are not already inner.
///
/// With `Σ = span{S(ad h) : h ∈ H}`, `T₀` is the first subfamily of `Σ`'s echelon basis
/// that is independent modulo `ad L`, and `M = T₀ ⋉ L`. The output is certified:
/// every `ad_M t` for `t` in `T₀` is semisimple and nonzero, and `M` itself is split,
/// i.e. its own `Σ_M` lies in `ad M` and `dim Σ_M + dim nil(M) = dim M`.
pub fn malcev_split_solvable_with<R: Rng + ?Sized>(
    l: &LieAlgebra,
    rng: &mut R,
) -> Result<SplittingResult> {
    if !l.is_solvable() {
        return Err(Error::NotSolvable {
            what: "input of malcev_split_solvable",
        });
    }
    let n = l.dim();
    let sigma = semisimple_span(l, rng)?;
    let inner = inner_derivations(l);
    let rows: Vec<Vec<_>> = sigma.vectors().map(<[_]>::to_vec).collect();
    let picked = independent_modulo(&inner, &rows);
    let mats: Vec<Mat> = picked
        .iter()
        .map(|&i| Mat::from_vector(n, n, &rows[i]))
        .collect();
    let t0 = LinearLieAlgebra::of_derivations(l, mats.clone())?;
    let ext = semidirect_sum(&t0, l)?;
    let m = ext.total;
    let k = mats.len();
    let mut embedding = Mat::zeros(n + k, n);
    for i in 0..n {
        embedding[(i, i)] = crate::exactlin::one();
    }
    let result = SplittingResult {
        m,
        embedding,
        torus_part: ext.complement,
        added_dim: k,
        torus_derivations: mats,
    };
    certify(l, &result, rng)?;
    Ok(result)
}

fn certify<R: Rng + ?Sized>(l: &LieAlgebra, s: &SplittingResult, rng: &mut R) -> Result<()> {
    let fail = |detail: String| Error::Contract {
        operation: "malcev_split_solvable",
        detail,
    };
    let m = &s.m;
    let n = l.dim();
    let image = Subspace::coordinate_span(m.dim(), 0..n);
    m.check_ideal(&image)?;
    for i in 0..n {
        for j in i + 1..n {
            if s.embedding.mul_vec(&l.bracket_basis(i, j))
                != m.bracket(&s.embedding.col(i), &s.embedding.col(j))
            {
                return Err(fail(format!(
                    "embedding is not a homomorphism on ({i}, {j})"
                )));
            }
        }
    }
    for t in s.torus_part.vectors() {
        let ad = m.ad(t);
        if ad.is_zero() || !is_semisimple(&ad)? {
            return Err(fail("adjoined element is not nontrivial semisimple".into()));
        }
    }
    let sigma_m = semisimple_span(m, rng)?;
    let inner_m = inner_derivations(m);
    if !sigma_m.is_subspace_of(&inner_m) {
        return Err(fail("the extended algebra is not split".into()));
    }
    let nil = nilradical_with(m, rng)?;
    if sigma_m.dim() + nil.dim() != m.dim() {
        return Err(fail(format!(
            "torus of dimension {} does not complement the nilradical of dimension {} in {}",
            sigma_m.dim(),
            nil.dim(),
            m.dim()
        )));
    }
    Ok(())
}

/// `L` equals its own Malcev splitting.
pub fn is_split_solvable(l: &LieAlgebra) -> Result<bool> {
    Ok(malcev_split_solvable(l)?.added_dim == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_is_split() {
        let h3 = LieAlgebra::from_one_based(3, &[((1, 2), &[(3, 1)])]);
        let s = malcev_split_solvable(&h3).unwrap();
        assert_eq!(s.added_dim, 0);
        assert_eq!(s.m, h3);
    }

    #[test]
    fn jordan_block_action_gains_a_torus() {
        // x acts on span{y, z} by [[1, 1], [0, 1]]
        let l = LieAlgebra::from_one_based(3, &[((1, 2), &[(2, 1)]), ((1, 3), &[(2, 1), (3, 1)])]);
        let s = malcev_split_solvable(&l).unwrap();
        assert_eq!(s.added_dim, 1);
        assert_eq!(s.m.dim(), 4);
        assert!(s.m.verify_structure().is_valid());
        assert!(!is_split_solvable(&l).unwrap());
        assert_eq!(malcev_split_solvable(&s.m).unwrap().added_dim, 0);
    }

    #[test]
    fn r2_is_split() {
        let r2 = LieAlgebra::from_one_based(2, &[((1, 2), &[(2, 1)])]);
        assert!(is_split_solvable(&r2).unwrap());
    }

    #[test]
    fn non_solvable_rejected() {
        let sl2 = LieAlgebra::from_one_based(
            3,
            &[
                ((1, 2), &[(3, 1)]),
                ((3, 1), &[(1, 2)]),
                ((3, 2), &[(2, -2)]),
            ],
        );
        assert!(matches!(
            malcev_split_solvable(&sl2),
            Err(Error::NotSolvable { .. })
        ));
    }
}
