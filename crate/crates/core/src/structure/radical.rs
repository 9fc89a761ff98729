use rand::Rng;

use super::cartan::{cartan_subalgebra_with, fitting_decomposition};
use super::linear::LinearLieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{kernel, semisimple_part, Mat, Subspace};
use crate::liecore::LieAlgebra;
use crate::random::{default_rng, small_vector};

/// Number of random combinations checked for semisimplicity on a torus.
const TORUS_SAMPLES: usize = 8;

pub fn nilradical(l: &LieAlgebra) -> Result<Subspace> {
    nilradical_with(l, &mut default_rng())
}

/// The largest nilpotent ideal.
///
/// With `R` the solvable radical, `H` a Cartan subalgebra of `R` and `R = H ⊕ R_1` its
/// Fitting decomposition, the nilradical is `R_1 ⊕ {h ∈ H : S(ad_L h) = 0}`, where `S`
/// is the semisimple part; `h ↦ S(ad_L h)` is linear on `H`. The result is checked to
/// be a nilpotent ideal containing `[L, R]`.
pub fn nilradical_with<R: Rng + ?Sized>(l: &LieAlgebra, rng: &mut R) -> Result<Subspace> {
    let n = l.dim();
    if l.is_nilpotent() {
        return Ok(l.full_space());
    }
    let radical = l.killing_radical();
    let sub = l.subalgebra(&radical)?;
    let r = &sub.algebra;
    let h = cartan_subalgebra_with(r, rng);
    let fit = fitting_decomposition(r, &h)?;
    let h_vecs: Vec<Vec<_>> = h.vectors().map(|v| sub.embed(v)).collect();
    let semis: Vec<Vec<_>> = h_vecs
        .iter()
        .map(|v| semisimple_part(&l.ad(v)).map(|m| m.to_vector()))
        .collect::<Result<_>>()?;
    // columns are the images of the basis of H; the kernel gives the nilpotent part of H
    let map = Mat::from_rows(n * n, semis).transpose();
    let h_nil = kernel(&map);
    let mut out = sub.embed_subspace(&fit.one);
    for c in h_nil.vectors() {
        let mut v = vec![crate::exactlin::zero(); n];
        for (ci, hv) in c.iter().zip(&h_vecs) {
            for (x, y) in v.iter_mut().zip(hv) {
                *x += ci * y;
            }
        }
        out = out.sum(&Subspace::span(n, [v]))?;
    }
    let contract = |detail: &str| Error::Contract {
        operation: "nilradical",
        detail: detail.to_string(),
    };
    if !l.is_ideal(&out) {
        return Err(contract("result is not an ideal"));
    }
    if !l.subalgebra(&out)?.algebra.is_nilpotent() {
        return Err(contract("result is not nilpotent"));
    }
    if !l
        .product_space(&l.full_space(), &radical)?
        .is_subspace_of(&out)
    {
        return Err(contract("result does not contain [L, rad L]"));
    }
    Ok(out)
}

pub fn maximal_torus(d: &LinearLieAlgebra) -> Result<LinearLieAlgebra> {
    maximal_torus_with(d, &mut default_rng())
}

/// Semisimple parts of a Cartan subalgebra of a derivation algebra.
///
/// The output is checked to be abelian, to consist of derivations, and to be
/// semisimple on its basis and on random combinations. Maximality is not certified.
pub fn maximal_torus_with<R: Rng + ?Sized>(
    d: &LinearLieAlgebra,
    rng: &mut R,
) -> Result<LinearLieAlgebra> {
    let contract = |detail: String| Error::Contract {
        operation: "maximal_torus",
        detail,
    };
    if !d.is_derivation_algebra() {
        return Err(contract(
            "input is not flagged as a derivation algebra".into(),
        ));
    }
    let h = cartan_subalgebra_with(d.algebra(), rng);
    let parts = h
        .vectors()
        .map(|c| semisimple_part(&d.element(c)))
        .collect::<Result<Vec<_>>>()?;
    // The echelon basis of the span keeps later computations on small numbers.
    let n = d.ambient().dim();
    let span = Subspace::span(n * n, parts.iter().map(Mat::to_vector));
    let basis = span.vectors().map(|v| Mat::from_vector(n, n, v)).collect();
    let t = LinearLieAlgebra::of_derivations(d.ambient(), basis)?;
    if !t.algebra().is_abelian() {
        return Err(contract("semisimple parts do not commute".into()));
    }
    for m in t.basis() {
        if !crate::exactlin::is_semisimple(m)? {
            return Err(contract("basis element is not semisimple".into()));
        }
    }
    for _ in 0..TORUS_SAMPLES {
        let c = small_vector(rng, t.dim());
        if !crate::exactlin::is_semisimple(&t.element(&c))? {
            return Err(contract(format!("combination {c:?} is not semisimple")));
        }
    }
    Ok(t)
}

/// Dimension of a Cartan subalgebra of the reductive quotient `L / N`, where `N` must
/// be the nilradical.
pub fn toric_rank(l: &LieAlgebra, nil: &Subspace) -> Result<usize> {
    let computed = nilradical(l)?;
    if &computed != nil {
        return Err(Error::NilradicalMismatch {
            expected: Box::new(nil.clone()),
            computed: Box::new(computed),
        });
    }
    let q = l.quotient(nil)?;
    Ok(super::cartan::cartan_subalgebra(&q.algebra).dim())
}
