use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::ops::sparse;
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Subspace};
use crate::extensions::{Extension, Provenance};
use crate::structure::LinearLieAlgebra;

/// First basis pair `(i, j)` with `D[e_i, e_j] ≠ [D e_i, e_j] + [e_i, D e_j]`.
pub fn leibniz_violation(l: &LieAlgebra, d: &Mat) -> Option<(usize, usize)> {
    let n = l.dim();
    assert!(
        d.rows() == n && d.cols() == n,
        "derivation must be dim x dim"
    );
    let images: Vec<Vec<_>> = (0..n).map(|i| d.col(i)).collect();
    let units: Vec<Vec<_>> = (0..n).map(|i| crate::exactlin::unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&l.bracket_basis(i, j));
            let a = l.bracket(&images[i], &units[j]);
            let b = l.bracket(&units[i], &images[j]);
            if lhs
                .iter()
                .zip(a.iter().zip(&b))
                .any(|(x, (y, z))| !(x - y - z).is_zero())
            {
                return Some((i, j));
            }
        }
    }
    None
}

/// `D ⋉ N`. The basis of `N` comes first, followed by one vector `t_a` per basis
/// matrix of `D`, with `[t_a, x] = D_a x` and `[t_a, t_b]` the commutator.
///
/// Every basis matrix is checked for the Leibniz rule on `N`; `D` is closed under
/// commutators by construction of [`LinearLieAlgebra`].
pub fn semidirect_sum(d: &LinearLieAlgebra, n: &LieAlgebra) -> Result<Extension> {
    let nd = n.dim();
    if d.ambient().dim() != nd {
        return Err(Error::DimensionMismatch {
            expected: nd,
            found: d.ambient().dim(),
        });
    }
    for (g, m) in d.basis().iter().enumerate() {
        if let Some((x, y)) = leibniz_violation(n, m) {
            return Err(Error::NotADerivation { generator: g, x, y });
        }
    }
    let k = d.dim();
    let mut labels = n.labels().to_vec();
    labels.extend((1..=k).map(|a| format!("t{a}")));
    let mut brackets = Vec::new();
    for (i, j, t) in n.nonzero_brackets() {
        brackets.push((i, j, t.to_vec()));
    }
    for (a, m) in d.basis().iter().enumerate() {
        for j in 0..nd {
            let image = sparse(m.col(j));
            if !image.is_empty() {
                brackets.push((nd + a, j, image));
            }
        }
    }
    for (a, b, t) in d.algebra().nonzero_brackets() {
        brackets.push((
            nd + a,
            nd + b,
            t.iter().map(|(c, v)| (nd + c, v.clone())).collect(),
        ));
    }
    let total = LieAlgebra::from_brackets(labels, brackets)?;
    if let Some(&t) = total.verify_structure().violations.first() {
        return Err(Error::Contract {
            operation: "semidirect_sum",
            detail: format!(
                "result violates Jacobi at basis triple ({}, {}, {})",
                t.0 + 1,
                t.1 + 1,
                t.2 + 1
            ),
        });
    }
    let dim = nd + k;
    Ok(Extension::new_unvalidated(
        total,
        Subspace::coordinate_span(dim, 0..nd),
        Subspace::coordinate_span(dim, nd..dim),
        Provenance::Semidirect {
            derivations: d.basis().to_vec(),
        },
    ))
}
