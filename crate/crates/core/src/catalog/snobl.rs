use serde::Serialize;

use super::favre7;
use crate::error::Result;
use crate::exactlin::Mat;
use crate::extensions::{extend_by_derivations, malcev_split_solvable, Extension};
use crate::liecore::{direct_sum, LieAlgebra};
use crate::structure::{derivations, fingerprint, Fingerprint};

/// Two solvable extensions of `N = k ⊕ N₇` with the same nilradical and the same
/// dimension that are not isomorphic.
#[derive(Clone, Debug)]
pub struct SnoblCounterexample {
    pub n: LieAlgebra,
    /// Adjoins `X`, the identity on `k` and zero on `N₇`.
    pub r1: Extension,
    /// Adjoins `X + d`, with `d` sending `X1` to the central `X7`.
    pub r2: Extension,
    pub certificates: SnoblCertificates,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnoblCertificates {
    pub dim_r: [usize; 2],
    pub dim_m: [usize; 2],
    pub dim_der: [usize; 2],
    pub fingerprints: [Fingerprint; 2],
    pub non_isomorphic: bool,
}

pub fn build_snobl_counterexample() -> Result<SnoblCounterexample> {
    let n7 = favre7()?.algebra;
    let mut n = direct_sum(&LieAlgebra::abelian(1), &n7);
    let mut names = vec!["K".to_string()];
    names.extend(n7.labels().iter().cloned());
    n.set_labels(names);
    let dim = n.dim();
    // coordinates: K = 0, X1 = 1, ..., X7 = dim - 1
    let x = Mat::unit(dim, dim, 0, 0);
    let d = Mat::unit(dim, dim, dim - 1, 1);
    let r1 = extend_by_derivations(&n, vec![x.clone()])?;
    let r2 = extend_by_derivations(&n, vec![&x + &d])?;
    let dim_m = [
        malcev_split_solvable(&r1.total)?.m.dim(),
        malcev_split_solvable(&r2.total)?.m.dim(),
    ];
    let dim_der = [derivations(&r1.total).dim(), derivations(&r2.total).dim()];
    let fingerprints = [fingerprint(&r1.total)?, fingerprint(&r2.total)?];
    let certificates = SnoblCertificates {
        dim_r: [r1.total.dim(), r2.total.dim()],
        dim_m,
        dim_der,
        non_isomorphic: fingerprints[0] != fingerprints[1],
        fingerprints,
    };
    Ok(SnoblCounterexample {
        n,
        r1,
        r2,
        certificates,
    })
}
