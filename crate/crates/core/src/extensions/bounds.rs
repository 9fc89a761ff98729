use serde::Serialize;

use super::Extension;
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liecore::{direct_sum, LieAlgebra};
use crate::structure::{derivations, toric_rank};

/// `r_t(L/N) ≤ dim N/[N,N]`, and for solvable `L` also `dim L/N ≤ dim N/[N,N]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankBoundReport {
    pub toric_rank: usize,
    /// Minimal number of generators of `N`, `dim N - dim [N,N]`.
    pub generators: usize,
    pub holds: bool,
    /// `(dim L/N, dim L/N ≤ generators)` when `L` is solvable.
    pub solvable_bound: Option<(usize, bool)>,
}

pub fn verify_rank_bound(e: &Extension) -> Result<RankBoundReport> {
    if !e.is_validated() {
        return Err(Error::Contract {
            operation: "verify_rank_bound",
            detail: "extension has not been validated".into(),
        });
    }
    let l = &e.total;
    let rt = toric_rank(l, &e.nilideal)?;
    let nil = e.ideal_algebra()?;
    let g = nil.dim() - nil.derived_algebra().dim();
    let solvable_bound = l.is_solvable().then(|| {
        let q = l.dim() - e.nilideal.dim();
        (q, q <= g)
    });
    Ok(RankBoundReport {
        toric_rank: rt,
        generators: g,
        holds: rt <= g,
        solvable_bound,
    })
}

/// Both sides of
/// `dim Der(A⊕B) = dim Der A + dim Der B + dim(A/[A,A])·dim Z(B) + dim(B/[B,B])·dim Z(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TogoReport {
    pub der_sum: usize,
    pub der_a: usize,
    pub der_b: usize,
    /// Maps `A/[A,A] → Z(B)`.
    pub cross_ab: usize,
    /// Maps `B/[B,B] → Z(A)`.
    pub cross_ba: usize,
    pub holds: bool,
}

impl TogoReport {
    pub fn predicted(&self) -> usize {
        self.der_a + self.der_b + self.cross_ab + self.cross_ba
    }
}

pub fn togo_dim_check(a: &LieAlgebra, b: &LieAlgebra) -> TogoReport {
    let abelianization = |l: &LieAlgebra| l.dim() - l.derived_algebra().dim();
    let der_sum = derivations(&direct_sum(a, b)).dim();
    let der_a = derivations(a).dim();
    let der_b = derivations(b).dim();
    let cross_ab = abelianization(a) * b.center().dim();
    let cross_ba = abelianization(b) * a.center().dim();
    TogoReport {
        der_sum,
        der_a,
        der_b,
        cross_ab,
        cross_ba,
        holds: der_sum == der_a + der_b + cross_ab + cross_ba,
    }
}

/// Kernel of the action of a subalgebra `S` on an ideal `N`; the extension is exact
/// when the kernel is trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub kernel: Subspace,
    pub exact: bool,
}

pub fn exactness_check(l: &LieAlgebra, s: &Subspace, n: &Subspace) -> Result<ExactnessReport> {
    l.check_ideal(n)?;
    let centralizer = l.centralizer(n)?;
    let kernel = s.intersection(&centralizer)?;
    Ok(ExactnessReport {
        exact: kernel.is_zero(),
        kernel,
    })
}
