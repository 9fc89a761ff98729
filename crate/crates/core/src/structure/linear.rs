use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{first_dependent, kernel, Frame, Mat, Rat, Subspace};
use crate::liecore::{leibniz_violation, sparse, LieAlgebra};

/// A Lie algebra of `n x n` matrices acting on an `n`-dimensional Lie algebra.
///
/// The basis matrices are linearly independent and closed under commutators; the
/// induced structure constants are those of the commutator in this basis.
#[derive(Clone, Debug)]
pub struct LinearLieAlgebra {
    ambient: LieAlgebra,
    basis: Vec<Mat>,
    frame: Frame,
    algebra: LieAlgebra,
    derivations: bool,
}

impl LinearLieAlgebra {
    /// Checks independence and commutator closure.
    pub fn new(ambient: &LieAlgebra, basis: Vec<Mat>) -> Result<Self> {
        let n = ambient.dim();
        for m in &basis {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: if m.rows() != n { m.rows() } else { m.cols() },
                });
            }
        }
        let frame = Frame::new(n * n, basis.iter().map(Mat::to_vector).collect())?;
        let k = basis.len();
        let mut algebra = LieAlgebra::abelian(k);
        for a in 0..k {
            for b in a + 1..k {
                let c = frame
                    .coords(&basis[a].commutator(&basis[b]).to_vector())
                    .ok_or(Error::NotClosed(a, b))?;
                algebra.set_bracket(a, b, sparse(c))?;
            }
        }
        Ok(LinearLieAlgebra {
            ambient: ambient.clone(),
            basis,
            frame,
            algebra,
            derivations: false,
        })
    }

    /// Like [`LinearLieAlgebra::new`], additionally checking the Leibniz rule for every
    /// basis matrix on every basis pair of the ambient algebra.
    pub fn of_derivations(ambient: &LieAlgebra, basis: Vec<Mat>) -> Result<Self> {
        let mut out = LinearLieAlgebra::new(ambient, basis)?;
        for (g, m) in out.basis.iter().enumerate() {
            if let Some((x, y)) = leibniz_violation(ambient, m) {
                return Err(Error::NotADerivation { generator: g, x, y });
            }
        }
        out.derivations = true;
        Ok(out)
    }

    /// Keeps the first maximal independent subfamily of `mats`, in order.
    pub fn spanned_by(ambient: &LieAlgebra, mats: Vec<Mat>) -> Result<Self> {
        let n = ambient.dim();
        let mut kept: Vec<Mat> = Vec::new();
        let mut vecs = Vec::new();
        for m in mats {
            vecs.push(m.to_vector());
            if first_dependent(n * n, &vecs).is_some() {
                vecs.pop();
            } else {
                kept.push(m);
            }
        }
        LinearLieAlgebra::new(ambient, kept)
    }

    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Structure constants of the commutator in the chosen basis.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn is_derivation_algebra(&self) -> bool {
        self.derivations
    }

    /// The span inside `gl(n)`, matrices flattened row by row.
    pub fn span(&self) -> &Subspace {
        self.frame.span()
    }

    pub fn coords(&self, m: &Mat) -> Option<Vec<Rat>> {
        self.frame.coords(&m.to_vector())
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.coords(m).is_some()
    }

    /// The matrix with the given coordinates.
    pub fn element(&self, coords: &[Rat]) -> Mat {
        let n = self.ambient.dim();
        Mat::from_vector(n, n, &self.frame.combine(coords))
    }

    /// Nilpotent as an abstract Lie algebra (its elements need not be nilpotent matrices).
    pub fn is_nilpotent_algebra(&self) -> bool {
        self.algebra.is_nilpotent()
    }
}

/// `Der(L)`: the solution space of `D[x,y] = [Dx,y] + [x,Dy]` on basis pairs.
///
/// Unknown `D[r][c]` sits at index `r * n + c`; the basis is the echelon basis of
/// the solution space, so it is canonical for a given structure-constant table.
pub fn derivations(l: &LieAlgebra) -> LinearLieAlgebra {
    let n = l.dim();
    let br: Vec<Vec<Vec<Rat>>> = (0..n)
        .map(|i| (0..n).map(|j| l.bracket_basis(i, j)).collect())
        .collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                for r in 0..n {
                    if !br[i][j][r].is_zero() {
                        row[k * n + r] += &br[i][j][r];
                    }
                }
                for m in 0..n {
                    if !br[m][j][k].is_zero() {
                        row[m * n + i] -= &br[m][j][k];
                    }
                    if !br[i][m][k].is_zero() {
                        row[m * n + j] -= &br[i][m][k];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = kernel(&Mat::from_rows(n * n, rows));
    let basis: Vec<Mat> = sol.vectors().map(|v| Mat::from_vector(n, n, v)).collect();
    let mut out = LinearLieAlgebra::new(l, basis).expect("derivations form a Lie algebra");
    out.derivations = true;
    out
}

/// `IDer(L) = span{ad e_i}` as a subspace of flattened `n x n` matrices.
pub fn inner_derivations(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::span(n * n, (0..n).map(|i| l.ad_basis(i).to_vector()))
}
