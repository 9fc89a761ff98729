use num_traits::{One, Zero};

use super::mat::Mat;
use super::rational::{bit_size, Rat};
use crate::error::{Error, Result};

/// Reduced row-echelon form and the pivot column of each nonzero row.
///
/// The pivot in each column is the candidate entry of smallest bit size (lowest row on
/// ties). The returned matrix has the same shape as `m`; zero rows sit at the bottom.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let cols = m.cols();
    let mut rows: Vec<Vec<Rat>> = m.row_vectors().map(|r| r.to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (bit_size(&rows[i][c]), i));
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for (x, p) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Mat::from_rows(cols, rows), pivots)
}

pub fn rank(m: &Mat) -> usize {
    rref(m).1.len()
}

/// Null space `{v : m v = 0}` as a subspace of `Q^cols`.
pub fn kernel(m: &Mat) -> Subspace {
    let n = m.cols();
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rat::zero(); n];
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, f)].clone();
        }
        vectors.push(v);
    }
    Subspace::span(n, vectors)
}

/// A subspace of `Q^n`, held as the nonzero rows of a reduced row-echelon matrix.
///
/// The representation is canonical, so two subspaces are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let rows: Vec<Vec<Rat>> = vectors.into_iter().collect();
        Subspace::row_space(&Mat::from_rows(ambient, rows))
    }

    pub fn row_space(m: &Mat) -> Self {
        let (r, pivots) = rref(m);
        Subspace {
            ambient: m.cols(),
            basis: r.take_rows(pivots.len()),
            pivots,
        }
    }

    pub fn coordinate_span(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(
            ambient,
            indices.into_iter().map(|i| unit_vector(ambient, i)),
        )
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Rat]> + '_ {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` relative to the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if v.len() != self.ambient {
            return None;
        }
        let c: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (ci, row) in c.iter().zip(self.vectors()) {
            if ci.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= ci * b;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    /// Linear combination of the basis vectors.
    pub fn combine(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.dim());
        let mut v = vec![Rat::zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(self.vectors()) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x += c * b;
                }
            }
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.vectors().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked system `x A - y B = 0`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let system = self.basis.transpose().hstack(&(-&other.basis).transpose());
        let sols = kernel(&system);
        let a = self.dim();
        Ok(Subspace::span(
            self.ambient,
            sols.vectors().map(|s| self.combine(&s[..a])),
        ))
    }

    /// Coordinate complement: the unit vectors at the non-pivot columns.
    pub fn complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        Subspace::coordinate_span(self.ambient, (0..self.ambient).filter(|&c| !is_pivot[c]))
    }

    /// Rows of a matrix whose kernel is exactly this subspace.
    pub fn equations(&self) -> Mat {
        let ann = kernel(&self.basis);
        ann.basis().clone()
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image_under(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(m.rows(), self.vectors().map(|v| m.mul_vec(v)))
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub fn column_space(m: &Mat) -> Subspace {
    Subspace::row_space(&m.transpose())
}

/// Coordinates relative to an arbitrary list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct Frame {
    vectors: Mat,
    span: Subspace,
    // rows of `span.basis()` expressed in terms of `vectors`
    transform: Mat,
}

impl Frame {
    /// Fails with the index of the first vector that depends on its predecessors.
    pub fn new(ambient: usize, vectors: Vec<Vec<Rat>>) -> Result<Frame> {
        let k = vectors.len();
        if let Some(i) = first_dependent(ambient, &vectors) {
            return Err(Error::LinearlyDependent { index: i });
        }
        let m = Mat::from_rows(ambient, vectors);
        let (r, pivots) = rref(&m.hstack(&Mat::identity(k)));
        debug_assert!(pivots.iter().take(k).all(|&p| p < ambient));
        let reduced = r.columns(0, ambient).take_rows(k);
        let transform = r.columns(ambient, ambient + k).take_rows(k);
        let span = Subspace {
            ambient,
            basis: reduced,
            pivots: pivots[..k].to_vec(),
        };
        Ok(Frame {
            vectors: m,
            span,
            transform,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vectors(&self) -> &Mat {
        &self.vectors
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c = self.span.coords(v)?;
        let k = self.len();
        Some(
            (0..k)
                .map(|j| {
                    c.iter()
                        .enumerate()
                        .filter(|(_, ci)| !ci.is_zero())
                        .map(|(i, ci)| ci * &self.transform[(i, j)])
                        .sum()
                })
                .collect(),
        )
    }

    pub fn combine(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.len());
        let mut v = vec![Rat::zero(); self.vectors.cols()];
        for (c, row) in coeffs.iter().zip(self.vectors.row_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                *x += c * b;
            }
        }
        v
    }
}

/// Index of the first vector lying in the span of the ones before it.
pub fn first_dependent(ambient: usize, vectors: &[Vec<Rat>]) -> Option<usize> {
    let mut acc = Subspace::zero(ambient);
    for (i, v) in vectors.iter().enumerate() {
        if acc.contains(v) {
            return Some(i);
        }
        acc = Subspace::span(
            ambient,
            acc.vectors().map(<[Rat]>::to_vec).chain([v.clone()]),
        );
    }
    None
}

/// Greedy selection, in order, of vectors that enlarge the span of `base` and of the
/// vectors already chosen. Returns the chosen indices.
pub fn independent_modulo(base: &Subspace, candidates: &[Vec<Rat>]) -> Vec<usize> {
    let mut acc = base.clone();
    let mut chosen = Vec::new();
    for (i, v) in candidates.iter().enumerate() {
        if !acc.contains(v) {
            acc = Subspace::span(
                acc.ambient_dim(),
                acc.vectors().map(<[Rat]>::to_vec).chain([v.clone()]),
            );
            chosen.push(i);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rational::int;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Mat {
        Mat::from_i64(rows, cols, e)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&m(2, 2, &[2, 4, 1, 2]));
        assert_eq!(r, m(2, 2, &[1, 2, 0, 0]));
        assert_eq!(p, vec![0]);

        let id = Mat::identity(4);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2, 3]));

        let (r, p) = rref(&m(2, 2, &[0, 1, 1, 0]));
        assert_eq!(r, Mat::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_prefers_small_pivots() {
        // column 0 candidates 7 and 1: the 1 is chosen, so no fractions appear
        let (r, _) = rref(&m(2, 2, &[7, 3, 1, 1]));
        assert_eq!(r, Mat::identity(2));
        let (r, p) = rref(&m(2, 3, &[6, 3, 0, 2, 1, 1]));
        let mut expected = m(2, 3, &[1, 0, 0, 0, 0, 1]);
        expected[(0, 1)] = crate::exactlin::rational::rat(1, 2);
        assert_eq!(r, expected);
        assert_eq!(p, vec![0, 2]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Mat::zeros(3, 3)), Subspace::full(3));
        assert!(kernel(&Mat::identity(3)).is_zero());
        let k = kernel(&m(1, 2, &[1, 1]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis(), &m(1, 2, &[1, -1]));
    }

    #[test]
    fn subspace_algebra_examples() {
        let e1 = Subspace::coordinate_span(2, [0]);
        let e2 = Subspace::coordinate_span(2, [1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert!(e1.intersection(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.intersection(&e1).unwrap(), e1);

        let diag = Subspace::span(2, [vec![int(1), int(1)]]);
        let c = diag.complement();
        assert_eq!(c.dim(), 1);
        assert!(diag.intersection(&c).unwrap().is_zero());
        assert_eq!(rank(&diag.basis().vstack(c.basis())), 2);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn equations_cut_out_the_subspace() {
        let s = Subspace::span(3, [vec![int(1), int(2), int(3)]]);
        let eq = s.equations();
        assert_eq!(kernel(&eq), s);
    }

    #[test]
    fn frame_coordinates() {
        let f = Frame::new(2, vec![vec![int(1), int(1)], vec![int(1), int(-1)]]).unwrap();
        let c = f.coords(&[int(3), int(1)]).unwrap();
        assert_eq!(c, vec![int(2), int(1)]);
        assert_eq!(f.combine(&c), vec![int(3), int(1)]);
        assert!(matches!(
            Frame::new(2, vec![vec![int(1), int(1)], vec![int(2), int(2)]]),
            Err(Error::LinearlyDependent { index: 1 })
        ));
    }
}
