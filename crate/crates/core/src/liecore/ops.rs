use num_traits::Zero;

use super::algebra::{LieAlgebra, Vector};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, unit_vector, Frame, Mat, Rat, Subspace};

/// Which descending series to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// An algebra induced on a subspace, with the frame giving its basis in the parent.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: LieAlgebra,
    pub frame: Frame,
}

impl Subalgebra {
    /// Embeds coordinates of the subalgebra into the parent.
    pub fn embed(&self, coords: &[Rat]) -> Vector {
        self.frame.combine(coords)
    }

    /// Coordinates of a parent vector, if it lies in the subalgebra.
    pub fn restrict(&self, v: &[Rat]) -> Option<Vector> {
        self.frame.coords(v)
    }

    /// The image of a subspace of the subalgebra inside the parent.
    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        Subspace::span(
            self.frame.span().ambient_dim(),
            s.vectors().map(|v| self.embed(v)),
        )
    }

    /// Matrix whose columns are the frame vectors (subalgebra -> parent).
    pub fn inclusion(&self) -> Mat {
        self.frame.vectors().transpose()
    }
}

/// Quotient algebra `L / I` with its projection `L -> L/I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim(L/I) x dim L`, surjective with kernel `I`.
    pub projection: Mat,
    /// Parent coordinates whose unit vectors form the chosen complement of `I`.
    pub complement: Vec<usize>,
}

impl LieAlgebra {
    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[A, B]`: span of the brackets of basis vectors.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let ads: Vec<Mat> = a.vectors().map(|x| self.ad(x)).collect();
        let mut out = Vec::with_capacity(a.dim() * b.dim());
        for ad in &ads {
            for y in b.vectors() {
                out.push(ad.mul_vec(y));
            }
        }
        Ok(Subspace::span(self.dim(), out))
    }

    pub fn derived_algebra(&self) -> Subspace {
        let l = self.full_space();
        self.product_space(&l, &l).expect("same ambient")
    }

    /// The series starting at `L`, ending at its first repeated term (so the last
    /// entry is where it stabilizes). At most `dim + 1` terms.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let l = self.full_space();
        let mut out = vec![l.clone()];
        for _ in 0..=self.dim() {
            let prev = out.last().expect("nonempty");
            let next = match kind {
                SeriesKind::LowerCentral => self.product_space(&l, prev),
                SeriesKind::Derived => self.product_space(prev, prev),
            }
            .expect("same ambient");
            if &next == prev {
                break;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                break;
            }
        }
        out
    }

    pub fn series_dims(&self, kind: SeriesKind) -> Vec<usize> {
        self.series(kind).iter().map(Subspace::dim).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral)
            .last()
            .is_some_and(Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived)
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        // [x, s] = -ad(s) x, so stack the ad(s) matrices and take the kernel.
        let mut rows = Vec::new();
        for v in s.vectors() {
            let a = self.ad(v);
            rows.extend(a.row_vectors().map(<[Rat]>::to_vec));
        }
        Ok(kernel(&Mat::from_rows(n, rows)))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full_space()).expect("same ambient")
    }

    /// `{x : [x, S] ⊆ S}`.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        let eq = s.equations();
        // x ↦ eq · [x, s_j] = -eq · ad(s_j) x must vanish for each basis vector s_j.
        let mut rows = Vec::new();
        for v in s.vectors() {
            let m = &eq * &self.ad(v);
            rows.extend(m.row_vectors().map(<[Rat]>::to_vec));
        }
        Ok(kernel(&Mat::from_rows(n, rows)))
    }

    /// Smallest subalgebra containing `V`: iterate `V ← V + [V, V]`.
    pub fn generated_subalgebra(&self, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(v)?;
        let mut cur = v.clone();
        loop {
            let next = cur.sum(&self.product_space(&cur, &cur)?)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Ok, or the first pair of basis indices of `S` whose bracket leaves `S`.
    pub fn check_subalgebra(&self, s: &Subspace) -> Result<()> {
        self.check_subspace(s)?;
        let basis: Vec<&[Rat]> = s.vectors().collect();
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate().skip(a + 1) {
                if !s.contains(&self.bracket(x, y)) {
                    return Err(Error::NotASubalgebra(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.check_subalgebra(s).is_ok()
    }

    /// Ok, or the witness `(basis index of L, basis index of I)` with `[e_i, v_j] ∉ I`.
    pub fn check_ideal(&self, ideal: &Subspace) -> Result<()> {
        self.check_subspace(ideal)?;
        for i in 0..self.dim() {
            let ad = self.ad_basis(i);
            for (j, v) in ideal.vectors().enumerate() {
                if !ideal.contains(&ad.mul_vec(v)) {
                    return Err(Error::NotAnIdeal {
                        algebra_elem: i,
                        ideal_elem: j,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> bool {
        self.check_ideal(ideal).is_ok()
    }

    /// Structure constants induced on a subalgebra, in its echelon basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Subalgebra> {
        let frame = Frame::new(self.dim(), s.vectors().map(<[Rat]>::to_vec).collect())?;
        self.subalgebra_on(frame)
    }

    /// Structure constants induced on a subalgebra spanned by the given frame.
    pub fn subalgebra_on(&self, frame: Frame) -> Result<Subalgebra> {
        self.check_subspace(frame.span())?;
        let k = frame.len();
        let vecs: Vec<Vector> = frame.vectors().row_vectors().map(<[Rat]>::to_vec).collect();
        let mut alg = LieAlgebra::abelian(k);
        for a in 0..k {
            for b in a + 1..k {
                let c = frame
                    .coords(&self.bracket(&vecs[a], &vecs[b]))
                    .ok_or(Error::NotASubalgebra(a, b))?;
                alg.set_bracket(a, b, sparse(c))?;
            }
        }
        Ok(Subalgebra {
            algebra: alg,
            frame,
        })
    }

    /// `L / I` on the complement spanned by the unit vectors at the non-pivot
    /// coordinates of `I`'s echelon basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_ideal(ideal)?;
        let n = self.dim();
        let mut is_pivot = vec![false; n];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = complement.len();
        // Reducing e_j modulo I clears every pivot coordinate; what remains sits on the
        // complement coordinates.
        let reduce = |v: &[Rat]| -> Vector {
            let mut r = v.to_vec();
            for (row, &p) in ideal.vectors().zip(ideal.pivots()) {
                if r[p].is_zero() {
                    continue;
                }
                let f = r[p].clone();
                for (x, b) in r.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x -= &f * b;
                    }
                }
            }
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let mut projection = Mat::zeros(q, n);
        for j in 0..n {
            projection.set_col(j, &reduce(&unit_vector(n, j)));
        }
        let mut labels = Vec::with_capacity(q);
        for &c in &complement {
            labels.push(self.labels()[c].clone());
        }
        let mut alg = LieAlgebra::with_labels(labels);
        for a in 0..q {
            for b in a + 1..q {
                let v = reduce(&self.bracket_basis(complement[a], complement[b]));
                alg.set_bracket(a, b, sparse(v))?;
            }
        }
        Ok(Quotient {
            algebra: alg,
            projection,
            complement,
        })
    }

    /// `κ(x, y) = tr(ad x · ad y)` as a Gram matrix on the basis.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// `{x : κ(x, [L, L]) = 0}`, the solvable radical in characteristic zero.
    pub fn killing_radical(&self) -> Subspace {
        let k = self.killing_form();
        let d = self.derived_algebra();
        let rows: Vec<Vector> = d.vectors().map(|y| k.mul_vec(y)).collect();
        kernel(&Mat::from_rows(self.dim(), rows))
    }
}

/// `L1 ⊕ L2` with the basis of `L1` first.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let (m, n) = (a.dim(), b.dim());
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend(b.labels().iter().cloned());
    let mut brackets = Vec::new();
    for (i, j, t) in a.nonzero_brackets() {
        brackets.push((i, j, t.to_vec()));
    }
    for (i, j, t) in b.nonzero_brackets() {
        brackets.push((
            i + m,
            j + m,
            t.iter().map(|(k, c)| (k + m, c.clone())).collect(),
        ));
    }
    let out = LieAlgebra::from_brackets(labels, brackets).expect("disjoint index ranges");
    debug_assert_eq!(out.dim(), m + n);
    out
}

pub(crate) fn sparse(v: Vector) -> Vec<(usize, Rat)> {
    v.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
