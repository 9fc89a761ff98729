use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{int, Mat, Rat};

/// Coordinates of an element with respect to the basis of its algebra.
pub type Vector = Vec<Rat>;

/// `[e_i, e_j] = sum c e_k` as `(i, j, [(k, c), ...])`.
pub type Bracket = (usize, usize, Vec<(usize, Rat)>);

/// A finite-dimensional Lie algebra over the rationals given by structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored, so antisymmetry holds by
/// construction; the Jacobi identity is checked by [`LieAlgebra::verify_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `table[pair_index(i, j)]` lists the nonzero `(k, c)` with `[e_i, e_j] = sum c e_k`,
    /// sorted by `k`.
    table: Vec<Vec<(usize, Rat)>>,
}

/// Jacobi violations found by [`LieAlgebra::verify_structure`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JacobiReport {
    pub violations: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// The abelian algebra with the given basis labels.
    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        LieAlgebra {
            labels,
            table: vec![Vec::new(); n * n.saturating_sub(1) / 2],
        }
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra::with_labels(default_labels(n))
    }

    /// Builds an algebra from 0-based brackets `(i, j, [(k, c), ...])`. Each unordered
    /// pair may appear at most once; `(j, i)` is read as `-[e_i, e_j]`.
    pub fn from_brackets(labels: Vec<String>, brackets: Vec<Bracket>) -> Result<Self> {
        let mut alg = LieAlgebra::with_labels(labels);
        let n = alg.dim();
        let mut seen = vec![false; alg.table.len()];
        for (i, j, terms) in brackets {
            if i == j || i >= n || j >= n {
                return Err(Error::BadBracketIndex { i, j });
            }
            let (a, b) = (i.min(j), i.max(j));
            let idx = pair_index(n, a, b);
            if seen[idx] {
                return Err(Error::DuplicateBracket { i: a, j: b });
            }
            seen[idx] = true;
            alg.set_bracket(i, j, terms)?;
        }
        Ok(alg)
    }

    /// Convenience constructor with 1-based indices and integer coefficients, the
    /// way tables are usually printed: `((1, 2), &[(3, 1)])` means `[e1, e2] = e3`.
    #[allow(clippy::type_complexity)]
    pub fn from_one_based(n: usize, brackets: &[((usize, usize), &[(usize, i64)])]) -> Self {
        let b = brackets
            .iter()
            .map(|&((i, j), terms)| {
                (
                    i - 1,
                    j - 1,
                    terms.iter().map(|&(k, c)| (k - 1, int(c))).collect(),
                )
            })
            .collect();
        LieAlgebra::from_brackets(default_labels(n), b).expect("well-formed literal table")
    }

    /// Sets `[e_i, e_j]`, overwriting any previous value.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: Vec<(usize, Rat)>) -> Result<()> {
        let n = self.dim();
        if i == j || i >= n || j >= n || terms.iter().any(|(k, _)| *k >= n) {
            return Err(Error::BadBracketIndex { i, j });
        }
        let mut dense = vec![Rat::zero(); n];
        for (k, c) in terms {
            dense[k] += c;
        }
        if i > j {
            dense.iter_mut().for_each(|c| *c = -&*c);
        }
        let sparse = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let idx = pair_index(n, i.min(j), i.max(j));
        self.table[idx] = sparse;
        Ok(())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Stored brackets `(i, j, terms)` with `i < j` and nonzero terms.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rat)])> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.table[pair_index(n, i, j)].as_slice()))
            .filter(|(_, _, t)| !t.is_empty())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        if i == j {
            return out;
        }
        let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        for (k, c) in &self.table[pair_index(n, a, b)] {
            out[*k] = if neg { -c } else { c.clone() };
        }
        out
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vector {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "vector length must match dim");
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i == j || yj.is_zero() {
                    continue;
                }
                let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
                let terms = &self.table[pair_index(n, a, b)];
                if terms.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in terms {
                    let t = &xy * c;
                    if neg {
                        out[*k] -= t;
                    } else {
                        out[*k] += t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x`: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Rat]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
                for (k, c) in &self.table[pair_index(n, a, b)] {
                    let t = xi * c;
                    if neg {
                        m[(*k, j)] -= t;
                    } else {
                        m[(*k, j)] += t;
                    }
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            if i == j {
                continue;
            }
            m.set_col(j, &self.bracket_basis(i, j));
        }
        m
    }

    /// Every basis triple `i < j < k` violating
    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0`.
    pub fn verify_structure(&self) -> JacobiReport {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = ads[i].mul_vec(&self.bracket_basis(j, k));
                    let b = ads[j].mul_vec(&self.bracket_basis(k, i));
                    let c = ads[k].mul_vec(&self.bracket_basis(i, j));
                    if a.iter()
                        .zip(&b)
                        .zip(&c)
                        .any(|((x, y), z)| !(x + y + z).is_zero())
                    {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    /// Errors with the first violating triple.
    pub fn validate(&self) -> Result<()> {
        match self.verify_structure().violations.first() {
            Some(&t) => Err(Error::Jacobi(t)),
            None => Ok(()),
        }
    }

    /// Structure constants in the basis `f_j = sum_i p[i][j] e_i` (columns of `p`).
    pub fn change_basis(&self, p: &Mat) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p.inverse().ok_or(Error::Contract {
            operation: "change_basis",
            detail: "basis change matrix is singular".into(),
        })?;
        let cols: Vec<Vector> = (0..n).map(|j| p.col(j)).collect();
        let mut out = LieAlgebra::abelian(n);
        for a in 0..n {
            for b in a + 1..n {
                let v = inv.mul_vec(&self.bracket(&cols[a], &cols[b]));
                let terms = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                out.set_bracket(a, b, terms)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn heisenberg3() -> LieAlgebra {
        LieAlgebra::from_one_based(3, &[((1, 2), &[(3, 1)])])
    }

    #[test]
    fn antisymmetry_by_construction() {
        let h = heisenberg3();
        assert_eq!(h.bracket_basis(0, 1), vec![int(0), int(0), int(1)]);
        assert_eq!(h.bracket_basis(1, 0), vec![int(0), int(0), int(-1)]);
        assert_eq!(h.bracket_basis(2, 2), vec![int(0); 3]);
    }

    #[test]
    fn duplicate_and_bad_brackets_rejected() {
        let labels = default_labels(2);
        let dup = LieAlgebra::from_brackets(
            labels.clone(),
            vec![(0, 1, vec![(1, int(1))]), (1, 0, vec![(1, int(1))])],
        );
        assert!(matches!(dup, Err(Error::DuplicateBracket { i: 0, j: 1 })));
        let diag = LieAlgebra::from_brackets(labels, vec![(0, 0, vec![])]);
        assert!(matches!(diag, Err(Error::BadBracketIndex { .. })));
    }

    #[test]
    fn verify_structure_examples() {
        assert!(LieAlgebra::abelian(3).verify_structure().is_valid());
        assert!(heisenberg3().verify_structure().is_valid());
        // [e1,e2]=e1, [e2,e3]=e2, [e1,e3]=e3:
        // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = [e1,e2] + [e2,-e3] + [e3,e1]
        //   = e1 - e2 - e3 != 0
        let bad = LieAlgebra::from_one_based(
            3,
            &[
                ((1, 2), &[(1, 1)]),
                ((2, 3), &[(2, 1)]),
                ((1, 3), &[(3, 1)]),
            ],
        );
        assert_eq!(bad.verify_structure().violations, vec![(0, 1, 2)]);
        assert!(matches!(bad.validate(), Err(Error::Jacobi((0, 1, 2)))));
    }

    #[test]
    fn ad_examples() {
        assert!(LieAlgebra::abelian(3)
            .ad(&[int(1), int(2), int(3)])
            .is_zero());
        let h = heisenberg3();
        assert_eq!(h.ad(&[int(1), int(0), int(0)]), Mat::unit(3, 3, 2, 1));
        let r2 = LieAlgebra::from_one_based(2, &[((1, 2), &[(2, 1)])]);
        assert_eq!(r2.ad(&[int(1), int(0)]), Mat::unit(2, 2, 1, 1));
    }

    #[test]
    fn ad_matches_bracket() {
        let h = heisenberg3();
        let x = vec![int(2), int(-1), int(5)];
        let y = vec![int(3), int(4), int(-2)];
        assert_eq!(h.ad(&x).mul_vec(&y), h.bracket(&x, &y));
    }
}
