//! Characteristic and minimal polynomials, Jordan–Chevalley parts, and the
//! nilpotent / semisimple predicates built on them.

use num_traits::{One, Zero};

use super::mat::Mat;
use super::poly::Poly;
use super::rational::{bit_size, Rat};
use super::subspace::column_space;
use crate::error::{Error, Result};

fn require_square(m: &Mat) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.rows())
}

/// Similarity transform to upper Hessenberg form (Gaussian elimination with the
/// matching column operation, so the spectrum is unchanged).
fn hessenberg(m: &Mat) -> Mat {
    let n = m.rows();
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let below = col + 1;
        let pick = (below..n)
            .filter(|&i| !h[(i, col)].is_zero())
            .min_by_key(|&i| (bit_size(&h[(i, col)]), i));
        let Some(i) = pick else { continue };
        if i != below {
            for j in 0..n {
                let tmp = h[(i, j)].clone();
                h[(i, j)] = h[(below, j)].clone();
                h[(below, j)] = tmp;
            }
            for r in 0..n {
                let tmp = h[(r, i)].clone();
                h[(r, i)] = h[(r, below)].clone();
                h[(r, below)] = tmp;
            }
        }
        let t = h[(below, col)].clone();
        for j in below + 1..n {
            if h[(j, col)].is_zero() {
                continue;
            }
            let u = &h[(j, col)] / &t;
            // row_j -= u * row_below
            for c in 0..n {
                if !h[(below, c)].is_zero() {
                    let d = &u * &h[(below, c)];
                    h[(j, c)] -= d;
                }
            }
            // col_below += u * col_j
            for r in 0..n {
                if !h[(r, j)].is_zero() {
                    let d = &u * &h[(r, j)];
                    h[(r, below)] += d;
                }
            }
        }
    }
    h
}

/// Monic characteristic polynomial `det(x I - m)` via reduction to Hessenberg form.
pub fn charpoly(m: &Mat) -> Result<Poly> {
    let n = require_square(m)?;
    let h = hessenberg(m);
    // p[k] is the characteristic polynomial of the leading k x k block
    let mut p: Vec<Poly> = Vec::with_capacity(n + 1);
    p.push(Poly::one());
    for k in 1..=n {
        let mut pk = &Poly::linear_root(h[(k - 1, k - 1)].clone()) * &p[k - 1];
        let mut t = Rat::one();
        for i in (1..k).rev() {
            t *= &h[(i, i - 1)];
            if t.is_zero() {
                break;
            }
            let c = &h[(i - 1, k - 1)] * &t;
            if !c.is_zero() {
                pk = &pk - &p[i - 1].scale(&c);
            }
        }
        p.push(pk);
    }
    Ok(p.pop().expect("p has n + 1 entries"))
}

/// Monic minimal polynomial: the first linear dependency among `I, m, m^2, ...`.
pub fn minpoly(m: &Mat) -> Result<Poly> {
    let n = require_square(m)?;
    // echelon rows in insertion order: (vector, pivot, coefficients over powers)
    let mut reduced: Vec<(Vec<Rat>, usize, Vec<Rat>)> = Vec::new();
    let mut power = Mat::identity(n);
    for k in 0..=n {
        let mut v = power.to_vector();
        let mut combo = vec![Rat::zero(); n + 1];
        combo[k] = Rat::one();
        for (rv, piv, rc) in &reduced {
            if v[*piv].is_zero() {
                continue;
            }
            let f = v[*piv].clone();
            for (x, y) in v.iter_mut().zip(rv) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                combo.truncate(k + 1);
                return Ok(Poly::new(combo).monic());
            }
            Some(piv) => {
                let inv = v[piv].recip();
                v.iter_mut().for_each(|x| *x *= &inv);
                combo.iter_mut().for_each(|x| *x *= &inv);
                reduced.push((v, piv, combo));
            }
        }
        power = &power * m;
    }
    unreachable!("Cayley-Hamilton bounds the degree of the minimal polynomial by n")
}

/// `m^n = 0`, decided on the chain of images `im m ⊇ im m² ⊇ ...` rather than on powers.
pub fn is_nilpotent(m: &Mat) -> Result<bool> {
    require_square(m)?;
    let mut w = column_space(m);
    loop {
        if w.is_zero() {
            return Ok(true);
        }
        let next = w.image_under(m);
        if next.dim() == w.dim() {
            return Ok(false);
        }
        w = next;
    }
}

/// Minimal polynomial is squarefree (diagonalizable over the algebraic closure).
pub fn is_semisimple(m: &Mat) -> Result<bool> {
    Ok(minpoly(m)?.is_squarefree())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPredicates {
    pub is_nilpotent: bool,
    pub is_semisimple: bool,
}

pub fn operator_predicates(m: &Mat) -> Result<OperatorPredicates> {
    Ok(OperatorPredicates {
        is_nilpotent: is_nilpotent(m)?,
        is_semisimple: is_semisimple(m)?,
    })
}

/// Additive Jordan–Chevalley decomposition `m = s + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanChevalley {
    pub semisimple: Mat,
    pub nilpotent: Mat,
    /// `semisimple = witness(m)`.
    pub witness: Poly,
    pub iterations: usize,
}

/// Newton iteration on the squarefree part `g` of the characteristic polynomial `p`:
/// `a <- a - g(a) h(a)` with `h = (g')^{-1} mod g`, carried out on polynomials modulo
/// `p` starting from `a = x`. Each step squares the `g`-adic order of `g(a)`, so the
/// loop ends after at most `ceil(log2 n) + 1` rounds.
pub fn jordan_chevalley(m: &Mat) -> Result<JordanChevalley> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(JordanChevalley {
            semisimple: m.clone(),
            nilpotent: m.clone(),
            witness: Poly::x(),
            iterations: 0,
        });
    }
    let p = charpoly(m)?;
    let g = p.squarefree_part();
    let h = g
        .derivative()
        .inverse_mod(&g)
        .expect("a squarefree polynomial is coprime to its derivative in characteristic 0");
    let bound = (usize::BITS - (n - 1).leading_zeros()) as usize + 1;
    let mut a = Poly::x().rem(&p);
    let mut iterations = 0;
    loop {
        let ga = g.compose_mod(&a, &p);
        if ga.is_zero() {
            break;
        }
        let ha = h.compose_mod(&a, &p);
        a = (&a - &(&ga * &ha)).rem(&p);
        iterations += 1;
        assert!(
            iterations <= bound,
            "Jordan-Chevalley iteration exceeded its bound"
        );
    }
    let s = a.eval_mat(m);
    let nil = m - &s;
    Ok(JordanChevalley {
        semisimple: s,
        nilpotent: nil,
        witness: a,
        iterations,
    })
}

pub fn semisimple_part(m: &Mat) -> Result<Mat> {
    Ok(jordan_chevalley(m)?.semisimple)
}
