use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{column_space, int, is_nilpotent, kernel, Mat, Rat, Subspace};
use crate::liecore::LieAlgebra;
use crate::random::{default_rng, small_vector};

/// Size of the pool of random elements searched for a regular element.
pub const REGULAR_POOL: usize = 64;

/// Generalized null space `ker m^n`, as the increasing chain of preimages
/// `K_{i+1} = m^{-1}(K_i)`; this avoids forming powers, whose entries grow quickly.
pub fn generalized_kernel(m: &Mat) -> Subspace {
    let mut k = Subspace::zero(m.cols());
    loop {
        let next = kernel(&(&k.equations() * m));
        if next.dim() == k.dim() {
            return k;
        }
        k = next;
    }
}

/// Stable image `im m^n`, the Fitting one-component, as the decreasing chain of images.
pub fn generalized_image(m: &Mat) -> Subspace {
    let mut w = column_space(m);
    loop {
        let next = w.image_under(m);
        if next.dim() == w.dim() {
            return w;
        }
        w = next;
    }
}

/// Engel subalgebra `L_0(ad x)`.
pub fn engel_subalgebra(l: &LieAlgebra, x: &[Rat]) -> Subspace {
    generalized_kernel(&l.ad(x))
}

/// `L = L_0 ⊕ L_1` under a nilpotent subalgebra `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fitting {
    pub zero: Subspace,
    pub one: Subspace,
}

/// Fitting decomposition of `L` under the adjoint action of the nilpotent subalgebra `H`.
pub fn fitting_decomposition(l: &LieAlgebra, h: &Subspace) -> Result<Fitting> {
    let sub = l.subalgebra(h)?;
    if !sub.algebra.is_nilpotent() {
        return Err(Error::NotNilpotent {
            what: "Fitting decomposition subalgebra",
        });
    }
    let n = l.dim();
    let mut zero = Subspace::full(n);
    let mut one = Subspace::zero(n);
    for v in h.vectors() {
        let a = l.ad(v);
        zero = zero.intersection(&generalized_kernel(&a))?;
        one = one.sum(&generalized_image(&a))?;
    }
    debug_assert_eq!(zero.dim() + one.dim(), n);
    Ok(Fitting { zero, one })
}

/// A Cartan subalgebra with the default seed.
pub fn cartan_subalgebra(l: &LieAlgebra) -> Subspace {
    cartan_subalgebra_with(l, &mut default_rng())
}

/// A Cartan subalgebra: a nilpotent, self-normalizing subalgebra.
///
/// Starts from the element with the smallest Engel subalgebra among a random pool,
/// then shrinks: while `K = L_0(ad x)` is not nilpotent, pick `y ∈ K` acting
/// non-nilpotently on `K` and move to `x + c (y - x)` for the first `c` whose Engel
/// subalgebra is strictly inside `K`. At most `dim L` values of `c` fail. The result
/// is checked against the three defining properties before it is returned.
pub fn cartan_subalgebra_with<R: Rng + ?Sized>(l: &LieAlgebra, rng: &mut R) -> Subspace {
    let n = l.dim();
    if l.is_nilpotent() {
        return l.full_space();
    }
    // Sparse candidates often land on a coordinate-aligned torus, whose Engel
    // subalgebra has a small echelon basis; ties on dimension go to the smaller basis.
    let mut x = (0..REGULAR_POOL)
        .map(|i| pool_vector(rng, n, i))
        .map(|v| {
            let e = engel_subalgebra(l, &v);
            ((e.dim(), e.basis().max_bit_size()), v)
        })
        .min_by_key(|(key, _)| *key)
        .map(|(_, v)| v)
        .expect("nonempty pool");
    let mut k = engel_subalgebra(l, &x);
    loop {
        let sub = l.subalgebra(&k).expect("Engel subalgebras are subalgebras");
        if sub.algebra.is_nilpotent() {
            break;
        }
        let y = non_nilpotent_element(&sub.algebra, rng);
        let y = sub.embed(&y);
        let mut next = None;
        for c in 1..=(n as i64 + 1) {
            let c = int(c);
            let cand: Vec<Rat> = x
                .iter()
                .zip(&y)
                .map(|(xi, yi)| xi + &c * (yi - xi))
                .collect();
            let e = engel_subalgebra(l, &cand);
            if e.dim() < k.dim() && e.is_subspace_of(&k) {
                next = Some((cand, e));
                break;
            }
        }
        let (nx, nk) = next.expect("some c in 1..=dim+1 shrinks the Engel subalgebra");
        x = nx;
        k = nk;
    }
    assert!(l.is_subalgebra(&k), "Cartan output is not a subalgebra");
    assert_eq!(
        l.normalizer(&k).expect("same ambient"),
        k,
        "Cartan output is not self-normalizing"
    );
    k
}

/// Small random entries, each kept with probability 1/4, 1/2 or 1 depending on `i`.
fn pool_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, i: usize) -> Vec<Rat> {
    let keep = [0.25, 0.5, 1.0][i % 3];
    small_vector(rng, n)
        .into_iter()
        .map(|c| if rng.gen_bool(keep) { c } else { int(0) })
        .collect()
}

/// An element of a non-nilpotent algebra whose adjoint is not nilpotent, in the
/// algebra's own coordinates (basis vectors first, then random combinations).
fn non_nilpotent_element<R: Rng + ?Sized>(k: &LieAlgebra, rng: &mut R) -> Vec<Rat> {
    let d = k.dim();
    for i in 0..d {
        if !is_nilpotent(&k.ad_basis(i)).expect("square") {
            return crate::exactlin::unit_vector(d, i);
        }
    }
    loop {
        let v = small_vector(rng, d);
        if !is_nilpotent(&k.ad(&v)).expect("square") {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::is_semisimple;

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_one_based(
            3,
            &[
                ((1, 2), &[(3, 1)]),
                ((3, 1), &[(1, 2)]),
                ((3, 2), &[(2, -2)]),
            ],
        )
    }

    fn r2() -> LieAlgebra {
        LieAlgebra::from_one_based(2, &[((1, 2), &[(2, 1)])])
    }

    #[test]
    fn cartan_of_nilpotent_is_everything() {
        let h3 = LieAlgebra::from_one_based(3, &[((1, 2), &[(3, 1)])]);
        assert!(cartan_subalgebra(&h3).is_full());
    }

    #[test]
    fn cartan_of_sl2() {
        let l = sl2();
        let h = cartan_subalgebra(&l);
        assert_eq!(h.dim(), 1);
        let v: Vec<Rat> = h.vectors().next().unwrap().to_vec();
        assert!(is_semisimple(&l.ad(&v)).unwrap());
    }

    #[test]
    fn cartan_of_r2() {
        let l = r2();
        let h = cartan_subalgebra(&l);
        // any x + c y spans a Cartan subalgebra; its dimension is 1 and it is not span{y}
        assert_eq!(h.dim(), 1);
        assert!(!h.contains(&[int(0), int(1)]));
        assert_eq!(l.normalizer(&h).unwrap(), h);
    }

    #[test]
    fn fitting_examples() {
        let l = r2();
        let zero_h = Subspace::zero(2);
        let f = fitting_decomposition(&l, &zero_h).unwrap();
        assert!(f.zero.is_full() && f.one.is_zero());
        let f = fitting_decomposition(&l, &Subspace::coordinate_span(2, [0])).unwrap();
        assert_eq!(f.zero, Subspace::coordinate_span(2, [0]));
        assert_eq!(f.one, Subspace::coordinate_span(2, [1]));
        assert!(matches!(
            fitting_decomposition(&l, &l.full_space()),
            Err(Error::NotNilpotent { .. })
        ));
    }
}
