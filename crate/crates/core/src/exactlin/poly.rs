use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::mat::Mat;
use super::rational::{int, Rat};

/// Univariate polynomial over the rationals, coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly::from_i64(&[0, 1])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: Rat) -> Self {
        Poly::new(vec![-a, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`. Panics on `d = 0`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        let inv = dl.recip();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (Poly::zero(), s0, t0),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.ext_gcd(m);
        (g == Poly::one()).then(|| s.rem(m))
    }

    /// Product of the distinct irreducible factors, made monic: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        acc
    }

    /// `self(inner) mod modulus`.
    pub fn compose_mod(&self, inner: &Poly, modulus: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = (&(&acc * inner) + &Poly::constant(c.clone())).rem(modulus);
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = &Poly::linear_root(int(1)) * &Poly::linear_root(int(2));
        assert_eq!(p, Poly::from_i64(&[2, -3, 1]));
        assert_eq!(p.to_string(), "x^2 - 3*x + 2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_i64(&[0, 0, 0]), Poly::zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_i64(&[-1, 0, 0, 1]); // x^3 - 1
        let b = Poly::from_i64(&[-1, 1]); // x - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_i64(&[1, 1, 1]));
        assert!(r.is_zero());
        let c = Poly::from_i64(&[-1, 0, 1]); // x^2 - 1
        assert_eq!(a.gcd(&c), b);
        let (g, s, t) = a.ext_gcd(&c);
        assert_eq!(g, b);
        assert_eq!(&(&s * &a) + &(&t * &c), g);
    }

    #[test]
    fn squarefree() {
        // (x-1)^3 (x+2)^2
        let p = &(&Poly::linear_root(int(1)) * &Poly::linear_root(int(1)))
            * &(&Poly::linear_root(int(1))
                * &(&Poly::linear_root(int(-2)) * &Poly::linear_root(int(-2))));
        let s = p.squarefree_part();
        assert_eq!(s, &Poly::linear_root(int(1)) * &Poly::linear_root(int(-2)));
        assert!(s.is_squarefree());
        assert!(!p.is_squarefree());
        assert!(s.divides(&p));
        assert!(Poly::from_i64(&[1, 0, 1]).is_squarefree());
    }

    #[test]
    fn inverse_mod() {
        let m = Poly::from_i64(&[1, 0, 1]);
        let a = Poly::from_i64(&[1, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!((&inv * &a).rem(&m), Poly::one());
        assert!(Poly::from_i64(&[-1, 1])
            .inverse_mod(&Poly::from_i64(&[-1, 0, 1]))
            .is_none());
    }

    #[test]
    fn evaluation() {
        let p = Poly::from_i64(&[1, 0, 1]);
        let j = Mat::from_i64(2, 2, &[0, 1, -1, 0]);
        assert!(p.eval_mat(&j).is_zero());
        assert_eq!(p.eval(&int(3)), int(10));
        // (x^2+1) composed with (x+1) = x^2 + 2x + 2
        let c = p.compose_mod(&Poly::from_i64(&[1, 1]), &Poly::from_i64(&[0, 0, 0, 0, 1]));
        assert_eq!(c, Poly::from_i64(&[2, 2, 1]));
    }
}
