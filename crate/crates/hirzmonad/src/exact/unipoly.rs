//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first; the vector is empty for the
//! zero polynomial and otherwise ends in a nonzero coefficient.

use num::{BigInt, Integer, One, Signed, Zero};

use super::domain::Domain;
use super::rat::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![Rat::zero(), Rat::one()] }
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
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

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Euclidean division by a nonzero divisor: `self = q*d + r` with
    /// `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &dl;
            if !f.is_zero() {
                quot[k] = f.clone();
                for (i, c) in d.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &(c * &f);
                    rem[k + i] = v;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds if the division leaves a
    /// remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Scales the leading coefficient to 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor; `gcd(f, 0)` is the monic form of `f`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            // monic normalization keeps intermediate coefficients small
            b = r.monic();
        }
        a.monic()
    }

    /// Monic gcd of a whole family (zero for an empty or all-zero family).
    pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a UniPoly>) -> Self {
        let mut g = Self::zero();
        for p in polys {
            g = g.gcd(p);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Extended gcd: returns `(g, u, v)` with `g` monic and
    /// `u*self + v*other = g`.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        match r0.leading() {
            None => (Self::zero(), Self::zero(), Self::zero()),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Monic radical: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// All rational roots, sorted, each listed once.
    ///
    /// Divisor enumeration happens on `i128`; a constant or leading
    /// coefficient beyond that range yields only the roots detectable
    /// without it (callers use this for diagnostics on desk-scale data).
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        // factor out x^v
        let v = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        if v > 0 {
            roots.push(Rat::zero());
            p = Self::from_coeffs(p.coeffs[v..].to_vec());
        }
        if p.is_constant() {
            roots.sort();
            return roots;
        }
        // clear denominators to a primitive integer polynomial
        let mut lcm = BigInt::one();
        for c in &p.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let a0 = ints.first().unwrap().abs();
        let ad = ints.last().unwrap().abs();
        let (Some(a0), Some(ad)) = (to_i128(&a0), to_i128(&ad)) else {
            return fallback_small_roots(&p, roots);
        };
        for num in divisors(a0) {
            for den in divisors(ad) {
                for sign in [1i128, -1] {
                    let cand = Rat::new(BigInt::from(sign * num), BigInt::from(den));
                    if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn to_i128(v: &BigInt) -> Option<i128> {
    i128::try_from(v.clone()).ok()
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn fallback_small_roots(p: &UniPoly, mut roots: Vec<Rat>) -> Vec<Rat> {
    for num in -64i64..=64 {
        for den in 1i64..=8 {
            let cand = super::rat::rat(num, den);
            if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                roots.push(cand);
            }
        }
    }
    roots.sort();
    roots
}

impl Domain for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        UniPoly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UniPoly::sub(self, other)
    }
    fn exact_div(&self, other: &Self) -> Self {
        UniPoly::exact_div(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn arithmetic() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let g = p(&[-1, 1]); // x - 1
        assert_eq!(f.div_rem(&g), (p(&[1, 1]), UniPoly::zero()));
        assert_eq!(g.mul(&p(&[1, 1])), f);
        assert_eq!(f.eval(&rat_int(3)), rat_int(8));
        assert_eq!(f.derivative(), p(&[0, 2]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&UniPoly::zero()), p(&[1, 2]).monic());
        assert_eq!(UniPoly::one().gcd(&p(&[5, 3, 7])), UniPoly::one());
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn extended_gcd_identity() {
        let f = p(&[2, 3, 1]); // (x+1)(x+2)
        let g = p(&[3, 4, 1]); // (x+1)(x+3)
        let (d, u, v) = f.extended_gcd(&g);
        assert_eq!(d, p(&[1, 1]));
        assert_eq!(u.mul(&f).add(&v.mul(&g)), d);
    }

    #[test]
    fn squarefree() {
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1])); // (x-1)^2 (x+1)
        assert_eq!(f.squarefree_part(), p(&[-1, 0, 1]).monic());
    }

    #[test]
    fn roots() {
        // (2x - 1)(x + 3) x
        let f = p(&[0, -3, 5, 2]);
        assert_eq!(f.rational_roots(), vec![rat_int(-3), rat_int(0), rat(1, 2)]);
        // x^2 + 1 has none
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
    }
}
