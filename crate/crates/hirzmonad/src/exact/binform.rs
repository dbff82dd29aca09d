//! Homogeneous binary forms in `(z1, z2)`.
//!
//! A form of degree `d >= 0` is a coefficient vector of length `d + 1`
//! (coefficient of `z1^i z2^(d-i)` at index `i`); every vector of that
//! length is a legal value, including the zero vector. Degrees may be
//! negative: the space of forms is then zero-dimensional and the zero form
//! is its only element. This mirrors the section spaces `H^0(O_P1(d))`, so
//! matrices of forms with prescribed row/column degrees can carry zero
//! entries of negative degree without special cases.

use num::Zero;

use super::rat::Rat;
use super::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinForm {
    deg: i64,
    coeffs: Vec<Rat>,
}

impl BinForm {
    pub fn zero(deg: i64) -> Self {
        let len = (deg + 1).max(0) as usize;
        BinForm { deg, coeffs: vec![Rat::zero(); len] }
    }

    pub fn new(deg: i64, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len() as i64, (deg + 1).max(0), "coefficient count must be deg+1");
        BinForm { deg, coeffs }
    }

    /// Degree of the ambient space of forms (not of the nonzero support).
    pub fn deg(&self) -> i64 {
        self.deg
    }

    /// Coefficient of `z1^i z2^(deg-i)`.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.deg, other.deg, "cannot add forms of different degrees");
        BinForm {
            deg: self.deg,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        BinForm { deg: self.deg, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let deg = self.deg + other.deg;
        let mut out = BinForm::zero(deg);
        if deg < 0 {
            return out;
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn eval(&self, z1: &Rat, z2: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut p1 = Rat::from_integer(1.into());
        let d = self.coeffs.len();
        // powers of z2 descending, z1 ascending
        let mut pow2 = vec![Rat::from_integer(1.into())];
        for _ in 1..d {
            pow2.push(pow2.last().unwrap() * z2);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &p1 * &pow2[d - 1 - i];
            }
            p1 *= z1;
        }
        acc
    }

    /// Dehomogenization at `z2 = 1`, a polynomial in `t = z1`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// Dehomogenization at `z1 = 1`, a polynomial in `s = z2`.
    pub fn dehomogenize_flip(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// `z2^k * homogenize(p)` as a form of degree `deg`; requires
    /// `deg(p) + k <= deg` with `k` chosen as the slack.
    pub fn from_unipoly(p: &UniPoly, deg: i64) -> Self {
        let mut out = BinForm::zero(deg);
        if let Some(d) = p.degree() {
            assert!((d as i64) <= deg, "polynomial degree exceeds form degree");
            for (i, c) in p.coeffs().iter().enumerate() {
                out.coeffs[i] = c.clone();
            }
        }
        out
    }

    /// Exponent of the largest power of `z2` dividing the form (`None` if
    /// zero).
    fn z2_valuation(&self) -> Option<usize> {
        let top = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        Some(self.coeffs.len() - 1 - top)
    }

    /// Gcd of two forms as a monic-normalized form of its own degree.
    /// The zero form is absorbing: `gcd(0, g) = g` normalized.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => BinForm::zero(-1),
            (true, false) => other.normalized(),
            (false, true) => self.normalized(),
            (false, false) => {
                let v = self.z2_valuation().unwrap().min(other.z2_valuation().unwrap());
                let g = self.dehomogenize().gcd(&other.dehomogenize());
                let gd = g.degree().unwrap() as i64;
                BinForm::from_unipoly(&g, gd + v as i64)
            }
        }
    }

    /// Gcd of a family; `None` when every member is zero.
    pub fn gcd_many<'a>(forms: impl IntoIterator<Item = &'a BinForm>) -> Option<Self> {
        let mut acc: Option<BinForm> = None;
        for f in forms {
            if f.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => f.normalized(),
                Some(g) => g.gcd(f),
            });
            if acc.as_ref().is_some_and(|g| g.deg() == 0) {
                break;
            }
        }
        acc
    }

    /// Scales so the highest nonzero coefficient is 1 and trims the ambient
    /// degree to the support degree (z2-valuation retained).
    fn normalized(&self) -> Self {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            None => BinForm::zero(self.deg.min(-1)),
            Some(_) => {
                let lead =
                    self.coeffs.iter().rev().find(|c| !c.is_zero()).unwrap().clone();
                self.scale(&lead.recip())
            }
        }
    }
}

/// Determinant of a square matrix of forms by cofactor expansion. The
/// caller guarantees consistent row/column degree bookkeeping, so every
/// permutation product has the same ambient degree. An empty matrix has
/// determinant 1 (the degree-0 unit form).
pub fn binform_det(mat: &[Vec<BinForm>]) -> BinForm {
    let n = mat.len();
    if n == 0 {
        return BinForm::new(0, vec![num::One::one()]);
    }
    debug_assert!(mat.iter().all(|r| r.len() == n));
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    det_rec(mat, &rows, &cols)
}

fn det_rec(mat: &[Vec<BinForm>], rows: &[usize], cols: &[usize]) -> BinForm {
    if rows.len() == 1 {
        return mat[rows[0]][cols[0]].clone();
    }
    let r = rows[0];
    let sub_rows = &rows[1..];
    let mut acc: Option<BinForm> = None;
    for (k, &c) in cols.iter().enumerate() {
        let entry = &mat[r][c];
        let sub_cols: Vec<usize> =
            cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &cc)| cc).collect();
        let minor = det_rec(mat, sub_rows, &sub_cols);
        let mut term = entry.mul(&minor);
        if k % 2 == 1 {
            term = term.scale(&-Rat::from_integer(1.into()));
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap()
}

/// All maximal minors (size `min(rows, cols)`) of a rectangular matrix of
/// forms, in lexicographic order of the chosen row/column subset.
pub fn binform_maximal_minors(mat: &[Vec<BinForm>]) -> Vec<BinForm> {
    use itertools::Itertools;
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let k = rows.min(cols);
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if rows >= cols {
        for subset in (0..rows).combinations(k) {
            let all_cols: Vec<usize> = (0..cols).collect();
            out.push(det_rec(mat, &subset, &all_cols));
        }
    } else {
        let all_rows: Vec<usize> = (0..rows).collect();
        for subset in (0..cols).combinations(k) {
            out.push(det_rec(mat, &all_rows, &subset));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat_int;

    fn form(deg: i64, coeffs: &[i64]) -> BinForm {
        BinForm::new(deg, coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn multiply_and_eval() {
        let z1 = form(1, &[0, 1]); // wait: index i is coeff of z1^i z2^(d-i)
        // coeffs [0,1] means z1^1: the form z1
        let z2 = form(1, &[1, 0]);
        let p = z1.mul(&z2);
        assert_eq!(p, form(2, &[0, 1, 0])); // z1 z2
        assert_eq!(p.eval(&rat_int(3), &rat_int(5)), rat_int(15));
    }

    #[test]
    fn gcd_with_z2_powers() {
        // z2^2 * z1 and z2 * z1^2 share z1 * z2
        let a = form(3, &[0, 1, 0, 0]);
        let b = form(3, &[0, 0, 1, 0]);
        let g = a.gcd(&b);
        assert_eq!(g.deg(), 2);
        assert_eq!(g, form(2, &[0, 1, 0]));
    }

    #[test]
    fn gcd_coprime_is_constant() {
        // z1 and z2
        let a = form(1, &[0, 1]);
        let b = form(1, &[1, 0]);
        assert_eq!(a.gcd(&b).deg(), 0);
        // z1 - z2 and z1 + z2
        let c = form(1, &[-1, 1]);
        let d = form(1, &[1, 1]);
        assert_eq!(c.gcd(&d).deg(), 0);
    }

    #[test]
    fn gcd_many_all_zero() {
        assert!(BinForm::gcd_many([&BinForm::zero(2), &BinForm::zero(-1)]).is_none());
        let g = BinForm::gcd_many([&BinForm::zero(2), &form(1, &[2, 0])]).unwrap();
        assert_eq!(g, form(1, &[1, 0]));
    }
}
