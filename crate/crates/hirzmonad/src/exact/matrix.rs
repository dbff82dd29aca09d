//! Dense matrices over the rationals.
//!
//! Zero-row and zero-column matrices are first-class values: monads with
//! empty blocks show up throughout and every routine here must accept them.
//! Rank goes through fraction-free (Bareiss) elimination on an integer
//! matrix obtained by clearing denominators row by row; reduced echelon
//! form and kernel bases are computed over the rationals with pivots scaled
//! to 1, so downstream bases are canonical.

use num::{BigInt, Integer, One, Signed, Zero};

use super::domain::bareiss_rank;
use super::rat::Rat;

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RatMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * other.at(k, j);
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * s)
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Glues columns of `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.at(i, j).clone() } else { other.at(i, j - self.cols).clone() }
        })
    }

    /// Rank over the rationals via fraction-free elimination on the
    /// denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        let int_rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = lcm.lcm(self.at(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(int_rows)
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot
    /// column indices in increasing order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(pr, j).clone();
                *m.at_mut(pr, j) = m.at(r, j).clone();
                *m.at_mut(r, j) = tmp;
            }
            let inv = m.at(r, c).recip();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j) - &(m.at(r, j) * &f);
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Canonical basis of the right null space, one column per free variable
    /// (free columns in increasing order, unit entry at the free index).
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (kcol, &f) in free.iter().enumerate() {
            *k.at_mut(f, kcol) = Rat::one();
            for (prow, &p) in pivots.iter().enumerate() {
                *k.at_mut(p, kcol) = -r.at(prow, f).clone();
            }
        }
        k
    }

    /// Any exact solution `x` of `self * x = rhs` (column-wise), or `None`
    /// when some column of `rhs` is outside the column space.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let (red, pivots) = self.hstack(rhs).rref();
        // a pivot inside the rhs block certifies inconsistency
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (prow, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                *x.at_mut(p, j) = red.at(prow, self.cols + j).clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Self::identity(self.rows))?;
        if self.mul(&x) == Self::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}
