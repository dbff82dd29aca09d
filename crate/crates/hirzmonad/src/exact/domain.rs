//! Fraction-free (Bareiss) elimination over an integral domain.
//!
//! The one-step Bareiss scheme keeps every intermediate entry equal to a
//! minor of the input matrix, so the division in the update rule is exact.
//! Pivoting scans rows top-down and columns left-to-right, which makes the
//! result deterministic.

/// Minimal integral-domain interface for Bareiss elimination.
pub(crate) trait Domain: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// Division known to be exact; implementations may assert this.
    fn exact_div(&self, other: &Self) -> Self;
}

/// Rank of a rectangular matrix given as rows.
pub(crate) fn bareiss_rank<D: Domain>(mut m: Vec<Vec<D>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut prev: Option<D> = None;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let mut v = m[rank][col].mul(&m[i][j]).sub(&m[i][col].mul(&m[rank][j]));
                if let Some(p) = &prev {
                    v = v.exact_div(p);
                }
                m[i][j] = v;
            }
            m[i][col] = D::zero();
        }
        prev = Some(m[rank][col].clone());
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix given as rows.
pub(crate) fn bareiss_det<D: Domain>(mut m: Vec<Vec<D>>) -> D {
    let n = m.len();
    if n == 0 {
        panic!("bareiss_det: determinant of an empty matrix is a unit; handle upstream");
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign_flip = false;
    let mut prev: Option<D> = None;
    for k in 0..n - 1 {
        let Some(pr) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return D::zero();
        };
        if pr != k {
            m.swap(k, pr);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let mut v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                if let Some(p) = &prev {
                    v = v.exact_div(p);
                }
                m[i][j] = v;
            }
            m[i][k] = D::zero();
        }
        prev = Some(m[k][k].clone());
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        D::zero().sub(&det)
    } else {
        det
    }
}

impl Domain for num::BigInt {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Self {
        debug_assert!(!num::Zero::is_zero(other) && num::Zero::is_zero(&(self % other)));
        self / other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(bareiss_rank(int_rows(&[])), 0);
        assert_eq!(bareiss_rank(int_rows(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(bareiss_rank(int_rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(int_rows(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(int_rows(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 5]])), 2);
    }

    #[test]
    fn det_basics() {
        assert_eq!(bareiss_det(int_rows(&[&[3]])), BigInt::from(3));
        assert_eq!(bareiss_det(int_rows(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(bareiss_det(int_rows(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])), BigInt::from(5));
        assert_eq!(bareiss_det(int_rows(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        // row swap flips the sign
        assert_eq!(bareiss_det(int_rows(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }
}
