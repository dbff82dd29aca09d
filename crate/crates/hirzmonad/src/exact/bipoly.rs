//! Bivariate polynomials over the rationals, viewed as `Q[x][y]`.
//!
//! The representation is dense in `y`: a vector of `UniPoly` coefficients in
//! ascending `y`-degree, empty for zero, last entry nonzero otherwise. Gcds
//! go through the primitive pseudo-remainder sequence; resultants are
//! Sylvester determinants computed fraction-free. The sign convention for
//! `resultant_y` is fixed by the determinant layout below (rows of `g`
//! first), e.g. `res_y(y - x, y + x) = -2x`.

use num::Zero;

use super::domain::bareiss_det;
use super::rat::Rat;
use super::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BiPolyError {
    #[error("resultant of two zero polynomials")]
    BothZero,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn from_y_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_y_coeffs(vec![UniPoly::constant(c)])
    }

    pub fn from_x_poly(p: UniPoly) -> Self {
        Self::from_y_coeffs(vec![p])
    }

    pub fn x() -> Self {
        Self::from_x_poly(UniPoly::x())
    }

    pub fn y() -> Self {
        Self::from_y_coeffs(vec![UniPoly::zero(), UniPoly::one()])
    }

    /// The monomial `c * x^ex * y^ey`.
    pub fn monomial(c: Rat, ex: usize, ey: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); ey + 1];
        coeffs[ey] = UniPoly::monomial(c, ex);
        BiPoly { coeffs }
    }

    /// Coefficient `c(x)` of `y^j`.
    pub fn y_coeff(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        match self.coeffs.len() {
            0 => true,
            1 => self.coeffs[0].is_constant(),
            _ => false,
        }
    }

    pub fn leading_y(&self) -> Option<&UniPoly> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_y_coeffs((0..n).map(|j| self.y_coeff(j).add(&other.y_coeff(j))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_y_coeffs((0..n).map(|j| self.y_coeff(j).sub(&other.y_coeff(j))).collect())
    }

    pub fn neg(&self) -> Self {
        BiPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_y_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        BiPoly { coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect() }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c.eval(x);
        }
        acc
    }

    /// Substitutes a rational for `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        let dx = match self.deg_x() {
            None => return Self::zero(),
            Some(d) => d,
        };
        let mut cols = vec![vec![Rat::zero(); self.coeffs.len()]; dx + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            for (i, v) in c.coeffs().iter().enumerate() {
                cols[i][j] = v.clone();
            }
        }
        Self::from_y_coeffs(cols.into_iter().map(UniPoly::from_coeffs).collect())
    }

    /// Monic gcd of the `y`-coefficients.
    pub fn content_y(&self) -> UniPoly {
        UniPoly::gcd_many(self.coeffs.iter())
    }

    fn div_content(&self, c: &UniPoly) -> Self {
        BiPoly { coeffs: self.coeffs.iter().map(|p| p.exact_div(c)).collect() }
    }

    pub fn primitive_part_y(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_content(&self.content_y())
    }

    /// Canonical scaling: primitive in `y` with monic leading `y`-coefficient,
    /// multiplied back by the monic content.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let cont = self.content_y();
        let pp = self.div_content(&cont);
        let lead = pp.leading_y().unwrap().leading().unwrap().clone();
        BiPoly::from_x_poly(cont).mul(&pp.scale(&lead.recip()))
    }

    /// Pseudo-remainder of `self` by `d` with respect to `y`.
    fn prem(&self, d: &Self) -> Self {
        let dd = d.deg_y().expect("pseudo-division by zero");
        let lc = d.leading_y().unwrap();
        let mut r = self.clone();
        while let Some(rd) = r.deg_y() {
            if rd < dd {
                break;
            }
            let rl = r.leading_y().unwrap().clone();
            // r := lc * r - rl * y^(rd - dd) * d
            let shifted = d.shift_y(rd - dd);
            r = r.mul_x(lc).sub(&shifted.mul_x(&rl));
        }
        r
    }

    fn shift_y(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BiPoly { coeffs }
    }

    fn mul_x(&self, p: &UniPoly) -> Self {
        Self::from_y_coeffs(self.coeffs.iter().map(|c| c.mul(p)).collect())
    }

    /// Gcd in `Q[x, y]`, canonically scaled.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.canonical();
        }
        if other.is_zero() {
            return self.canonical();
        }
        let cf = self.content_y();
        let cg = other.content_y();
        let c = cf.gcd(&cg);
        let mut f = self.div_content(&cf);
        let mut g = other.div_content(&cg);
        if f.deg_y() < g.deg_y() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.prem(&g).primitive_part_y();
            f = g;
            g = r;
        }
        BiPoly::from_x_poly(c).mul(&f.primitive_part_y()).canonical()
    }

    pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a BiPoly>) -> Self {
        let mut acc = Self::zero();
        for p in polys {
            acc = acc.gcd(p);
            if acc.is_constant() && !acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Exact division test; `Some(quotient)` iff `self = d * quotient`.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let dd = d.deg_y().unwrap();
        let dl = d.leading_y().unwrap();
        let mut r = self.clone();
        let mut q = vec![UniPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.deg_y() {
            if rd < dd {
                return None;
            }
            let (qc, rem) = r.leading_y().unwrap().div_rem(dl);
            if !rem.is_zero() {
                return None;
            }
            q[rd - dd] = qc.clone();
            r = r.sub(&d.shift_y(rd - dd).mul_x(&qc));
            if r.is_zero() {
                return Some(Self::from_y_coeffs(q));
            }
        }
        // r became zero only via the branch above
        if self.is_zero() {
            Some(Self::zero())
        } else {
            None
        }
    }
}

/// Sylvester resultant eliminating `y`.
///
/// Vanishes exactly when `f` and `g` share a factor of positive `y`-degree.
/// Layout: the first `deg_y f` rows carry the coefficients of `g`, the next
/// `deg_y g` rows those of `f`, both highest `y`-power first.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly, BiPolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(BiPolyError::BothZero);
    }
    if f.is_zero() || g.is_zero() {
        let other = if f.is_zero() { g } else { f };
        return Ok(if other.deg_y().unwrap() > 0 {
            UniPoly::zero()
        } else {
            UniPoly::one()
        });
    }
    let m = f.deg_y().unwrap();
    let n = g.deg_y().unwrap();
    if m + n == 0 {
        return Ok(UniPoly::one());
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for (k, c) in (0..=n).map(|k| (k, g.y_coeff(n - k))) {
            row[i + k] = c;
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![UniPoly::zero(); size];
        for (k, c) in (0..=m).map(|k| (k, f.y_coeff(m - k))) {
            row[i + k] = c;
        }
        rows.push(row);
    }
    Ok(bareiss_det(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat_int;

    fn upoly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    // y - x
    fn y_minus_x() -> BiPoly {
        BiPoly::y().sub(&BiPoly::x())
    }

    #[test]
    fn resultant_examples() {
        let f = y_minus_x();
        let g = BiPoly::y().add(&BiPoly::x());
        assert_eq!(resultant_y(&f, &g).unwrap(), upoly(&[0, -2]));

        assert_eq!(resultant_y(&BiPoly::y(), &BiPoly::y()).unwrap(), UniPoly::zero());

        let h = BiPoly::y().sub(&BiPoly::constant(rat_int(1)));
        assert_eq!(resultant_y(&h, &BiPoly::x()).unwrap(), upoly(&[0, 1]));

        assert_eq!(
            resultant_y(&BiPoly::zero(), &BiPoly::zero()),
            Err(BiPolyError::BothZero)
        );
    }

    #[test]
    fn resultant_vanishes_iff_common_y_factor() {
        // randomized cross-check against the bivariate gcd
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let dy = rng.gen_range(0..=2usize);
            let coeffs: Vec<UniPoly> = (0..=dy)
                .map(|_| {
                    UniPoly::from_coeffs(
                        (0..=rng.gen_range(0..=2usize))
                            .map(|_| rat_int(rng.gen_range(-2..=2)))
                            .collect(),
                    )
                })
                .collect();
            BiPoly::from_y_coeffs(coeffs)
        };
        let mut tested = 0;
        for _ in 0..300 {
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let res = resultant_y(&f, &g).unwrap();
            let gcd = f.gcd(&g);
            let common_y_factor = gcd.deg_y().is_some_and(|d| d > 0);
            assert_eq!(res.is_zero(), common_y_factor, "f={f:?} g={g:?}");
            tested += 1;
        }
        assert!(tested > 100);
    }

    #[test]
    fn gcd_and_division() {
        let f = y_minus_x();
        let g = BiPoly::y().add(&BiPoly::x());
        let prod = f.mul(&g);
        assert_eq!(prod.gcd(&f.mul(&f)), f.canonical());
        assert_eq!(prod.checked_div(&f).unwrap(), g);
        assert!(prod.checked_div(&BiPoly::y().add(&BiPoly::constant(rat_int(1)))).is_none());
        // content is pulled out
        let h = BiPoly::from_x_poly(upoly(&[0, 1])).mul(&f); // x*(y-x)
        let k = BiPoly::from_x_poly(upoly(&[0, 2])).mul(&g); // 2x*(y+x)
        assert_eq!(h.gcd(&k), BiPoly::x());
    }

    #[test]
    fn swap_vars_involution() {
        let f = y_minus_x().mul(&BiPoly::y()).add(&BiPoly::constant(rat_int(3)));
        assert_eq!(f.swap_vars().swap_vars(), f);
        assert_eq!(BiPoly::x().swap_vars(), BiPoly::y());
    }
}
