//! The Hirzebruch surface `Sigma_n` through its Cox ring.
//!
//! Fixed presentation: variables `z1, z2` of class `F = (0,1)`, `z3` of
//! class `E = (1,-n)` and `z4` of class `H = (1,0)`, with irrelevant ideal
//! `(z1,z2) n (z3,z4)`. The Picard group is `Z H + Z F`, the intersection
//! form is `H.H = n`, `H.F = 1`, `F.F = 0`, and the graded piece of class
//! `(p,q)` is spanned by the monomials `z1^a z2^b z3^c z4^d` with
//! `c + d = p` and `a + b - n c = q`.
//!
//! The line at infinity is the toric divisor `{z4 = 0}` (irreducible, in
//! class `H`, disjoint from the negative section `E = {z3 = 0}`), and the
//! four charts obtained by setting one of `z1/z2` and one of `z3/z4` to 1
//! cover the surface.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use serde::Serialize;

use crate::exact::{BiPoly, BinForm, Rat, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("Hirzebruch index must satisfy n >= 1, got {0}")]
    InvalidIndex(i64),
    #[error(
        "monomial z1^{a} z2^{b} z3^{c} z4^{d} is not homogeneous of class ({p},{q}) on Sigma_{n}"
    )]
    NotHomogeneous { a: u32, b: u32, c: u32, d: u32, p: i64, q: i64, n: i64 },
    #[error("surface index mismatch: {0} vs {1}")]
    IndexMismatch(i64, i64),
    #[error("class mismatch: ({},{}) vs ({},{})", .0.p, .0.q, .1.p, .1.q)]
    ClassMismatch(PicClass, PicClass),
}

/// A divisor class `p*H + q*F` on `Sigma_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PicClass {
    pub p: i64,
    pub q: i64,
}

impl PicClass {
    pub const fn new(p: i64, q: i64) -> Self {
        PicClass { p, q }
    }

    /// The section class squaring to `n`.
    pub const H: PicClass = PicClass::new(1, 0);

    /// The fiber class of the ruling.
    pub const F: PicClass = PicClass::new(0, 1);

    /// The class of the trivial bundle.
    pub const ZERO: PicClass = PicClass::new(0, 0);

    /// The negative section `E = H - nF` squaring to `-n`.
    pub fn e(n: i64) -> Self {
        PicClass::new(1, -n)
    }
}

impl std::ops::Add for PicClass {
    type Output = PicClass;
    fn add(self, rhs: PicClass) -> PicClass {
        PicClass::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl std::ops::Sub for PicClass {
    type Output = PicClass;
    fn sub(self, rhs: PicClass) -> PicClass {
        PicClass::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl std::ops::Neg for PicClass {
    type Output = PicClass;
    fn neg(self) -> PicClass {
        PicClass::new(-self.p, -self.q)
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Chern character data `(rk, c1, ch2)` of a sheaf on `Sigma_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernCharacter {
    pub rk: i64,
    pub c1: PicClass,
    pub ch2: Rat,
}

impl ChernCharacter {
    pub fn zero() -> Self {
        ChernCharacter { rk: 0, c1: PicClass::ZERO, ch2: Rat::from_integer(0.into()) }
    }

    pub fn add(&self, other: &Self) -> Self {
        ChernCharacter {
            rk: self.rk + other.rk,
            c1: self.c1 + other.c1,
            ch2: &self.ch2 + &other.ch2,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ChernCharacter {
            rk: self.rk - other.rk,
            c1: self.c1 - other.c1,
            ch2: &self.ch2 - &other.ch2,
        }
    }
}

/// One of the four torus charts: the listed pair of variables is set to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    /// z1 = z3 = 1, coordinates (z2, z4)
    C13,
    /// z1 = z4 = 1, coordinates (z2, z3)
    C14,
    /// z2 = z3 = 1, coordinates (z1, z4)
    C23,
    /// z2 = z4 = 1, coordinates (z1, z4)
    C24,
}

impl Chart {
    pub const ALL: [Chart; 4] = [Chart::C13, Chart::C14, Chart::C23, Chart::C24];

    /// 1-based indices of the variables set to 1.
    pub fn unit_vars(self) -> (usize, usize) {
        match self {
            Chart::C13 => (1, 3),
            Chart::C14 => (1, 4),
            Chart::C23 => (2, 3),
            Chart::C24 => (2, 4),
        }
    }

    /// 1-based indices of the two coordinate variables, fiber one first.
    pub fn coord_vars(self) -> (usize, usize) {
        match self {
            Chart::C13 => (2, 4),
            Chart::C14 => (2, 3),
            Chart::C23 => (1, 4),
            Chart::C24 => (1, 3),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.unit_vars();
        write!(f, "({i},{j})")
    }
}

/// A closed point of `Sigma_n` presented in one of the four charts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartPoint {
    pub chart: Chart,
    pub coords: (Rat, Rat),
}

impl ChartPoint {
    pub fn new(chart: Chart, coords: (Rat, Rat)) -> Self {
        ChartPoint { chart, coords }
    }

    /// Value of the 1-based Cox variable at this point.
    fn var_value(&self, var: usize) -> Rat {
        let (u1, u2) = self.chart.unit_vars();
        if var == u1 || var == u2 {
            return Rat::from_integer(1.into());
        }
        let (c1, c2) = self.chart.coord_vars();
        if var == c1 {
            self.coords.0.clone()
        } else {
            debug_assert_eq!(var, c2);
            self.coords.1.clone()
        }
    }
}

/// The surface `Sigma_n` itself; all section-space computations hang off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Surface {
    n: i64,
}

impl Surface {
    pub fn new(n: i64) -> Result<Self, SurfaceError> {
        if n < 1 {
            return Err(SurfaceError::InvalidIndex(n));
        }
        Ok(Surface { n })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn canonical_class(&self) -> PicClass {
        PicClass::new(-2, self.n - 2)
    }

    /// Intersection number of two classes: `n p1 p2 + p1 q2 + p2 q1`.
    pub fn intersect(&self, a: PicClass, b: PicClass) -> i64 {
        self.n * a.p * b.p + a.p * b.q + b.p * a.q
    }

    /// Monomial basis of `H^0(O(p,q))`, ordered descending by `(c, a)`.
    pub fn section_basis(&self, cls: PicClass) -> Vec<[u32; 4]> {
        let mut out = Vec::new();
        if cls.p < 0 {
            return out;
        }
        for c in (0..=cls.p).rev() {
            let d = cls.p - c;
            let s = cls.q + self.n * c;
            if s < 0 {
                continue;
            }
            for a in (0..=s).rev() {
                let b = s - a;
                out.push([a as u32, b as u32, c as u32, d as u32]);
            }
        }
        out
    }

    pub fn h0(&self, cls: PicClass) -> i64 {
        if cls.p < 0 {
            return 0;
        }
        (0..=cls.p).map(|c| (cls.q + self.n * c + 1).max(0)).sum()
    }

    /// Serre duality against the canonical class `K = (-2, n-2)`.
    pub fn h2(&self, cls: PicClass) -> i64 {
        self.h0(self.canonical_class() - cls)
    }

    /// Riemann-Roch: `chi = 1 + n p(p+1)/2 + pq + p + q`.
    pub fn chi(&self, cls: PicClass) -> i64 {
        1 + self.n * cls.p * (cls.p + 1) / 2 + cls.p * cls.q + cls.p + cls.q
    }

    pub fn h1(&self, cls: PicClass) -> i64 {
        let h1 = self.h0(cls) + self.h2(cls) - self.chi(cls);
        debug_assert!(h1 >= 0);
        h1
    }

    /// The three region tests `(h0 != 0, h1 != 0, h2 != 0)`, implemented
    /// literally from the inequalities rather than through the dimension
    /// formulas.
    pub fn vanishing_pattern(&self, cls: PicClass) -> (bool, bool, bool) {
        let PicClass { p, q } = cls;
        let n = self.n;
        let h0 = p >= 0 && n * p + q >= 0;
        let h1 = (p >= 0 && q <= -2) || (p <= -2 && q >= n);
        let h2 = p <= -2 && n * p + q <= -(n + 2);
        (h0, h1, h2)
    }

    pub fn chern_of_linebundle(&self, cls: PicClass) -> ChernCharacter {
        let self_int = self.intersect(cls, cls);
        ChernCharacter { rk: 1, c1: cls, ch2: Rat::new(self_int.into(), 2.into()) }
    }

    /// `dim Hom(+O(a_i), +O(b_j)) = sum h0(b_j - a_i)`.
    pub fn hom_dim(&self, from: &[PicClass], to: &[PicClass]) -> i64 {
        from.iter().map(|a| to.iter().map(|b| self.h0(*b - *a)).sum::<i64>()).sum()
    }
}

/// An element of the Cox ring, homogeneous of a fixed Picard class.
///
/// Terms map exponent vectors `[a, b, c, d]` of `(z1, z2, z3, z4)` to
/// nonzero rational coefficients; every exponent vector satisfies the
/// grading constraints of the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedPoly {
    n: i64,
    cls: PicClass,
    terms: BTreeMap<[u32; 4], Rat>,
}

impl BigradedPoly {
    pub fn zero(n: i64, cls: PicClass) -> Self {
        BigradedPoly { n, cls, terms: BTreeMap::new() }
    }

    /// Class of a monomial in the fixed grading.
    pub fn monomial_class(n: i64, e: [u32; 4]) -> PicClass {
        let [a, b, c, d] = e.map(i64::from);
        PicClass::new(c + d, a + b - n * c)
    }

    pub fn monomial(n: i64, e: [u32; 4], coef: Rat) -> Self {
        let cls = Self::monomial_class(n, e);
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(e, coef);
        }
        BigradedPoly { n, cls, terms }
    }

    /// Builds a section from terms, checking homogeneity of every exponent.
    pub fn new(
        n: i64,
        cls: PicClass,
        terms: impl IntoIterator<Item = ([u32; 4], Rat)>,
    ) -> Result<Self, SurfaceError> {
        let mut map = BTreeMap::new();
        for (e, coef) in terms {
            if Self::monomial_class(n, e) != cls {
                let [a, b, c, d] = e;
                return Err(SurfaceError::NotHomogeneous { a, b, c, d, p: cls.p, q: cls.q, n });
            }
            if coef.is_zero() {
                continue;
            }
            let entry: &mut Rat = map.entry(e).or_insert_with(|| Rat::from_integer(0.into()));
            *entry += coef;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        Ok(BigradedPoly { n, cls, terms: map })
    }

    /// Section with the given coefficients over `surface.section_basis(cls)`.
    pub fn from_basis_coeffs(surface: &Surface, cls: PicClass, coeffs: &[Rat]) -> Self {
        let basis = surface.section_basis(cls);
        assert_eq!(basis.len(), coeffs.len(), "coefficient count must match basis size");
        let mut terms = BTreeMap::new();
        for (e, c) in basis.into_iter().zip(coeffs) {
            if !c.is_zero() {
                terms.insert(e, c.clone());
            }
        }
        BigradedPoly { n: surface.n(), cls, terms }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn cls(&self) -> PicClass {
        self.cls
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &Rat)> {
        self.terms.iter()
    }

    /// Terms sorted descending by `(c, a)`, the canonical section order.
    pub fn terms_canonical(&self) -> Vec<([u32; 4], Rat)> {
        let mut v: Vec<([u32; 4], Rat)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|(e, _)| (std::cmp::Reverse(e[2]), std::cmp::Reverse(e[0])));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SurfaceError> {
        if self.n != other.n {
            return Err(SurfaceError::IndexMismatch(self.n, other.n));
        }
        if self.cls != other.cls {
            return Err(SurfaceError::ClassMismatch(self.cls, other.cls));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(|| Rat::from_integer(0.into()));
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Ok(BigradedPoly { n: self.n, cls: self.cls, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SurfaceError> {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.n, self.cls);
        }
        BigradedPoly {
            n: self.n,
            cls: self.cls,
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Product of sections; classes add.
    pub fn mul(&self, other: &Self) -> Result<Self, SurfaceError> {
        if self.n != other.n {
            return Err(SurfaceError::IndexMismatch(self.n, other.n));
        }
        let cls = self.cls + other.cls;
        let mut terms: BTreeMap<[u32; 4], Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                let entry = terms.entry(e).or_insert_with(|| Rat::from_integer(0.into()));
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Ok(BigradedPoly { n: self.n, cls, terms })
    }

    /// Scalar value in the chart trivialization (unit variables set to 1).
    pub fn evaluate_on_chart(&self, pt: &ChartPoint) -> Rat {
        let mut acc = Rat::from_integer(0.into());
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (var, &exp) in (1..=4).zip(e.iter()) {
                if exp == 0 {
                    continue;
                }
                let v = pt.var_value(var);
                for _ in 0..exp {
                    term *= &v;
                }
            }
            acc += term;
        }
        acc
    }

    /// Restriction to the line at infinity `{z4 = 0}`: keep the terms with
    /// `d = 0` and substitute `z3 = 1`, leaving a binary form of degree
    /// `n p + q` in `(z1, z2)`.
    pub fn restrict_to_linf(&self) -> BinForm {
        let deg = self.n * self.cls.p + self.cls.q;
        let mut out = BinForm::zero(deg);
        for (e, c) in &self.terms {
            if e[3] != 0 {
                continue;
            }
            assert!(deg >= 0, "nonzero restriction of negative degree: grading is inconsistent");
            // a + b = q + n c = n p + q when d = 0 and c = p
            let mut coeffs = out.coeffs().to_vec();
            coeffs[e[0] as usize] = &coeffs[e[0] as usize] + c;
            out = BinForm::new(deg, coeffs);
        }
        out
    }

    /// Substitution into a chart: unit variables to 1, the remaining fiber
    /// variable becomes `x` and the remaining base variable becomes `y`.
    pub fn to_chart(&self, chart: Chart) -> BiPoly {
        let (c1, c2) = chart.coord_vars();
        let mut acc = BiPoly::zero();
        for (e, c) in &self.terms {
            let ex = e[c1 - 1] as usize;
            let ey = e[c2 - 1] as usize;
            acc = acc.add(&BiPoly::monomial(c.clone(), ex, ey));
        }
        acc
    }
}

impl fmt::Display for BigradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (std::cmp::Reverse(e[2]), std::cmp::Reverse(e[0])));
        for (e, c) in terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (var, &exp) in ["z1", "z2", "z3", "z4"].iter().zip(e.iter()) {
                match exp {
                    0 => {}
                    1 => write!(f, "*{var}")?,
                    _ => write!(f, "*{var}^{exp}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn surf(n: i64) -> Surface {
        Surface::new(n).unwrap()
    }

    #[test]
    fn section_basis_examples() {
        // n=1, class (1,0): {z1 z3, z2 z3, z4} in descending (c, a) order
        let b = surf(1).section_basis(PicClass::new(1, 0));
        assert_eq!(b, vec![[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]]);
        assert!(surf(2).section_basis(PicClass::new(-1, 5)).is_empty());
        assert_eq!(surf(1).section_basis(PicClass::new(0, 1)), vec![[1, 0, 0, 0], [0, 1, 0, 0]]);
    }

    #[test]
    fn cohomology_examples() {
        for n in 1..=4 {
            assert_eq!(surf(n).chi(PicClass::ZERO), 1);
        }
        assert_eq!(surf(1).h0(PicClass::new(1, 0)), 3);
        let s = surf(2);
        let cls = PicClass::new(-2, 2);
        assert!(s.h1(cls) > 0);
        assert_eq!(s.h0(cls), 0);
        assert_eq!(s.h2(cls), 0);
    }

    #[test]
    fn vanishing_pattern_examples() {
        assert_eq!(surf(2).vanishing_pattern(PicClass::new(-2, 2)), (false, true, false));
        assert_eq!(surf(1).vanishing_pattern(PicClass::new(0, -2)), (false, true, false));
        assert_eq!(surf(3).vanishing_pattern(PicClass::new(-2, -5)), (false, false, true));
    }

    #[test]
    fn grid_consistency() {
        for n in 1..=4 {
            let s = surf(n);
            for p in -6..=6 {
                for q in -6..=6 {
                    let cls = PicClass::new(p, q);
                    assert_eq!(s.section_basis(cls).len() as i64, s.h0(cls));
                    let (v0, v1, v2) = s.vanishing_pattern(cls);
                    assert_eq!(s.h0(cls) > 0, v0, "h0 region at n={n} {cls}");
                    assert_eq!(s.h1(cls) > 0, v1, "h1 region at n={n} {cls}");
                    assert_eq!(s.h2(cls) > 0, v2, "h2 region at n={n} {cls}");
                    assert_eq!(s.h0(cls) - s.h1(cls) + s.h2(cls), s.chi(cls));
                }
            }
        }
    }

    #[test]
    fn intersection_form() {
        for n in 1..=4 {
            let s = surf(n);
            assert_eq!(s.intersect(PicClass::H, PicClass::H), n);
            assert_eq!(s.intersect(PicClass::e(n), PicClass::e(n)), -n);
            assert_eq!(s.intersect(PicClass::F, PicClass::F), 0);
            assert_eq!(s.intersect(PicClass::H, PicClass::F), 1);
            // symmetry and bilinearity on a small grid
            for a in [-2i64, 0, 3] {
                for b in [-1i64, 2] {
                    let x = PicClass::new(a, b);
                    let y = PicClass::new(b, a);
                    let z = PicClass::new(1, -1);
                    assert_eq!(s.intersect(x, y), s.intersect(y, x));
                    assert_eq!(s.intersect(x + z, y), s.intersect(x, y) + s.intersect(z, y));
                }
            }
        }
    }

    #[test]
    fn chern_examples() {
        let s = surf(3);
        let ch = s.chern_of_linebundle(PicClass::ZERO);
        assert_eq!((ch.rk, ch.c1, ch.ch2), (1, PicClass::ZERO, Rat::from_integer(0.into())));
        let ch = s.chern_of_linebundle(PicClass::new(1, -1));
        assert_eq!(ch.ch2, Rat::new((3 - 2).into(), 2.into()));
        let ch = s.chern_of_linebundle(PicClass::new(1, 0));
        assert_eq!(ch.ch2, Rat::new(3.into(), 2.into()));
    }

    #[test]
    fn restriction_examples() {
        let n1 = 1i64;
        let z4 = BigradedPoly::monomial(n1, [0, 0, 0, 1], rat_int(1));
        assert!(z4.restrict_to_linf().is_zero());
        let z1z3 = BigradedPoly::monomial(n1, [1, 0, 1, 0], rat_int(1));
        let r = z1z3.restrict_to_linf();
        assert_eq!(r.deg(), 1);
        assert_eq!(r.coeffs(), &[rat_int(0), rat_int(1)]); // z1
        let z2 = BigradedPoly::monomial(2, [0, 1, 0, 0], rat_int(1));
        let r = z2.restrict_to_linf();
        assert_eq!(r.coeffs(), &[rat_int(1), rat_int(0)]); // z2
    }

    #[test]
    fn restriction_is_ring_map() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let s = surf(2);
        let classes = [PicClass::new(1, 0), PicClass::new(0, 1), PicClass::new(1, -1)];
        for _ in 0..40 {
            let ca = classes[rng.gen_range(0..classes.len())];
            let cb = classes[rng.gen_range(0..classes.len())];
            let mut rand_poly = |cls: PicClass, rng: &mut rand_chacha::ChaCha8Rng| {
                let coeffs: Vec<Rat> =
                    s.section_basis(cls).iter().map(|_| rat_int(rng.gen_range(-3..=3))).collect();
                BigradedPoly::from_basis_coeffs(&s, cls, &coeffs)
            };
            let f = rand_poly(ca, &mut rng);
            let g = rand_poly(cb, &mut rng);
            let prod = f.mul(&g).unwrap();
            assert_eq!(prod.restrict_to_linf(), f.restrict_to_linf().mul(&g.restrict_to_linf()));
            let sum = f.clone();
            let sum2 = sum.add(&f).unwrap();
            assert_eq!(
                sum2.restrict_to_linf(),
                f.restrict_to_linf().add(&f.restrict_to_linf())
            );
        }
    }

    #[test]
    fn chart_evaluation() {
        let z4 = BigradedPoly::monomial(1, [0, 0, 0, 1], rat_int(1));
        let pt = ChartPoint::new(Chart::C14, (rat_int(9), rat_int(4)));
        assert_eq!(z4.evaluate_on_chart(&pt), rat_int(1));

        let z1z3 = BigradedPoly::monomial(1, [1, 0, 1, 0], rat_int(1));
        let pt = ChartPoint::new(Chart::C23, (rat_int(5), rat_int(7)));
        assert_eq!(z1z3.evaluate_on_chart(&pt), rat_int(5));

        let zero = BigradedPoly::zero(1, PicClass::new(1, 0));
        assert_eq!(zero.evaluate_on_chart(&pt), rat_int(0));
    }

    #[test]
    fn chart_evaluation_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let s = surf(3);
        for chart in Chart::ALL {
            for _ in 0..10 {
                let cls = PicClass::new(rng.gen_range(0..=2), rng.gen_range(-2..=2));
                let coeffs: Vec<Rat> =
                    s.section_basis(cls).iter().map(|_| rat_int(rng.gen_range(-3..=3))).collect();
                let f = BigradedPoly::from_basis_coeffs(&s, cls, &coeffs);
                let g = BigradedPoly::monomial(3, [1, 1, 0, 0], rat_int(2));
                let pt =
                    ChartPoint::new(chart, (rat_int(rng.gen_range(-4..=4)), rat_int(rng.gen_range(-4..=4))));
                assert_eq!(
                    f.mul(&g).unwrap().evaluate_on_chart(&pt),
                    f.evaluate_on_chart(&pt) * g.evaluate_on_chart(&pt)
                );
            }
        }
    }

    #[test]
    fn chart_substitution_matches_evaluation() {
        let s = surf(2);
        let cls = PicClass::new(1, 1);
        let coeffs: Vec<Rat> =
            (0..s.section_basis(cls).len()).map(|i| rat_int(i as i64 % 3 - 1)).collect();
        let f = BigradedPoly::from_basis_coeffs(&s, cls, &coeffs);
        for chart in Chart::ALL {
            let bp = f.to_chart(chart);
            for (x, y) in [(0i64, 0i64), (1, 2), (-3, 5)] {
                let pt = ChartPoint::new(chart, (rat_int(x), rat_int(y)));
                assert_eq!(bp.eval(&rat_int(x), &rat_int(y)), f.evaluate_on_chart(&pt));
            }
        }
    }
}
