//! Monads on `Sigma_n` and the conditions cutting out the parameter
//! space `L_k` of framed-sheaf monads.
//!
//! A quadruple `(n, r, a, c)` with `n, r >= 1` and `0 <= a <= r-1`
//! determines block sizes
//!
//! ```text
//! k1 = c + n a (a-1) / 2,   k2 = k1 + n a,
//! k3 = k1 + (n-1) a,        k4 = k1 + r - a,
//! ```
//!
//! and the three-term shape `O(0,-1)^k1 -> O(1,-1)^k2 + O^k4 -> O(1,0)^k3`
//! (the `(1,-1)` block of the middle term always precedes the trivial
//! block). A monad point is a pair `(alpha, beta)` of matrices of Cox-ring
//! sections with `beta . alpha = 0`; its middle cohomology is a torsion-free
//! sheaf trivial along the line at infinity exactly when the five open
//! conditions checked here hold:
//!
//! - (c1) `alpha` is a sheaf monomorphism: some maximal minor is nonzero;
//! - (c2) `beta` is an epimorphism: on every chart the maximal minors of
//!   `beta` have empty common zero locus;
//! - (c3) `alpha` has maximal rank at every point of the line at infinity:
//!   the restricted minors have constant gcd;
//! - (c4) the restricted cohomology bundle has no sections after twisting
//!   by `O(-1)`, which for the degree-0 restriction forces triviality;
//! - (c5) the cohomology is torsion-free: the locus where `alpha` drops
//!   rank is at most finite. Torsion of `coker alpha` is supported on the
//!   divisorial part of that degeneracy locus (locally, a rank drop along a
//!   divisor `D` makes the determinant ideal divisible by the equation of
//!   `D`, producing a section of `coker alpha` annihilated by it), and it
//!   lands inside the cohomology, so finiteness is equivalent to (c5).

mod json;

pub use json::{monad_from_json, monad_to_json, MonadJsonError};

use num::{One, Zero};

use crate::cech::{hyper_h, CechError, P1Complex};
use crate::exact::{
    zero_locus_class, BiPoly, BinForm, Rat, RatMatrix, ZeroLocusClass, ZeroLocusError,
};
use crate::surface::{
    BigradedPoly, Chart, ChartPoint, ChernCharacter, PicClass, Surface, SurfaceError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonadError {
    #[error("normalization violated: {0}")]
    Normalization(String),
    #[error("k1 = {0} is negative, the monad shape is undefined")]
    NegativeK1(i64),
    #[error("{which} entry at row {row}, column {col}: {source}")]
    EntryClass { which: &'static str, row: usize, col: usize, source: SurfaceError },
    #[error("matrix has {got} entries, expected {rows} x {cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },
    #[error("the pair (alpha, beta) is not a complex")]
    NotAComplex,
    #[error("condition (c3) fails, the restricted cohomology is not a bundle")]
    PreconditionC3,
    #[error("point is not in L_k")]
    NotInLk,
    #[error("negative fiber dimension: evaluation contradicts the complex condition")]
    NegativeDimension,
    #[error("shape mismatch between operands")]
    ShapeMismatch,
    #[error("matrix block is not invertible")]
    NonInvertible,
    #[error(transparent)]
    Cech(#[from] CechError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// The numerical type `(n, r, a, c)` together with the derived block sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KVector {
    pub n: i64,
    pub r: i64,
    pub a: i64,
    pub c: i64,
    pub k1: i64,
    pub k2: i64,
    pub k3: i64,
    pub k4: i64,
}

impl KVector {
    /// Validates the normalization and evaluates the four block sizes.
    /// `k1` may come out negative; shapes and moduli data then do not exist.
    pub fn new(n: i64, r: i64, a: i64, c: i64) -> Result<Self, MonadError> {
        if n < 1 {
            return Err(MonadError::Normalization(format!("n must satisfy n >= 1, got {n}")));
        }
        if r < 1 {
            return Err(MonadError::Normalization(format!("r must satisfy r >= 1, got {r}")));
        }
        if a < 0 || a > r - 1 {
            return Err(MonadError::Normalization(format!(
                "a must satisfy 0 <= a <= r-1 = {}, got {a}",
                r - 1
            )));
        }
        // a(a-1) is even, so k1 is an integer
        let k1 = c + n * a * (a - 1) / 2;
        Ok(KVector {
            n,
            r,
            a,
            c,
            k1,
            k2: k1 + n * a,
            k3: k1 + (n - 1) * a,
            k4: k1 + r - a,
        })
    }

    pub fn surface(&self) -> Surface {
        Surface::new(self.n).expect("validated at construction")
    }

    /// Moduli of this type exist if and only if `k1 >= 0`.
    pub fn valid_moduli(&self) -> bool {
        self.k1 >= 0
    }
}

/// The labeled direct sums `U`, `V`, `W` of a monad of type `kvec`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonadShape {
    kvec: KVector,
}

impl MonadShape {
    pub fn new(kvec: KVector) -> Result<Self, MonadError> {
        if kvec.k1 < 0 {
            return Err(MonadError::NegativeK1(kvec.k1));
        }
        Ok(MonadShape { kvec })
    }

    pub fn from_type(n: i64, r: i64, a: i64, c: i64) -> Result<Self, MonadError> {
        Self::new(KVector::new(n, r, a, c)?)
    }

    pub fn kvec(&self) -> &KVector {
        &self.kvec
    }

    pub fn surface(&self) -> Surface {
        self.kvec.surface()
    }

    pub fn u_classes(&self) -> Vec<PicClass> {
        vec![PicClass::new(0, -1); self.kvec.k1 as usize]
    }

    /// The `(1,-1)` block precedes the trivial block; all orderings,
    /// serializations and group actions rely on this.
    pub fn v_classes(&self) -> Vec<PicClass> {
        let mut v = vec![PicClass::new(1, -1); self.kvec.k2 as usize];
        v.extend(vec![PicClass::ZERO; self.kvec.k4 as usize]);
        v
    }

    pub fn w_classes(&self) -> Vec<PicClass> {
        vec![PicClass::new(1, 0); self.kvec.k3 as usize]
    }

    /// Dimension of the space of pairs `(alpha, beta)`:
    /// `dim Hom(U, V) + dim Hom(V, W)`.
    pub fn dim_pairs(&self) -> i64 {
        let s = self.surface();
        s.hom_dim(&self.u_classes(), &self.v_classes())
            + s.hom_dim(&self.v_classes(), &self.w_classes())
    }

    /// Dimension of the space of composites: `dim Hom(U, W)`.
    pub fn dim_composites(&self) -> i64 {
        self.surface().hom_dim(&self.u_classes(), &self.w_classes())
    }

    /// `L_k` is smooth of this dimension.
    pub fn dim_lk(&self) -> i64 {
        self.dim_pairs() - self.dim_composites()
    }

    /// Dimension of `Aut(U) x Aut(V) x Aut(W)`.
    pub fn dim_group(&self) -> i64 {
        let KVector { n, k1, k2, k3, k4, .. } = self.kvec;
        k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4 + n * k2 * k4
    }

    /// Chern character of the middle cohomology:
    /// `ch(V) - ch(U) - ch(W) = (r, aE, -c - n a^2 / 2)`.
    pub fn chern_of_cohomology(&self) -> ChernCharacter {
        let s = self.surface();
        let mut ch = ChernCharacter::zero();
        for cls in self.v_classes() {
            ch = ch.add(&s.chern_of_linebundle(cls));
        }
        for cls in self.u_classes().into_iter().chain(self.w_classes()) {
            ch = ch.sub(&s.chern_of_linebundle(cls));
        }
        ch
    }
}

/// A rectangular matrix of Cox-ring sections with prescribed row and column
/// classes; entry `(i, j)` is homogeneous of class `row[i] - col[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: i64,
    row_classes: Vec<PicClass>,
    col_classes: Vec<PicClass>,
    entries: Vec<BigradedPoly>,
}

impl PolyMatrix {
    pub fn new(
        n: i64,
        row_classes: Vec<PicClass>,
        col_classes: Vec<PicClass>,
        entries: Vec<BigradedPoly>,
        which: &'static str,
    ) -> Result<Self, MonadError> {
        let (rows, cols) = (row_classes.len(), col_classes.len());
        if entries.len() != rows * cols {
            return Err(MonadError::EntryCount { rows, cols, got: entries.len() });
        }
        for (idx, e) in entries.iter().enumerate() {
            let (row, col) = (idx / cols.max(1), idx % cols.max(1));
            let expected = row_classes[row] - col_classes[col];
            if e.n() != n {
                return Err(MonadError::EntryClass {
                    which,
                    row,
                    col,
                    source: SurfaceError::IndexMismatch(e.n(), n),
                });
            }
            if e.cls() != expected {
                return Err(MonadError::EntryClass {
                    which,
                    row,
                    col,
                    source: SurfaceError::ClassMismatch(e.cls(), expected),
                });
            }
        }
        Ok(PolyMatrix { n, row_classes, col_classes, entries })
    }

    pub fn zero(n: i64, row_classes: Vec<PicClass>, col_classes: Vec<PicClass>) -> Self {
        let entries = row_classes
            .iter()
            .flat_map(|r| col_classes.iter().map(|c| BigradedPoly::zero(n, *r - *c)))
            .collect();
        PolyMatrix { n, row_classes, col_classes, entries }
    }

    pub fn rows(&self) -> usize {
        self.row_classes.len()
    }

    pub fn cols(&self) -> usize {
        self.col_classes.len()
    }

    pub fn row_classes(&self) -> &[PicClass] {
        &self.row_classes
    }

    pub fn col_classes(&self) -> &[PicClass] {
        &self.col_classes
    }

    pub fn at(&self, i: usize, j: usize) -> &BigradedPoly {
        &self.entries[i * self.cols() + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MonadError> {
        if self.n != other.n || self.col_classes != other.row_classes {
            return Err(MonadError::ShapeMismatch);
        }
        let mut entries = Vec::with_capacity(self.rows() * other.cols());
        for i in 0..self.rows() {
            for j in 0..other.cols() {
                let mut acc = BigradedPoly::zero(self.n, self.row_classes[i] - other.col_classes[j]);
                for k in 0..self.cols() {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            n: self.n,
            row_classes: self.row_classes.clone(),
            col_classes: other.col_classes.clone(),
            entries,
        })
    }

    /// Lifts a rational matrix to constant sections; requires equal row and
    /// column classes blockwise so the entries are of class `(0,0)`.
    pub fn from_scalar(
        n: i64,
        row_classes: Vec<PicClass>,
        col_classes: Vec<PicClass>,
        m: &RatMatrix,
    ) -> Result<PolyMatrix, MonadError> {
        if m.rows() != row_classes.len() || m.cols() != col_classes.len() {
            return Err(MonadError::ShapeMismatch);
        }
        let mut entries = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let cls = row_classes[i] - col_classes[j];
                if cls != PicClass::ZERO && !m.at(i, j).is_zero() {
                    return Err(MonadError::ShapeMismatch);
                }
                entries.push(BigradedPoly::new(n, cls, [([0, 0, 0, 0], m.at(i, j).clone())])
                    .unwrap_or_else(|_| BigradedPoly::zero(n, cls)));
            }
        }
        Ok(PolyMatrix { n, row_classes, col_classes, entries })
    }

    /// Entrywise evaluation in a chart frame.
    pub fn evaluate(&self, pt: &ChartPoint) -> RatMatrix {
        RatMatrix::from_fn(self.rows(), self.cols(), |i, j| self.at(i, j).evaluate_on_chart(pt))
    }

    /// Entrywise restriction to the line at infinity.
    pub fn restrict_to_linf(&self) -> Vec<Vec<BinForm>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.at(i, j).restrict_to_linf()).collect())
            .collect()
    }

    /// Entrywise chart substitution into bivariate polynomials.
    pub fn to_chart(&self, chart: Chart) -> Vec<Vec<BiPoly>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.at(i, j).to_chart(chart)).collect())
            .collect()
    }

    fn det_on(&self, rows: &[usize], cols: &[usize]) -> BigradedPoly {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return BigradedPoly::new(self.n, PicClass::ZERO, [([0, 0, 0, 0], Rat::one())])
                .expect("constant is homogeneous");
        }
        if rows.len() == 1 {
            return self.at(rows[0], cols[0]).clone();
        }
        let r = rows[0];
        let sub_rows = &rows[1..];
        let cls: PicClass = rows.iter().map(|&i| self.row_classes[i]).fold(
            cols.iter().map(|&j| -self.col_classes[j]).fold(PicClass::ZERO, |a, b| a + b),
            |a, b| a + b,
        );
        let mut acc = BigradedPoly::zero(self.n, cls);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.at(r, c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> =
                cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &cc)| cc).collect();
            let minor = self.det_on(sub_rows, &sub_cols);
            let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            acc = acc.add(&entry.mul(&minor).expect("same surface").scale(&sign)).expect("class");
        }
        acc
    }

    /// All maximal minors, as sections.
    pub fn maximal_minors(&self) -> Vec<BigradedPoly> {
        use itertools::Itertools;
        let k = self.rows().min(self.cols());
        if k == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        if self.rows() >= self.cols() {
            let all_cols: Vec<usize> = (0..self.cols()).collect();
            for subset in (0..self.rows()).combinations(k) {
                out.push(self.det_on(&subset, &all_cols));
            }
        } else {
            let all_rows: Vec<usize> = (0..self.rows()).collect();
            for subset in (0..self.cols()).combinations(k) {
                out.push(self.det_on(&all_rows, &subset));
            }
        }
        out
    }

    /// Early-exit test for generic maximal rank.
    pub fn has_nonzero_maximal_minor(&self) -> bool {
        use itertools::Itertools;
        let k = self.rows().min(self.cols());
        if k == 0 {
            return true;
        }
        if self.rows() >= self.cols() {
            let all_cols: Vec<usize> = (0..self.cols()).collect();
            (0..self.rows()).combinations(k).any(|s| !self.det_on(&s, &all_cols).is_zero())
        } else {
            let all_rows: Vec<usize> = (0..self.rows()).collect();
            (0..self.cols()).combinations(k).any(|s| !self.det_on(&all_rows, &s).is_zero())
        }
    }
}

/// Outcome of the restricted-minor gcd test behind (c3).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum C3Witness {
    /// Every maximal minor restricts to zero.
    AllMinorsZero,
    /// Degree of the gcd of the restricted minors (0 means constant).
    GcdDegree(i64),
}

/// The five condition flags with their diagnostics. `None` marks a check
/// skipped because a prerequisite failed: (c4) needs (c3), (c5) needs (c1),
/// and nothing runs when the pair is not a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub is_complex: bool,
    pub c1: Option<bool>,
    pub c2: Option<bool>,
    pub c3: Option<bool>,
    pub c4: Option<bool>,
    pub c5: Option<bool>,
    pub c2_loci: Option<Vec<(Chart, ZeroLocusClass)>>,
    pub c5_loci: Option<Vec<(Chart, ZeroLocusClass)>>,
    pub c3_witness: Option<C3Witness>,
    pub c4_dims: Option<(usize, usize)>,
}

impl ConditionReport {
    pub fn in_lk(&self) -> bool {
        self.is_complex
            && [self.c1, self.c2, self.c3, self.c4, self.c5]
                .iter()
                .all(|c| *c == Some(true))
    }
}

/// A point `(alpha, beta)` of the ambient space of pairs, with validated
/// homogeneity. Immutable after construction; all checks are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonadPoint {
    shape: MonadShape,
    alpha: PolyMatrix,
    beta: PolyMatrix,
}

impl MonadPoint {
    pub fn new(shape: MonadShape, alpha: PolyMatrix, beta: PolyMatrix) -> Result<Self, MonadError> {
        let n = shape.kvec().n;
        // revalidate against the shape's class lists
        let alpha = PolyMatrix::new(
            n,
            shape.v_classes(),
            shape.u_classes(),
            alpha.entries,
            "alpha",
        )?;
        let beta =
            PolyMatrix::new(n, shape.w_classes(), shape.v_classes(), beta.entries, "beta")?;
        Ok(MonadPoint { shape, alpha, beta })
    }

    /// Builds a point from row-major entry lists.
    pub fn from_entries(
        shape: MonadShape,
        alpha_entries: Vec<BigradedPoly>,
        beta_entries: Vec<BigradedPoly>,
    ) -> Result<Self, MonadError> {
        let n = shape.kvec().n;
        let alpha =
            PolyMatrix::new(n, shape.v_classes(), shape.u_classes(), alpha_entries, "alpha")?;
        let beta =
            PolyMatrix::new(n, shape.w_classes(), shape.v_classes(), beta_entries, "beta")?;
        Ok(MonadPoint { shape, alpha, beta })
    }

    /// The unique point with empty maps; exists when `k1 = k3 = 0`.
    pub fn trivial(shape: MonadShape) -> Result<Self, MonadError> {
        if shape.kvec().k1 != 0 || shape.kvec().k3 != 0 {
            return Err(MonadError::Normalization(
                "the trivial monad needs k1 = k3 = 0".into(),
            ));
        }
        let n = shape.kvec().n;
        Ok(MonadPoint {
            shape,
            alpha: PolyMatrix::zero(n, shape.v_classes(), shape.u_classes()),
            beta: PolyMatrix::zero(n, shape.w_classes(), shape.v_classes()),
        })
    }

    pub fn shape(&self) -> &MonadShape {
        &self.shape
    }

    pub fn kvec(&self) -> &KVector {
        self.shape.kvec()
    }

    pub fn alpha(&self) -> &PolyMatrix {
        &self.alpha
    }

    pub fn beta(&self) -> &PolyMatrix {
        &self.beta
    }

    /// The composite `beta . alpha`, a `k3 x k1` matrix of class-(1,1)
    /// sections.
    pub fn compose_beta_alpha(&self) -> PolyMatrix {
        self.beta.mul(&self.alpha).expect("shapes agree by construction")
    }

    pub fn is_complex(&self) -> bool {
        self.compose_beta_alpha().is_zero()
    }

    /// Fiber matrices `(A, B)` at a chart point, in the chart frame; their
    /// product is zero whenever the pair is a complex.
    pub fn fiber_matrices(&self, pt: &ChartPoint) -> (RatMatrix, RatMatrix) {
        (self.alpha.evaluate(pt), self.beta.evaluate(pt))
    }

    /// Pointwise dimension of the monad cohomology:
    /// `nullity(B) - rank(A)`.
    pub fn cohomology_fiber_dim(&self, pt: &ChartPoint) -> Result<usize, MonadError> {
        if !self.is_complex() {
            return Err(MonadError::NotAComplex);
        }
        let (a, b) = self.fiber_matrices(pt);
        let nullity = b.cols() - b.rank();
        let rank_a = a.rank();
        if nullity < rank_a {
            return Err(MonadError::NegativeDimension);
        }
        Ok(nullity - rank_a)
    }

    /// (c1): `alpha` has generic rank `k1`.
    pub fn check_c1(&self) -> bool {
        self.alpha.has_nonzero_maximal_minor()
    }

    fn degeneracy_loci(
        matrix: &PolyMatrix,
    ) -> Vec<(Chart, Result<ZeroLocusClass, ZeroLocusError>)> {
        let minors = matrix.maximal_minors();
        Chart::ALL
            .iter()
            .map(|&chart| {
                let polys: Vec<BiPoly> = minors.iter().map(|m| m.to_chart(chart)).collect();
                (chart, zero_locus_class(&polys))
            })
            .collect()
    }

    /// (c2): on each chart the maximal minors of `beta` have no common
    /// zero. An all-zero minor family counts as a full-plane locus.
    pub fn check_c2(&self) -> (bool, Vec<(Chart, ZeroLocusClass)>) {
        if self.kvec().k3 == 0 {
            return (true, Vec::new());
        }
        let mut loci = Vec::new();
        let mut ok = true;
        for (chart, res) in Self::degeneracy_loci(&self.beta) {
            let cls = res.unwrap_or(ZeroLocusClass::Infinite);
            ok &= cls == ZeroLocusClass::Empty;
            loci.push((chart, cls));
        }
        (ok, loci)
    }

    /// (c3): maximal rank at every point of the line at infinity, decided
    /// by the gcd of the restricted maximal minors.
    pub fn check_c3(&self) -> (bool, C3Witness) {
        if self.kvec().k1 == 0 {
            return (true, C3Witness::GcdDegree(0));
        }
        let restricted = self.alpha.restrict_to_linf();
        let minors = crate::exact::binform_maximal_minors(&restricted);
        match BinForm::gcd_many(minors.iter()) {
            None => (false, C3Witness::AllMinorsZero),
            Some(g) => (g.deg() == 0, C3Witness::GcdDegree(g.deg())),
        }
    }

    /// (c4): vanishing of `H^0` of the restricted complex twisted by
    /// `O(-1)`. Requires (c3); the twisted complex has Euler characteristic
    /// zero, so `H^0 = 0` also forces `H^1 = 0` once the restriction is a
    /// monad.
    pub fn check_c4(&self) -> Result<(bool, (usize, usize)), MonadError> {
        if !self.check_c3().0 {
            return Err(MonadError::PreconditionC3);
        }
        let pc = self.restrict_to_linf_complex()?;
        debug_assert_eq!(pc.twist(-1).euler_char(), 0);
        let res = hyper_h(&pc.twist(-1))?;
        Ok((res.h0 == 0, (res.h0, res.h1)))
    }

    /// (c5): the degeneracy locus of `alpha` is at most finite on every
    /// chart, so the cohomology has no torsion.
    pub fn check_c5(&self) -> (bool, Vec<(Chart, ZeroLocusClass)>) {
        if self.kvec().k1 == 0 {
            return (true, Vec::new());
        }
        let mut loci = Vec::new();
        let mut ok = true;
        for (chart, res) in Self::degeneracy_loci(&self.alpha) {
            let cls = res.unwrap_or(ZeroLocusClass::Infinite);
            ok &= cls != ZeroLocusClass::Infinite;
            loci.push((chart, cls));
        }
        (ok, loci)
    }

    /// Runs every condition whose prerequisites hold and aggregates the
    /// verdict: the point lies in `L_k` iff the pair is a complex and all
    /// five conditions are true.
    pub fn check_all(&self) -> ConditionReport {
        let is_complex = self.is_complex();
        let mut report = ConditionReport {
            is_complex,
            c1: None,
            c2: None,
            c3: None,
            c4: None,
            c5: None,
            c2_loci: None,
            c5_loci: None,
            c3_witness: None,
            c4_dims: None,
        };
        if !is_complex {
            return report;
        }
        report.c1 = Some(self.check_c1());
        let (c2, c2_loci) = self.check_c2();
        report.c2 = Some(c2);
        report.c2_loci = Some(c2_loci);
        let (c3, witness) = self.check_c3();
        report.c3 = Some(c3);
        report.c3_witness = Some(witness);
        if c3 {
            let (c4, dims) = self.check_c4().expect("c3 verified");
            report.c4 = Some(c4);
            report.c4_dims = Some(dims);
        }
        if report.c1 == Some(true) {
            let (c5, c5_loci) = self.check_c5();
            report.c5 = Some(c5);
            report.c5_loci = Some(c5_loci);
        }
        report
    }

    /// Early-exit membership test for `L_k`, cheapest conditions first.
    /// Equivalent to `check_all().in_lk()`.
    pub fn is_in_lk(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Name of the first failing requirement, in evaluation order, or
    /// `None` for a point of `L_k`. Used by the sampler's statistics.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.is_complex() {
            return Some("complex");
        }
        if !self.check_c1() {
            return Some("c1");
        }
        if !self.check_c3().0 {
            return Some("c3");
        }
        if !self.check_c5().0 {
            return Some("c5");
        }
        if !self.check_c2().0 {
            return Some("c2");
        }
        if !self.check_c4().expect("c3 verified").0 {
            return Some("c4");
        }
        None
    }

    /// The restriction of the monad to the line at infinity, with degrees
    /// derived from intersection numbers.
    pub fn restrict_to_linf_complex(&self) -> Result<P1Complex, MonadError> {
        let s = self.shape.surface();
        let deg = |cls: PicClass| s.intersect(cls, PicClass::H);
        let du: Vec<i64> = self.shape.u_classes().into_iter().map(deg).collect();
        let dv: Vec<i64> = self.shape.v_classes().into_iter().map(deg).collect();
        let dw: Vec<i64> = self.shape.w_classes().into_iter().map(deg).collect();
        Ok(P1Complex::new(
            du,
            dv,
            dw,
            self.alpha.restrict_to_linf(),
            self.beta.restrict_to_linf(),
        )?)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exact::rat_int;

    pub(crate) fn poly(n: i64, terms: &[([u32; 4], i64)]) -> BigradedPoly {
        let cls = BigradedPoly::monomial_class(n, terms[0].0);
        BigradedPoly::new(n, cls, terms.iter().map(|&(e, c)| (e, rat_int(c)))).unwrap()
    }

    pub(crate) fn zero_cls(n: i64, cls: PicClass) -> BigradedPoly {
        BigradedPoly::zero(n, cls)
    }

    /// The worked shape `(1,1,0,1)` with `k = (1,1,1,2)`.
    pub(crate) fn shape_11() -> MonadShape {
        MonadShape::from_type(1, 1, 0, 1).unwrap()
    }

    /// A hand-checked point of `L_k` for type `(1,1,0,1)`:
    /// `alpha = (z1 z3, z2, z2)^T`, `beta = (z2, -z1 z3 + z4, -z4)`.
    /// Its cohomology is the ideal sheaf of the point `z2 = z3 = 0`.
    pub(crate) fn valid_point_11() -> MonadPoint {
        let n = 1;
        let alpha = vec![
            poly(n, &[([1, 0, 1, 0], 1)]),
            poly(n, &[([0, 1, 0, 0], 1)]),
            poly(n, &[([0, 1, 0, 0], 1)]),
        ];
        let beta = vec![
            poly(n, &[([0, 1, 0, 0], 1)]),
            poly(n, &[([1, 0, 1, 0], -1), ([0, 0, 0, 1], 1)]),
            poly(n, &[([0, 0, 0, 1], -1)]),
        ];
        MonadPoint::from_entries(shape_11(), alpha, beta).unwrap()
    }

    /// The complex from the worked examples: `alpha = (z4, z1, z2)^T`,
    /// `beta = (z1, -z4, 0)`; a complex that fails (c2).
    pub(crate) fn complex_point_11() -> MonadPoint {
        let n = 1;
        let alpha = vec![
            poly(n, &[([0, 0, 0, 1], 1)]),
            poly(n, &[([1, 0, 0, 0], 1)]),
            poly(n, &[([0, 1, 0, 0], 1)]),
        ];
        let beta = vec![
            poly(n, &[([1, 0, 0, 0], 1)]),
            poly(n, &[([0, 0, 0, 1], -1)]),
            zero_cls(n, PicClass::new(1, 0)),
        ];
        MonadPoint::from_entries(shape_11(), alpha, beta).unwrap()
    }

    #[test]
    fn k_from_chern_examples() {
        let k = KVector::new(1, 1, 0, 1).unwrap();
        assert_eq!((k.k1, k.k2, k.k3, k.k4), (1, 1, 1, 2));
        let k = KVector::new(2, 3, 1, 2).unwrap();
        assert_eq!((k.k1, k.k2, k.k3, k.k4), (2, 4, 3, 4));
        let k = KVector::new(1, 1, 0, 0).unwrap();
        assert_eq!((k.k1, k.k2, k.k3, k.k4), (0, 0, 0, 1));
        assert!(k.valid_moduli());
        assert!(matches!(KVector::new(1, 1, 1, 0), Err(MonadError::Normalization(_))));
        assert!(matches!(KVector::new(0, 1, 0, 1), Err(MonadError::Normalization(_))));
        // negative k1 is representable but not a valid moduli type
        let k = KVector::new(1, 2, 1, -1).unwrap();
        assert_eq!(k.k1, -1);
        assert!(!k.valid_moduli());
        assert!(matches!(MonadShape::new(k), Err(MonadError::NegativeK1(-1))));
    }

    #[test]
    fn rank_identity_on_grid() {
        for n in 1..=4 {
            for r in 1..=4 {
                for a in 0..=r - 1 {
                    for k1 in 0..=6 {
                        let c = k1 - n * a * (a - 1) / 2;
                        let k = KVector::new(n, r, a, c).unwrap();
                        assert_eq!(k.k1, k1);
                        assert_eq!(k.k2 + k.k4 - k.k1 - k.k3, r);
                    }
                }
            }
        }
    }

    #[test]
    fn shape_examples() {
        let s = shape_11();
        assert_eq!(s.u_classes(), vec![PicClass::new(0, -1)]);
        assert_eq!(
            s.v_classes(),
            vec![PicClass::new(1, -1), PicClass::ZERO, PicClass::ZERO]
        );
        assert_eq!(s.w_classes(), vec![PicClass::new(1, 0)]);

        let t = MonadShape::from_type(3, 2, 0, 0).unwrap();
        assert!(t.u_classes().is_empty());
        assert_eq!(t.v_classes(), vec![PicClass::ZERO; 2]);
        assert!(t.w_classes().is_empty());

        let u = MonadShape::from_type(1, 2, 1, 1).unwrap();
        let k = u.kvec();
        assert_eq!((k.k1, k.k2, k.k3, k.k4), (1, 2, 1, 2));
    }

    #[test]
    fn dims_worked_example() {
        let s = shape_11();
        assert_eq!(s.dim_pairs(), 15);
        assert_eq!(s.dim_composites(), 5);
        assert_eq!(s.dim_lk(), 10);
        assert_eq!(s.dim_group(), 9);
    }

    #[test]
    fn chern_examples() {
        let ch = shape_11().chern_of_cohomology();
        assert_eq!((ch.rk, ch.c1), (1, PicClass::ZERO));
        assert_eq!(ch.ch2, -rat_int(1));

        let ch = MonadShape::from_type(3, 2, 0, 0).unwrap().chern_of_cohomology();
        assert_eq!((ch.rk, ch.c1, ch.ch2), (2, PicClass::ZERO, rat_int(0)));

        let ch = MonadShape::from_type(2, 3, 1, 2).unwrap().chern_of_cohomology();
        assert_eq!((ch.rk, ch.c1), (3, PicClass::new(1, -2)));
        assert_eq!(ch.ch2, -rat_int(3));
    }

    #[test]
    fn composition_examples() {
        let mp = complex_point_11();
        assert!(mp.is_complex());

        // beta = (z1, 0, 0) does not compose to zero with the same alpha
        let n = 1;
        let beta_bad = vec![
            poly(n, &[([1, 0, 0, 0], 1)]),
            zero_cls(n, PicClass::new(1, 0)),
            zero_cls(n, PicClass::new(1, 0)),
        ];
        let bad = MonadPoint::from_entries(
            shape_11(),
            vec![
                poly(n, &[([0, 0, 0, 1], 1)]),
                poly(n, &[([1, 0, 0, 0], 1)]),
                poly(n, &[([0, 1, 0, 0], 1)]),
            ],
            beta_bad,
        )
        .unwrap();
        assert!(!bad.is_complex());
        assert_eq!(bad.cohomology_fiber_dim(&any_pt()), Err(MonadError::NotAComplex));
    }

    fn any_pt() -> ChartPoint {
        ChartPoint::new(Chart::C23, (rat_int(2), rat_int(5)))
    }

    #[test]
    fn homogeneity_validation_names_entry() {
        let n = 1;
        // z1 has class (0,1); putting it in the (1,0) slot must fail
        let bad = MonadPoint::from_entries(
            shape_11(),
            vec![
                poly(n, &[([1, 0, 0, 0], 1)]),
                poly(n, &[([1, 0, 0, 0], 1)]),
                poly(n, &[([0, 1, 0, 0], 1)]),
            ],
            vec![
                poly(n, &[([1, 0, 0, 0], 1)]),
                poly(n, &[([0, 0, 0, 1], -1)]),
                zero_cls(n, PicClass::new(1, 0)),
            ],
        );
        match bad {
            Err(MonadError::EntryClass { which: "alpha", row: 0, col: 0, .. }) => {}
            other => panic!("expected alpha entry error, got {other:?}"),
        }
    }

    #[test]
    fn condition_examples_on_worked_points() {
        let mp = complex_point_11();
        assert!(mp.check_c1());
        let (c2, loci) = mp.check_c2();
        assert!(!c2);
        // the failing chart is (2,3): z1 = z4 = 0 is a genuine surface point
        assert!(loci
            .iter()
            .any(|(ch, cls)| *ch == Chart::C23 && *cls == ZeroLocusClass::Finite));
        let (c3, _) = mp.check_c3();
        assert!(c3);
        let (c5, loci) = mp.check_c5();
        assert!(c5);
        assert!(loci.iter().all(|(_, cls)| *cls == ZeroLocusClass::Empty));
    }

    #[test]
    fn c3_failure_example() {
        // alpha = (z4, z1, z1)^T: restricted minors {0, z1, z1}
        let n = 1;
        let mp = MonadPoint::from_entries(
            shape_11(),
            vec![
                poly(n, &[([0, 0, 0, 1], 1)]),
                poly(n, &[([1, 0, 0, 0], 1)]),
                poly(n, &[([1, 0, 0, 0], 1)]),
            ],
            vec![
                poly(n, &[([1, 0, 0, 0], 1)]),
                poly(n, &[([0, 0, 0, 1], -1)]),
                zero_cls(n, PicClass::new(1, 0)),
            ],
        )
        .unwrap();
        // not a complex (beta.alpha = z1 z4 - z4 z1 + 0 = 0: it is a complex)
        assert!(mp.is_complex());
        let (c3, witness) = mp.check_c3();
        assert!(!c3);
        assert_eq!(witness, C3Witness::GcdDegree(1));
        assert_eq!(mp.check_c4(), Err(MonadError::PreconditionC3));
    }

    #[test]
    fn c5_infinite_example() {
        // alpha = z1 * (z3, 1, 0)^T has gcd z1 among its minors
        let n = 1;
        let mp = MonadPoint::from_entries(
            shape_11(),
            vec![
                poly(n, &[([1, 0, 1, 0], 1)]),
                poly(n, &[([1, 0, 0, 0], 1)]),
                zero_cls(n, PicClass::new(0, 1)),
            ],
            vec![
                zero_cls(n, PicClass::new(0, 1)),
                zero_cls(n, PicClass::new(1, 0)),
                zero_cls(n, PicClass::new(1, 0)),
            ],
        )
        .unwrap();
        assert!(mp.is_complex());
        let (c5, loci) = mp.check_c5();
        assert!(!c5);
        assert!(loci.iter().any(|(_, cls)| *cls == ZeroLocusClass::Infinite));
    }

    #[test]
    fn valid_point_passes_everything() {
        let mp = valid_point_11();
        let report = mp.check_all();
        assert!(report.is_complex);
        assert_eq!(report.c1, Some(true));
        assert_eq!(report.c2, Some(true));
        assert_eq!(report.c3, Some(true));
        assert_eq!(report.c4, Some(true), "c4 dims: {:?}", report.c4_dims);
        assert_eq!(report.c5, Some(true));
        assert!(report.in_lk());
        assert!(mp.is_in_lk());
        assert_eq!(mp.first_failure(), None);
    }

    #[test]
    fn fiber_dimensions_of_valid_point() {
        let mp = valid_point_11();
        // generic point: dimension r = 1
        let generic = ChartPoint::new(Chart::C23, (rat_int(3), rat_int(7)));
        assert_eq!(mp.cohomology_fiber_dim(&generic).unwrap(), 1);
        // the degeneracy point z2 = z3 = 0 on chart (1,4): dimension r + 1
        let degenerate = ChartPoint::new(Chart::C14, (rat_int(0), rat_int(0)));
        assert_eq!(mp.cohomology_fiber_dim(&degenerate).unwrap(), 2);
        // B A = 0 at random chart points
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let chart = Chart::ALL[rng.gen_range(0..4)];
            let pt = ChartPoint::new(
                chart,
                (rat_int(rng.gen_range(-9..=9)), rat_int(rng.gen_range(-9..=9))),
            );
            let (a, b) = mp.fiber_matrices(&pt);
            assert!(b.mul(&a).is_zero());
        }
    }

    #[test]
    fn trivial_monad_all_conditions() {
        for (n, r) in [(1, 1), (2, 2), (3, 1)] {
            let shape = MonadShape::from_type(n, r, 0, 0).unwrap();
            let mp = MonadPoint::trivial(shape).unwrap();
            let report = mp.check_all();
            assert!(report.in_lk(), "trivial monad for n={n}, r={r}");
            let pc = mp.restrict_to_linf_complex().unwrap();
            assert_eq!(pc.expected_rank(), r);
            // fiber dimension r everywhere
            let pt = ChartPoint::new(Chart::C13, (rat_int(4), rat_int(-2)));
            assert_eq!(mp.cohomology_fiber_dim(&pt).unwrap(), r as usize);
        }
    }

    #[test]
    fn restricted_degrees() {
        let pc = valid_point_11().restrict_to_linf_complex().unwrap();
        assert_eq!(pc.degrees_u(), &[-1]);
        assert_eq!(pc.degrees_v(), &[0, 0, 0]);
        assert_eq!(pc.degrees_w(), &[1]);
    }
}
