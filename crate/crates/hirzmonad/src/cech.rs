//! Hypercohomology of a three-term complex of line-bundle sums on the
//! projective line, via a truncated two-chart Cech model.
//!
//! `P1` is covered by `{z2 != 0}` with coordinate `t = z1/z2` and
//! `{z1 != 0}` with `s = z2/z1`. A section of `O(d)` is represented on the
//! first chart by a polynomial in `t` (frame `z2^d`), on the second by a
//! polynomial in `s` (frame `z1^d`), and on the overlap by a Laurent
//! polynomial in `t`; the gluing sends `f1(s)` to `t^d f1(1/t)`.
//!
//! Truncation windows are chosen so that each per-bundle truncated Cech
//! complex has exactly the cohomology of the line bundle: chart-0
//! polynomials up to degree `B`, chart-1 up to `B + max(d, 0)`, Laurent
//! exponents in `[min(d, 0) - B, B]`, with `B` growing along the complex by
//! the degree of the maps. With those choices the inclusion into the full
//! Cech double complex is an isomorphism on the first spectral-sequence
//! page, hence on hypercohomology; the window-doubling comparison inside
//! [`hyper_h`] is kept as a guard against bookkeeping regressions.
//!
//! The complex sits in degrees -1, 0, 1, so the total complex also carries
//! cohomology in degrees -1 and 2 (`ker` of the first map, `coker` of the
//! last); both vanish exactly when the complex is fiberwise a monad, and
//! they enter the Euler-characteristic identity
//! `-h^{-1} + h^0 - h^1 + h^2 = sum chi`.

use num::{One, Zero};

use crate::exact::{binform_maximal_minors, BinForm, Rat, RatMatrix, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CechError {
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("hypercohomology dimensions changed when doubling the truncation window")]
    WindowUnstable,
    #[error("the complex is not fiberwise a monad along P1, cohomology is not a bundle")]
    NotABundle,
    #[error("the cohomology bundle is not trivial")]
    NotTrivial,
}

/// A complex `U -a-> V -b-> W` of sums of line bundles on `P1`, placed in
/// degrees -1, 0, 1, with `b . a = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1Complex {
    degrees_u: Vec<i64>,
    degrees_v: Vec<i64>,
    degrees_w: Vec<i64>,
    map_a: Vec<Vec<BinForm>>,
    map_b: Vec<Vec<BinForm>>,
}

impl P1Complex {
    /// Builds and validates a complex. Entry `(i, j)` of `a` must be a form
    /// of ambient degree `degrees_v[i] - degrees_u[j]`, likewise for `b`,
    /// and the composite must vanish.
    pub fn new(
        degrees_u: Vec<i64>,
        degrees_v: Vec<i64>,
        degrees_w: Vec<i64>,
        map_a: Vec<Vec<BinForm>>,
        map_b: Vec<Vec<BinForm>>,
    ) -> Result<Self, CechError> {
        check_shape(&map_a, degrees_v.len(), degrees_u.len(), "a")?;
        check_shape(&map_b, degrees_w.len(), degrees_v.len(), "b")?;
        check_degrees(&map_a, &degrees_v, &degrees_u, "a")?;
        check_degrees(&map_b, &degrees_w, &degrees_v, "b")?;
        let composite = binmat_mul(&map_b, &map_a, &degrees_w, &degrees_u);
        if composite.iter().flatten().any(|f| !f.is_zero()) {
            return Err(CechError::Malformed("composite b.a is nonzero".into()));
        }
        Ok(P1Complex { degrees_u, degrees_v, degrees_w, map_a, map_b })
    }

    /// A single middle term `0 -> +O(d_i) -> 0`.
    pub fn middle_only(degrees_v: Vec<i64>) -> Self {
        let k = degrees_v.len();
        P1Complex {
            degrees_u: Vec::new(),
            degrees_v,
            degrees_w: Vec::new(),
            map_a: vec![Vec::new(); k],
            map_b: Vec::new(),
        }
    }

    pub fn degrees_u(&self) -> &[i64] {
        &self.degrees_u
    }

    pub fn degrees_v(&self) -> &[i64] {
        &self.degrees_v
    }

    pub fn degrees_w(&self) -> &[i64] {
        &self.degrees_w
    }

    pub fn map_a(&self) -> &[Vec<BinForm>] {
        &self.map_a
    }

    pub fn map_b(&self) -> &[Vec<BinForm>] {
        &self.map_b
    }

    /// Twist by `O(t)`: all degrees shift, the matrices are unchanged.
    pub fn twist(&self, t: i64) -> Self {
        P1Complex {
            degrees_u: self.degrees_u.iter().map(|d| d + t).collect(),
            degrees_v: self.degrees_v.iter().map(|d| d + t).collect(),
            degrees_w: self.degrees_w.iter().map(|d| d + t).collect(),
            map_a: self.map_a.clone(),
            map_b: self.map_b.clone(),
        }
    }

    /// Rank of the middle cohomology when the complex is fiberwise a monad.
    pub fn expected_rank(&self) -> i64 {
        self.degrees_v.len() as i64 - self.degrees_u.len() as i64 - self.degrees_w.len() as i64
    }

    /// Degree of the middle cohomology (first Chern class bookkeeping).
    pub fn expected_degree(&self) -> i64 {
        self.degrees_v.iter().sum::<i64>()
            - self.degrees_u.iter().sum::<i64>()
            - self.degrees_w.iter().sum::<i64>()
    }

    /// `sum chi = sum (d_V + 1) - sum (d_U + 1) - sum (d_W + 1)`.
    pub fn euler_char(&self) -> i64 {
        let s = |ds: &[i64]| ds.iter().map(|d| d + 1).sum::<i64>();
        s(&self.degrees_v) - s(&self.degrees_u) - s(&self.degrees_w)
    }

    /// Fiberwise injectivity of `a` everywhere on `P1`: the maximal minors
    /// have no common projective root (vacuous for an empty `U`).
    pub fn a_fiberwise_injective(&self) -> bool {
        fiberwise_max_rank(&self.map_a, self.degrees_u.len(), self.degrees_v.len())
    }

    /// Fiberwise surjectivity of `b` everywhere on `P1`.
    pub fn b_fiberwise_surjective(&self) -> bool {
        fiberwise_max_rank(&self.map_b, self.degrees_w.len(), self.degrees_v.len())
    }

    /// Both half-exactness conditions: the middle cohomology is then a
    /// bundle of rank [`Self::expected_rank`].
    pub fn is_fiberwise_monad(&self) -> bool {
        self.expected_rank() >= 0 && self.a_fiberwise_injective() && self.b_fiberwise_surjective()
    }

    fn max_map_degree(&self) -> i64 {
        self.map_a
            .iter()
            .chain(self.map_b.iter())
            .flatten()
            .filter(|f| !f.is_zero())
            .map(|f| f.deg())
            .max()
            .unwrap_or(0)
    }

    fn max_bundle_degree(&self) -> i64 {
        self.degrees_u
            .iter()
            .chain(self.degrees_v.iter())
            .chain(self.degrees_w.iter())
            .map(|d| d.abs())
            .max()
            .unwrap_or(0)
    }

    /// Default truncation bound: largest |degree| plus largest map degree
    /// plus 2.
    pub fn default_window(&self) -> i64 {
        self.max_bundle_degree() + self.max_map_degree() + 2
    }
}

fn check_shape(
    m: &[Vec<BinForm>],
    rows: usize,
    cols: usize,
    which: &str,
) -> Result<(), CechError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(CechError::Malformed(format!(
            "map {which} must be {rows}x{cols}, got {}x{}",
            m.len(),
            m.first().map_or(0, |r| r.len())
        )));
    }
    Ok(())
}

fn check_degrees(
    m: &[Vec<BinForm>],
    tgt: &[i64],
    src: &[i64],
    which: &str,
) -> Result<(), CechError> {
    for (i, row) in m.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            let expected = tgt[i] - src[j];
            if f.deg() != expected {
                return Err(CechError::Malformed(format!(
                    "entry ({i},{j}) of {which} has degree {} but should be {expected}",
                    f.deg()
                )));
            }
            if expected < 0 && !f.is_zero() {
                return Err(CechError::Malformed(format!(
                    "entry ({i},{j}) of {which} is nonzero of negative degree"
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn binmat_mul(
    b: &[Vec<BinForm>],
    a: &[Vec<BinForm>],
    deg_rows: &[i64],
    deg_cols: &[i64],
) -> Vec<Vec<BinForm>> {
    let mid = a.len();
    (0..deg_rows.len())
        .map(|l| {
            (0..deg_cols.len())
                .map(|j| {
                    let mut acc = BinForm::zero(deg_rows[l] - deg_cols[j]);
                    for i in 0..mid {
                        acc = acc.add(&b[l][i].mul(&a[i][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn fiberwise_max_rank(m: &[Vec<BinForm>], small_side: usize, other_side: usize) -> bool {
    if small_side == 0 {
        return true;
    }
    if small_side > other_side {
        return false;
    }
    match BinForm::gcd_many(binform_maximal_minors(m).iter()) {
        None => false,         // every minor vanishes identically
        Some(g) => g.deg() == 0, // constant gcd: no common projective root
    }
}

/// A Cech 0-cochain of the total complex in degree 0: chart data for each
/// `V` summand plus overlap (Laurent) data for each `U` summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechCochain {
    /// Per `V` summand: chart-0 coefficients, ascending powers of `t`.
    pub v_chart0: Vec<Vec<Rat>>,
    /// Per `V` summand: chart-1 coefficients, ascending powers of `s`.
    pub v_chart1: Vec<Vec<Rat>>,
    /// Per `U` summand: lowest exponent and ascending Laurent coefficients.
    pub u_laurent: Vec<(i64, Vec<Rat>)>,
}

/// Dimensions of the hypercohomology of the truncated total complex, plus
/// canonical representatives for degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechResult {
    pub h_minus1: usize,
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub h0_basis: Vec<CechCochain>,
    pub window: i64,
}

/// Splitting type of a bundle on `P1`: the degrees of its line-bundle
/// summands, descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingType(pub Vec<i64>);

impl SplittingType {
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

// ---- truncated model ----

struct Layout {
    degrees: Vec<i64>,
    b: i64,
    c0_offsets: Vec<usize>,
    c0_dim: usize,
    c1_offsets: Vec<usize>,
    c1_dim: usize,
}

impl Layout {
    fn new(degrees: &[i64], b: i64) -> Layout {
        for d in degrees {
            assert!(d.abs() <= b, "window too small for bundle degree {d}");
        }
        let mut c0_offsets = Vec::with_capacity(degrees.len());
        let mut c0_dim = 0usize;
        let mut c1_offsets = Vec::with_capacity(degrees.len());
        let mut c1_dim = 0usize;
        for &d in degrees {
            c0_offsets.push(c0_dim);
            c0_dim += (b + 1) as usize + (b + d.max(0) + 1) as usize;
            c1_offsets.push(c1_dim);
            c1_dim += (2 * b - d.min(0) + 1) as usize;
        }
        Layout { degrees: degrees.to_vec(), b, c0_offsets, c0_dim, c1_offsets, c1_dim }
    }

    fn chart0_len(&self) -> i64 {
        self.b + 1
    }

    fn chart1_len(&self, i: usize) -> i64 {
        self.b + self.degrees[i].max(0) + 1
    }

    fn c0_chart0(&self, i: usize, e: i64) -> usize {
        debug_assert!((0..self.chart0_len()).contains(&e));
        self.c0_offsets[i] + e as usize
    }

    fn c0_chart1(&self, i: usize, j: i64) -> usize {
        debug_assert!((0..self.chart1_len(i)).contains(&j));
        self.c0_offsets[i] + (self.b + 1) as usize + j as usize
    }

    fn c1_lo(&self, i: usize) -> i64 {
        self.degrees[i].min(0) - self.b
    }

    fn c1(&self, i: usize, e: i64) -> usize {
        debug_assert!((self.c1_lo(i)..=self.b).contains(&e));
        self.c1_offsets[i] + (e - self.c1_lo(i)) as usize
    }
}

/// Cech differential `C0 -> C1`: `(f0, f1) |-> t^d f1(1/t) - f0(t)`.
fn delta_matrix(l: &Layout) -> RatMatrix {
    let mut m = RatMatrix::zeros(l.c1_dim, l.c0_dim);
    for (i, &d) in l.degrees.iter().enumerate() {
        for e in 0..l.chart0_len() {
            *m.at_mut(l.c1(i, e), l.c0_chart0(i, e)) -= Rat::one();
        }
        for j in 0..l.chart1_len(i) {
            *m.at_mut(l.c1(i, d - j), l.c0_chart1(i, j)) += Rat::one();
        }
    }
    m
}

/// Componentwise multiplication by a matrix of forms on 0-cochains.
fn mult_c0(src: &Layout, tgt: &Layout, forms: &[Vec<BinForm>]) -> RatMatrix {
    let mut m = RatMatrix::zeros(tgt.c0_dim, src.c0_dim);
    for (ti, row) in forms.iter().enumerate() {
        for (sj, f) in row.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let deg = f.deg();
            for (k, c) in f.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                // phi(t, 1) = sum c_k t^k on chart 0
                for e in 0..src.chart0_len() {
                    *m.at_mut(tgt.c0_chart0(ti, e + k as i64), src.c0_chart0(sj, e)) += c;
                }
                // phi(1, s) = sum c_k s^(deg - k) on chart 1
                for e in 0..src.chart1_len(sj) {
                    *m.at_mut(tgt.c0_chart1(ti, e + deg - k as i64), src.c0_chart1(sj, e)) += c;
                }
            }
        }
    }
    m
}

/// Componentwise multiplication on overlap (Laurent) cochains.
fn mult_c1(src: &Layout, tgt: &Layout, forms: &[Vec<BinForm>]) -> RatMatrix {
    let mut m = RatMatrix::zeros(tgt.c1_dim, src.c1_dim);
    for (ti, row) in forms.iter().enumerate() {
        for (sj, f) in row.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (k, c) in f.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for e in src.c1_lo(sj)..=src.b {
                    *m.at_mut(tgt.c1(ti, e + k as i64), src.c1(sj, e)) += c;
                }
            }
        }
    }
    m
}

/// Stacks blocks `[[A, B], [C, D], ...]`; `None` stands for a zero block.
fn assemble(
    row_dims: &[usize],
    col_dims: &[usize],
    blocks: Vec<Vec<Option<&RatMatrix>>>,
) -> RatMatrix {
    let rows: usize = row_dims.iter().sum();
    let cols: usize = col_dims.iter().sum();
    let mut m = RatMatrix::zeros(rows, cols);
    let mut r0 = 0;
    for (bi, rd) in row_dims.iter().enumerate() {
        let mut c0 = 0;
        for (bj, cd) in col_dims.iter().enumerate() {
            if let Some(blk) = blocks[bi][bj] {
                assert_eq!((blk.rows(), blk.cols()), (*rd, *cd));
                for i in 0..*rd {
                    for j in 0..*cd {
                        *m.at_mut(r0 + i, c0 + j) = blk.at(i, j).clone();
                    }
                }
            }
            c0 += cd;
        }
        r0 += rd;
    }
    m
}

struct Model {
    lu: Layout,
    lv: Layout,
    lw: Layout,
    d_m1: RatMatrix,
    d_0: RatMatrix,
    d_1: RatMatrix,
}

impl Model {
    fn build(pc: &P1Complex, window: i64) -> Model {
        let ma = pc
            .map_a
            .iter()
            .flatten()
            .filter(|f| !f.is_zero())
            .map(|f| f.deg())
            .max()
            .unwrap_or(0);
        let mb = pc
            .map_b
            .iter()
            .flatten()
            .filter(|f| !f.is_zero())
            .map(|f| f.deg())
            .max()
            .unwrap_or(0);
        let lu = Layout::new(&pc.degrees_u, window);
        let lv = Layout::new(&pc.degrees_v, window + ma);
        let lw = Layout::new(&pc.degrees_w, window + ma + mb);

        let a0 = mult_c0(&lu, &lv, &pc.map_a);
        let a1 = mult_c1(&lu, &lv, &pc.map_a);
        let b0 = mult_c0(&lv, &lw, &pc.map_b);
        let b1 = mult_c1(&lv, &lw, &pc.map_b);
        let du = delta_matrix(&lu).scale(&-Rat::one());
        let dv = delta_matrix(&lv);
        let dw = delta_matrix(&lw).scale(&-Rat::one());

        // T-1 = C0(U); T0 = C0(V) + C1(U); T1 = C1(V) + C0(W); T2 = C1(W)
        let d_m1 = assemble(
            &[lv.c0_dim, lu.c1_dim],
            &[lu.c0_dim],
            vec![vec![Some(&a0)], vec![Some(&du)]],
        );
        let d_0 = assemble(
            &[lv.c1_dim, lw.c0_dim],
            &[lv.c0_dim, lu.c1_dim],
            vec![vec![Some(&dv), Some(&a1)], vec![Some(&b0), None]],
        );
        let d_1 = assemble(
            &[lw.c1_dim],
            &[lv.c1_dim, lw.c0_dim],
            vec![vec![Some(&b1), Some(&dw)]],
        );
        debug_assert!(d_0.mul(&d_m1).is_zero());
        debug_assert!(d_1.mul(&d_0).is_zero());
        Model { lu, lv, lw, d_m1, d_0, d_1 }
    }

    fn dims(&self) -> (usize, usize, usize, usize) {
        let t_m1 = self.lu.c0_dim;
        let t0 = self.lv.c0_dim + self.lu.c1_dim;
        let t1 = self.lv.c1_dim + self.lw.c0_dim;
        let t2 = self.lw.c1_dim;
        let r_m1 = self.d_m1.rank();
        let r0 = self.d_0.rank();
        let r1 = self.d_1.rank();
        let hm1 = t_m1 - r_m1;
        let h0 = t0 - r0 - r_m1;
        let h1 = t1 - r1 - r0;
        let h2 = t2 - r1;
        (hm1, h0, h1, h2)
    }

    /// Canonical representatives of `ker D0 / im D-1` (column-reduced
    /// echelon vectors whose pivots lie outside the image's pivot set).
    fn h0_representatives(&self) -> Vec<Vec<Rat>> {
        let kernel = self.d_0.kernel_basis();
        let image = col_rref(&self.d_m1);
        let combined = col_rref(&image.hstack(&kernel));
        let image_pivots = col_pivots(&image);
        let mut reps = Vec::new();
        for j in 0..combined.cols() {
            let col = combined.column(j);
            let pivot = col.iter().position(|v| !v.is_zero()).expect("echelon column");
            if !image_pivots.contains(&pivot) {
                reps.push(col);
            }
        }
        reps
    }

    fn cochain_from_vec(&self, v: &[Rat]) -> CechCochain {
        let mut v_chart0 = Vec::new();
        let mut v_chart1 = Vec::new();
        for i in 0..self.lv.degrees.len() {
            let c0: Vec<Rat> =
                (0..self.lv.chart0_len()).map(|e| v[self.lv.c0_chart0(i, e)].clone()).collect();
            let c1: Vec<Rat> =
                (0..self.lv.chart1_len(i)).map(|j| v[self.lv.c0_chart1(i, j)].clone()).collect();
            v_chart0.push(c0);
            v_chart1.push(c1);
        }
        let base = self.lv.c0_dim;
        let mut u_laurent = Vec::new();
        for i in 0..self.lu.degrees.len() {
            let lo = self.lu.c1_lo(i);
            let coeffs: Vec<Rat> =
                (lo..=self.lu.b).map(|e| v[base + self.lu.c1(i, e)].clone()).collect();
            u_laurent.push((lo, coeffs));
        }
        CechCochain { v_chart0, v_chart1, u_laurent }
    }
}

/// Column-reduced echelon basis of the column space (zero columns dropped).
fn col_rref(m: &RatMatrix) -> RatMatrix {
    let (r, pivots) = m.transpose().rref();
    let rank = pivots.len();
    RatMatrix::from_fn(m.rows(), rank, |i, j| r.at(j, i).clone())
}

fn col_pivots(m: &RatMatrix) -> Vec<usize> {
    (0..m.cols())
        .map(|j| {
            let col = m.column(j);
            col.iter().position(|v| !v.is_zero()).expect("echelon column")
        })
        .collect()
}

/// Hypercohomology dimensions of the truncated total complex, with the
/// window-doubling stability check and canonical degree-0 representatives.
pub fn hyper_h(pc: &P1Complex) -> Result<CechResult, CechError> {
    let w = pc.default_window();
    let model = Model::build(pc, w);
    let dims = model.dims();
    let doubled = Model::build(pc, 2 * w).dims();
    if dims != doubled {
        return Err(CechError::WindowUnstable);
    }
    let (h_minus1, h0, h1, h2) = dims;
    let h0_basis: Vec<CechCochain> =
        model.h0_representatives().iter().map(|v| model.cochain_from_vec(v)).collect();
    debug_assert_eq!(h0_basis.len(), h0);
    debug_assert_eq!(
        -(h_minus1 as i64) + h0 as i64 - h1 as i64 + h2 as i64,
        pc.euler_char(),
        "Euler characteristic mismatch in the Cech model"
    );
    Ok(CechResult { h_minus1, h0, h1, h2, h0_basis, window: w })
}

/// Whether the middle cohomology bundle is trivial: a degree-0 bundle on
/// `P1` is trivial exactly when `h^0` of its twist by `O(-1)` vanishes.
pub fn check_trivial_restriction(pc: &P1Complex) -> Result<bool, CechError> {
    if !pc.is_fiberwise_monad() {
        return Err(CechError::NotABundle);
    }
    if pc.expected_degree() != 0 {
        return Ok(false);
    }
    let r = hyper_h(&pc.twist(-1))?;
    debug_assert_eq!(r.h_minus1, 0);
    debug_assert_eq!(r.h2, 0);
    Ok(r.h0 == 0)
}

/// Splitting type of the middle cohomology bundle, recovered from the
/// section-count ladder `d -> h^0(E(d))` by second differences.
pub fn splitting_type(pc: &P1Complex) -> Result<SplittingType, CechError> {
    if !pc.is_fiberwise_monad() {
        return Err(CechError::NotABundle);
    }
    let rank = pc.expected_rank();
    let span: i64 = pc
        .degrees_u
        .iter()
        .chain(pc.degrees_v.iter())
        .chain(pc.degrees_w.iter())
        .map(|d| d.abs())
        .sum::<i64>()
        + 1;
    let lo = -span - 2;
    let hi = span;
    let ladder: Vec<i64> =
        (lo..=hi).map(|d| hyper_h(&pc.twist(d)).map(|r| r.h0 as i64)).collect::<Result<_, _>>()?;
    let mut degrees = Vec::new();
    for a in -span..=span {
        // multiplicity of O(a) is the second difference of the ladder at -a-1
        let idx = (-a - 1 - lo) as usize;
        let mult = ladder[idx + 1] - 2 * ladder[idx] + ladder[idx - 1];
        debug_assert!(mult >= 0);
        for _ in 0..mult {
            degrees.push(a);
        }
    }
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    if degrees.len() as i64 != rank || degrees.iter().sum::<i64>() != pc.expected_degree() {
        return Err(CechError::NotABundle);
    }
    Ok(SplittingType(degrees))
}

/// Evaluates canonical `H^0` classes in the fibers of the middle term.
#[derive(Debug, Clone)]
pub struct H0Evaluator {
    degrees_v: Vec<i64>,
    degrees_u: Vec<i64>,
    map_a: Vec<Vec<BinForm>>,
    basis: Vec<CechCochain>,
}

/// A point of `P1` in homogeneous coordinates (not both zero).
pub type P1Point = (Rat, Rat);

impl H0Evaluator {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Values of the basis classes in the `V`-fiber at the point, as the
    /// columns of a `|V| x r` matrix. The fiber frame is chart 0 when
    /// `z2 != 0`, chart 1 otherwise.
    pub fn eval_at(&self, pt: &P1Point) -> RatMatrix {
        let (z1, z2) = pt;
        assert!(!z1.is_zero() || !z2.is_zero(), "(0,0) is not a point of P1");
        let nv = self.degrees_v.len();
        RatMatrix::from_fn(nv, self.basis.len(), |i, j| {
            let c = &self.basis[j];
            if !z2.is_zero() {
                let t = z1 / z2;
                UniPoly::from_coeffs(c.v_chart0[i].clone()).eval(&t)
            } else {
                let s = z2 / z1;
                UniPoly::from_coeffs(c.v_chart1[i].clone()).eval(&s)
            }
        })
    }

    /// Fiber matrix of `a` at the point, in the same frames as `eval_at`.
    pub fn map_a_at(&self, pt: &P1Point) -> RatMatrix {
        let (z1, z2) = pt;
        RatMatrix::from_fn(self.degrees_v.len(), self.degrees_u.len(), |i, j| {
            let f = &self.map_a[i][j];
            if f.deg() < 0 {
                return Rat::zero();
            }
            if !z2.is_zero() {
                f.eval(&(z1 / z2), &Rat::one())
            } else {
                f.eval(&Rat::one(), &(z2 / z1))
            }
        })
    }

    /// True when the evaluation map identifies `H^0 (x) O -> E` with the
    /// full cohomology fiber at the point: the basis values stay
    /// independent modulo the image of `a`.
    pub fn is_fiber_iso_at(&self, pt: &P1Point) -> bool {
        let vals = self.eval_at(pt);
        let a = self.map_a_at(pt);
        a.hstack(&vals).rank() == a.rank() + self.basis.len()
    }
}

/// Canonical basis of `H^0` of the (untwisted) complex together with its
/// fiberwise evaluator. Requires a trivial restriction.
pub fn h0_basis_and_evaluation(
    pc: &P1Complex,
) -> Result<(Vec<CechCochain>, H0Evaluator), CechError> {
    if !check_trivial_restriction(pc)? {
        return Err(CechError::NotTrivial);
    }
    let res = hyper_h(pc)?;
    let ev = H0Evaluator {
        degrees_v: pc.degrees_v.clone(),
        degrees_u: pc.degrees_u.clone(),
        map_a: pc.map_a.clone(),
        basis: res.h0_basis.clone(),
    };
    Ok((res.h0_basis, ev))
}
