//! Classification of the common zero set of a family of bivariate
//! polynomials in the affine plane: empty, finite, or infinite.
//!
//! The decision never extracts numeric roots. A nonconstant gcd of the
//! family certifies a one-dimensional component; otherwise the common zero
//! set is finite and its `x`-coordinates are confined to the roots of a
//! resultant gcd `R(x)`. Whether any of those algebraic candidates extends
//! to a common zero is decided by computing the `y`-gcd of the family over
//! the quotient ring `Q[x]/(m)` for the squarefree part `m` of `R`: the
//! modulus is split whenever a leading coefficient turns out to be a zero
//! divisor, so each surviving branch behaves like a field and the gcd
//! specializes uniformly to every root of the branch modulus.
//!
//! When some resultant against the reference polynomial vanishes, the two
//! polynomials share a factor of positive `y`-degree; the variety is then
//! split along that factor and both pieces are classified recursively.

use super::bipoly::{resultant_y, BiPoly};
use super::rat::Rat;
use super::unipoly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum ZeroLocusClass {
    Empty,
    Finite,
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZeroLocusError {
    #[error("every input polynomial is zero (zero locus is the whole plane)")]
    AllZero,
}

/// Locus classification together with canonical coordinate data.
///
/// For a finite (or empty) locus, `x_support` is the monic squarefree
/// polynomial whose roots are exactly the `x`-coordinates of the common
/// zeros (`1` when there are none), and likewise `y_support`. Both are
/// determined by the zero set alone, so they are invariant under any change
/// of generators of the same locus. `rational_points` lists the common
/// zeros with both coordinates rational, sorted. For an infinite locus the
/// supports are the zero polynomial and no points are listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusAnalysis {
    pub class: ZeroLocusClass,
    pub x_support: UniPoly,
    pub y_support: UniPoly,
    pub rational_points: Vec<(Rat, Rat)>,
}

/// Classifies the common complex zero set in the affine plane.
pub fn zero_locus_class(polys: &[BiPoly]) -> Result<ZeroLocusClass, ZeroLocusError> {
    let nonzero: Vec<BiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(ZeroLocusError::AllZero);
    }
    Ok(classify(nonzero).0)
}

/// Full analysis: classification, coordinate supports, rational points.
pub fn analyze_zero_locus(polys: &[BiPoly]) -> Result<LocusAnalysis, ZeroLocusError> {
    let nonzero: Vec<BiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(ZeroLocusError::AllZero);
    }
    let (class, x_support) = classify(nonzero.clone());
    if class == ZeroLocusClass::Infinite {
        return Ok(LocusAnalysis {
            class,
            x_support: UniPoly::zero(),
            y_support: UniPoly::zero(),
            rational_points: Vec::new(),
        });
    }
    let swapped: Vec<BiPoly> = nonzero.iter().map(BiPoly::swap_vars).collect();
    let (class_swapped, y_support) = classify(swapped);
    debug_assert_eq!(class, class_swapped);

    let mut rational_points = Vec::new();
    for xi in x_support.rational_roots() {
        let slices: Vec<UniPoly> = nonzero.iter().map(|p| p.eval_x(&xi)).collect();
        let g = UniPoly::gcd_many(slices.iter());
        for eta in g.rational_roots() {
            rational_points.push((xi.clone(), eta));
        }
    }
    rational_points.sort();
    Ok(LocusAnalysis { class, x_support, y_support, rational_points })
}

fn union_class(a: ZeroLocusClass, b: ZeroLocusClass) -> ZeroLocusClass {
    a.max(b)
}

fn lcm_monic(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let g = a.gcd(b);
    a.mul(&b.exact_div(&g)).monic()
}

fn poly_sort_key(p: &BiPoly) -> (usize, usize) {
    (p.deg_y().unwrap_or(0), p.deg_x().unwrap_or(0))
}

fn poly_cmp(a: &BiPoly, b: &BiPoly) -> std::cmp::Ordering {
    poly_sort_key(a).cmp(&poly_sort_key(b)).then_with(|| {
        let (ac, bc) = (a.y_coeffs(), b.y_coeffs());
        for (x, y) in ac.iter().zip(bc.iter()) {
            let ord = x.coeffs().cmp(y.coeffs());
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        ac.len().cmp(&bc.len())
    })
}

/// Core recursion. Inputs are nonzero; returns the class and, for a finite
/// or empty locus, the monic squarefree `x`-projection polynomial.
fn classify(polys: Vec<BiPoly>) -> (ZeroLocusClass, UniPoly) {
    // canonical scaling and deterministic order make the result invariant
    // under permutation and rescaling of the generators
    let mut polys: Vec<BiPoly> = polys.iter().map(BiPoly::canonical).collect();
    polys.sort_by(poly_cmp);
    polys.dedup();

    if polys.iter().any(|p| p.is_constant()) {
        // a nonzero constant generator: empty locus
        return (ZeroLocusClass::Empty, UniPoly::one());
    }

    let g = BiPoly::gcd_many(polys.iter());
    if !g.is_constant() {
        return (ZeroLocusClass::Infinite, UniPoly::zero());
    }

    // drop multiples: their zero set contains the divisor's (the ascending
    // sort guarantees divisors are seen first)
    let mut kept: Vec<BiPoly> = Vec::new();
    for p in polys {
        if kept.iter().all(|q| p.checked_div(q).is_none()) {
            kept.push(p);
        }
    }
    let polys = kept;

    let Some(ref_idx) = polys.iter().position(|p| p.deg_y().unwrap_or(0) > 0) else {
        // a family of nonconstant x-only polynomials with constant gcd
        return (ZeroLocusClass::Empty, UniPoly::one());
    };
    let reference = polys[ref_idx].clone();

    let mut resultants = Vec::new();
    for (i, h) in polys.iter().enumerate() {
        if i == ref_idx {
            continue;
        }
        let r = resultant_y(&reference, h).expect("inputs are nonzero");
        if r.is_zero() {
            // shared factor of positive y-degree: split the variety along it
            let c = reference.gcd(h);
            debug_assert!(c.deg_y().unwrap_or(0) > 0);
            let quotient = reference.checked_div(&c).expect("gcd divides");
            let mut with_factor = Vec::with_capacity(polys.len() + 1);
            with_factor.push(c);
            with_factor.extend(polys.iter().cloned());
            let mut with_quotient = polys.clone();
            if quotient.is_constant() {
                // reference divides h; h is redundant
                with_quotient.remove(i);
            } else {
                with_quotient[ref_idx] = quotient;
            }
            let (ca, sa) = classify(with_factor);
            let (cb, sb) = classify(with_quotient);
            let class = union_class(ca, cb);
            let support = if class == ZeroLocusClass::Infinite {
                UniPoly::zero()
            } else {
                lcm_monic(&sa, &sb)
            };
            return (class, support);
        }
        resultants.push(r);
    }

    let r_gcd = UniPoly::gcd_many(resultants.iter());
    debug_assert!(!r_gcd.is_zero(), "at least one other generator exists");
    if r_gcd.is_constant() {
        return (ZeroLocusClass::Empty, UniPoly::one());
    }

    let modulus = r_gcd.squarefree_part();
    let clusters = y_root_clusters(&modulus, &polys);
    if clusters.is_empty() {
        (ZeroLocusClass::Empty, UniPoly::one())
    } else {
        let support = clusters.iter().fold(UniPoly::one(), |acc, (m, _)| acc.mul(m)).monic();
        (ZeroLocusClass::Finite, support)
    }
}

/// One branch of the dynamic-evaluation gcd: `(modulus, d)` records that at
/// every root of the (squarefree, monic) branch modulus the specialized
/// family has a common-root gcd of `y`-degree `d >= 1`. Branch moduli are
/// pairwise coprime.
pub(crate) fn y_root_clusters(modulus: &UniPoly, polys: &[BiPoly]) -> Vec<(UniPoly, usize)> {
    let ypolys: Vec<Vec<UniPoly>> = polys.iter().map(|p| p.y_coeffs().to_vec()).collect();
    let mut out = Vec::new();
    cluster_rec(modulus.monic(), &ypolys, &mut out);
    out.sort_by(|a, b| a.0.coeffs().cmp(b.0.coeffs()));
    out
}

enum Step<T> {
    Done(T),
    /// A coefficient with nontrivial gcd against the modulus was hit; the
    /// payload is that proper factor.
    Split(UniPoly),
}

fn cluster_rec(m: UniPoly, polys: &[Vec<UniPoly>], out: &mut Vec<(UniPoly, usize)>) {
    match try_cluster(&m, polys) {
        Step::Done(Some(deg)) => out.push((m, deg)),
        Step::Done(None) => {}
        Step::Split(d) => {
            let rest = m.exact_div(&d).monic();
            cluster_rec(d.monic(), polys, out);
            cluster_rec(rest, polys, out);
        }
    }
}

/// Attempts the whole reduction/strip/gcd-fold pipeline modulo `m`.
fn try_cluster(m: &UniPoly, polys: &[Vec<UniPoly>]) -> Step<Option<usize>> {
    let mut reduced: Vec<Vec<UniPoly>> = Vec::new();
    for p in polys {
        let mut rp: Vec<UniPoly> = p.iter().map(|c| c.rem(m)).collect();
        match strip_top(m, &mut rp) {
            Step::Split(d) => return Step::Split(d),
            Step::Done(()) => {}
        }
        if !rp.is_empty() {
            reduced.push(rp);
        }
    }
    let Some(mut acc) = reduced.pop() else {
        // every generator vanishes identically on this branch; with a
        // constant overall gcd this cannot happen, but if it did, every y
        // over every root of m would be a common zero
        return Step::Done(Some(0));
    };
    for p in &reduced {
        match gcd_mod(m, acc, p.clone()) {
            Step::Split(d) => return Step::Split(d),
            Step::Done(g) => acc = g,
        }
        if acc.len() == 1 {
            // unit gcd: no common y-root above any root of m
            return Step::Done(None);
        }
    }
    match acc.len() {
        0 => Step::Done(Some(0)),
        1 => Step::Done(None),
        n => Step::Done(Some(n - 1)),
    }
}

/// Pops zero leading coefficients; stops once the leading coefficient is a
/// unit modulo `m`, or requests a split when it is a zero divisor.
fn strip_top(m: &UniPoly, p: &mut Vec<UniPoly>) -> Step<()> {
    while let Some(c) = p.last() {
        if c.is_zero() {
            p.pop();
            continue;
        }
        let d = c.gcd(m);
        if d.is_constant() {
            return Step::Done(());
        }
        debug_assert!(d.degree() < m.degree(), "reduced coefficient cannot be divisible by m");
        return Step::Split(d);
    }
    Step::Done(())
}

/// Euclidean gcd in `(Q[x]/(m))[y]` for stripped operands. The result is
/// either empty (both inputs zero, cannot occur here), a single unit
/// constant, or a polynomial with unit leading coefficient.
fn gcd_mod(m: &UniPoly, mut f: Vec<UniPoly>, mut g: Vec<UniPoly>) -> Step<Vec<UniPoly>> {
    loop {
        if g.is_empty() {
            return Step::Done(f);
        }
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        // make g monic: its leading coefficient is a unit by the strip invariant
        let lead = g.last().unwrap();
        let (gcd, inv, _) = lead.extended_gcd(m);
        debug_assert!(gcd.is_constant() && !gcd.is_zero());
        let monic_g: Vec<UniPoly> = g.iter().map(|c| c.mul(&inv).rem(m)).collect();
        // long division of f by monic_g in y, coefficients mod m
        let mut r = f.clone();
        while r.len() >= monic_g.len() {
            let shift = r.len() - monic_g.len();
            let q = r.last().unwrap().clone();
            for (i, c) in monic_g.iter().enumerate() {
                let v = r[shift + i].sub(&q.mul(c)).rem(m);
                r[shift + i] = v;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        match strip_top(m, &mut r) {
            Step::Split(d) => return Step::Split(d),
            Step::Done(()) => {}
        }
        f = g;
        g = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat_int, Rat};

    fn x() -> BiPoly {
        BiPoly::x()
    }

    fn y() -> BiPoly {
        BiPoly::y()
    }

    fn c(v: i64) -> BiPoly {
        BiPoly::constant(rat_int(v))
    }

    fn class_of(polys: &[BiPoly]) -> ZeroLocusClass {
        zero_locus_class(polys).unwrap()
    }

    #[test]
    fn spec_cases() {
        assert_eq!(class_of(&[x(), y()]), ZeroLocusClass::Finite);
        assert_eq!(class_of(&[x()]), ZeroLocusClass::Infinite);
        assert_eq!(class_of(&[x(), x().add(&c(1))]), ZeroLocusClass::Empty);
        assert_eq!(zero_locus_class(&[BiPoly::zero()]), Err(ZeroLocusError::AllZero));
        assert_eq!(zero_locus_class(&[]), Err(ZeroLocusError::AllZero));
    }

    #[test]
    fn invariance_under_permutation_and_scaling() {
        let families: Vec<Vec<BiPoly>> = vec![
            vec![x(), y()],
            vec![y().mul(&y()).sub(&x()), x().mul(&x()).sub(&c(2))],
            vec![x().mul(&y()), x().add(&y())],
            vec![y().sub(&x()), y().add(&x()), x()],
        ];
        for f in families {
            let base = class_of(&f);
            let mut rev = f.clone();
            rev.reverse();
            assert_eq!(class_of(&rev), base);
            let scaled: Vec<BiPoly> =
                f.iter().enumerate().map(|(i, p)| p.scale(&rat_int(2 + i as i64))).collect();
            assert_eq!(class_of(&scaled), base);
        }
    }

    #[test]
    fn splitting_cases_with_vanishing_resultants() {
        // every pair shares a factor, yet the common locus is finite
        let l1 = y().sub(&x()); // y - x
        let l2 = y().add(&x()); // y + x
        let l3 = y().add(&x()).add(&c(1)); // y + x + 1
        let f = l1.mul(&l2);
        let g = l1.mul(&l3);
        let h = l2.mul(&l3);
        assert_eq!(class_of(&[f.clone(), g.clone(), h.clone()]), ZeroLocusClass::Finite);

        let a = analyze_zero_locus(&[f, g, h]).unwrap();
        // common zeros: (0,0) and (-1/2,-1/2)
        assert_eq!(
            a.rational_points,
            vec![
                (Rat::new((-1).into(), 2.into()), Rat::new((-1).into(), 2.into())),
                (rat_int(0), rat_int(0)),
            ]
        );
    }

    #[test]
    fn irrational_points_detected_without_roots() {
        // y^2 = 2, y = x: two irrational common zeros
        let f = y().mul(&y()).sub(&c(2));
        let g = y().sub(&x());
        let a = analyze_zero_locus(&[f, g]).unwrap();
        assert_eq!(a.class, ZeroLocusClass::Finite);
        assert!(a.rational_points.is_empty());
        // x-support is x^2 - 2
        assert_eq!(a.x_support.coeffs(), &[rat_int(-2), rat_int(0), rat_int(1)]);
    }

    #[test]
    fn mixed_univariate_members() {
        // {x, y*x + 1}: x = 0 forces 1 = 0
        assert_eq!(class_of(&[x(), y().mul(&x()).add(&c(1))]), ZeroLocusClass::Empty);
        // {x, y*(x+1)}: at x = 0 any y with y*1 = 0 gives y = 0
        assert_eq!(class_of(&[x(), y().mul(&x().add(&c(1)))]), ZeroLocusClass::Finite);
        // {x - 3, y^2 - x}: point cluster above x = 3
        let a = analyze_zero_locus(&[x().sub(&c(3)), y().mul(&y()).sub(&x())]).unwrap();
        assert_eq!(a.class, ZeroLocusClass::Finite);
        assert!(a.rational_points.is_empty());
    }

    #[test]
    fn common_factor_is_infinite() {
        let f = x().mul(&y().sub(&x()));
        let g = x().mul(&y().add(&c(5)));
        assert_eq!(class_of(&[f, g]), ZeroLocusClass::Infinite);
    }
}
