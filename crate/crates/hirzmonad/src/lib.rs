//! Monads for framed torsion-free sheaves on Hirzebruch surfaces, in exact
//! rational arithmetic.
//!
//! A framed sheaf on the Hirzebruch surface `Sigma_n` (rank `r`, first
//! Chern class `a E`, second Chern class `c`) is encoded by a monad: a
//! three-term complex of sums of line bundles whose middle cohomology is
//! the sheaf. This crate realizes that encoding concretely:
//!
//! - [`exact`] — arbitrary-precision rational scalars, matrices,
//!   univariate/bivariate polynomials, and a zero-locus classifier;
//! - [`surface`] — the Cox ring of `Sigma_n`, graded section spaces,
//!   intersection theory and line-bundle cohomology;
//! - [`monad`] — monad shapes and points, the open conditions cutting out
//!   the parameter space `L_k`, and the numerical invariants;
//! - [`cech`] — hypercohomology of the restriction to the line at infinity,
//!   splitting types, and canonical section bases used for framings;
//! - [`moduli`] — the symmetry group, its action on monads and framings,
//!   stabilizers, witness sampling and the dimension bookkeeping;
//! - [`selftest`] — the executable verification grids.

pub mod cech;
pub mod exact;
pub mod moduli;
pub mod monad;
pub mod selftest;
pub mod surface;
