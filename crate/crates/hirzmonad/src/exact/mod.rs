//! Exact rational arithmetic and polynomial linear algebra.
//!
//! Everything downstream (section spaces, monad conditions, cohomology,
//! group actions) runs on the types in this module. All values are
//! immutable after construction and every operation is a pure function.

mod binform;
mod bipoly;
mod domain;
mod matrix;
mod rat;
mod unipoly;
mod zerolocus;

pub use binform::{binform_det, binform_maximal_minors, BinForm};
pub use bipoly::{resultant_y, BiPoly, BiPolyError};
pub use matrix::RatMatrix;
pub use rat::{rat, rat_from_str, rat_int, rat_to_string, Rat};
pub use unipoly::UniPoly;
pub use zerolocus::{
    analyze_zero_locus, zero_locus_class, LocusAnalysis, ZeroLocusClass, ZeroLocusError,
};

pub(crate) use zerolocus::y_root_clusters;
