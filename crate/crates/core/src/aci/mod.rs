//! Graded Betti sequences `(D, E, F)` of codimension-3 Artinian almost
//! complete intersections: decomposition, the admissibility decision
//! procedure, linkage bookkeeping and a bounded enumerator.

mod betti;
mod enumerate;
mod link;

pub use betti::{
    check_betti, decompose, induced_gorenstein, sbar_cases, AciBetti, AciDecomposition, AciError,
    DecomposeFailure, InducedFailure, Rejection, Stage3Failure, Verdict,
};
pub use enumerate::{enumerate, EnumerationBounds};
pub use link::{link_betti, LinkResult};
