use serde::Serialize;

use super::betti::{AciBetti, AciError};
use crate::gorenstein::check_with_theta;
use crate::multiset::IntMultiset;

/// Degree bookkeeping of the link of a Gorenstein algebra through a
/// complete intersection, at the level of graded Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkResult {
    pub d0: i64,
    pub d: i64,
    /// Twists of the complete intersection, `G`.
    pub g: IntMultiset,
    /// `K = d0 + F_slots`.
    pub k: IntMultiset,
    /// Generator, first and second syzygy twists before cancellation.
    pub resolution: [IntMultiset; 3],
    /// Twists removed from both syzygy levels.
    pub cancelled: IntMultiset,
    pub minimal: AciBetti,
}

/// Links the Gorenstein sequence `(gor_gens, θ)` through a complete
/// intersection of type `ci_type`. Every degree in `extra_gens` is an added
/// pfaffian slot with zero partner slot `θ - e`; the complete intersection
/// takes its degrees from the extra slots first and then from `gor_gens`.
///
/// The resolution is `0 → K^∨(-d) → G(-d0) ⊕ K → G ⊕ R(-d0) → R`; each
/// extra pair contributes a unit entry between the two syzygy levels in
/// degree `d0 + e`, which is cancelled to get `minimal`.
pub fn link_betti(
    gor_gens: &IntMultiset,
    gor_theta: i64,
    ci_type: [i64; 3],
    extra_gens: &IntMultiset,
) -> Result<LinkResult, AciError> {
    check_with_theta(gor_gens, gor_theta).map_err(AciError::Gorenstein)?;
    let mut extra_left = extra_gens.clone();
    let mut gens_left = gor_gens.clone();
    for c in ci_type {
        if !extra_left.remove_one(c) && !gens_left.remove_one(c) {
            return Err(AciError::SlotMismatch(format!(
                "no generator slot of degree {c} left in {gor_gens} + {extra_gens}"
            )));
        }
    }
    let g = IntMultiset::from(ci_type);
    let theta_z = g.norm();
    let d0 = theta_z - gor_theta;
    if d0 <= 0 {
        return Err(AciError::DegenerateLink(d0));
    }
    let d = d0 + theta_z;
    let f_slots = gens_left
        .sum(&extra_left)
        .sum(&extra_gens.reflect(gor_theta));
    let k = f_slots.shift(d0);
    let level0 = g.sum(&IntMultiset::singleton(d0));
    let level1 = g.shift(d0).sum(&k);
    let level2 = k.reflect(d);

    let cancelled = extra_gens.shift(d0);
    if !cancelled.is_submultiset(&level1) || !cancelled.is_submultiset(&level2) {
        return Err(AciError::SlotMismatch(format!(
            "ghost twists {cancelled} missing from a syzygy level"
        )));
    }
    let minimal = AciBetti::new(
        level0.clone(),
        level1.diff(&cancelled),
        level2.diff(&cancelled),
    )?;
    Ok(LinkResult {
        d0,
        d,
        g,
        k,
        resolution: [level0, level1, level2],
        cancelled,
        minimal,
    })
}
