//! Pfaffian algebra and Betti-sequence classification for codimension-3
//! almost complete intersections.

pub mod aci;
pub mod exact;
pub mod gorenstein;
pub mod multiset;
pub mod pfaffian;
pub mod structure;
