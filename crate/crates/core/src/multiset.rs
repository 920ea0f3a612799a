//! Finite multisets of integers.
//!
//! Degrees and Betti data are all carried as [`IntMultiset`]s. The
//! representation is a run-length list sorted by value, so two multisets are
//! equal exactly when their entry lists are identical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finite multiset of integers stored as `(value, multiplicity)` runs with
/// strictly increasing values and positive multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntMultiset {
    entries: Vec<(i64, usize)>,
}

/// Orientation for [`IntMultiset::affine`]: `n + M` or `n - M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl IntMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(value, multiplicity)` pairs in any order.
    /// Zero multiplicities are dropped, repeated values are merged.
    pub fn from_counts<I: IntoIterator<Item = (i64, usize)>>(counts: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, k) in counts {
            if k > 0 {
                *map.entry(v).or_insert(0) += k;
            }
        }
        Self {
            entries: map.into_iter().collect(),
        }
    }

    /// Multiset containing the single value `v` once.
    pub fn singleton(v: i64) -> Self {
        Self {
            entries: vec![(v, 1)],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of elements counted with multiplicity (`|M|`).
    pub fn card(&self) -> usize {
        self.entries.iter().map(|&(_, k)| k).sum()
    }

    /// Weighted sum `Σ μ(y)·y` (`‖M‖`).
    pub fn norm(&self) -> i64 {
        self.entries.iter().map(|&(v, k)| v * k as i64).sum()
    }

    pub fn multiplicity(&self, v: i64) -> usize {
        match self.entries.binary_search_by_key(&v, |&(x, _)| x) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.multiplicity(v) > 0
    }

    /// Distinct values in increasing order.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    /// `(value, multiplicity)` runs in increasing order of value.
    pub fn counts(&self) -> &[(i64, usize)] {
        &self.entries
    }

    /// Elements in increasing order, repeated according to multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat(v).take(k))
    }

    pub fn to_sorted_vec(&self) -> Vec<i64> {
        self.iter().collect()
    }

    pub fn smallest(&self) -> Option<i64> {
        self.entries.first().map(|&(v, _)| v)
    }

    pub fn largest(&self) -> Option<i64> {
        self.entries.last().map(|&(v, _)| v)
    }

    fn merge_with(&self, other: &Self, f: impl Fn(usize, usize) -> usize) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, ka, kb) = match (a.get(i), b.get(j)) {
                (Some(&(va, ka)), Some(&(vb, kb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, ka, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, 0, kb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, ka, kb)
                    }
                },
                (Some(&(va, ka)), None) => {
                    i += 1;
                    (va, ka, 0)
                }
                (None, Some(&(vb, kb))) => {
                    j += 1;
                    (vb, 0, kb)
                }
                (None, None) => unreachable!(),
            };
            let k = f(ka, kb);
            if k > 0 {
                out.push((v, k));
            }
        }
        Self { entries: out }
    }

    /// `M ∩ N`: pointwise minimum of multiplicities.
    pub fn intersect(&self, other: &Self) -> Self {
        self.merge_with(other, usize::min)
    }

    /// `M ∪ N`: pointwise maximum of multiplicities.
    pub fn union(&self, other: &Self) -> Self {
        self.merge_with(other, usize::max)
    }

    /// `M ⊔ N`: multiplicities add.
    pub fn sum(&self, other: &Self) -> Self {
        self.merge_with(other, |a, b| a + b)
    }

    /// `M \ N`: truncated subtraction of multiplicities.
    pub fn diff(&self, other: &Self) -> Self {
        self.merge_with(other, usize::saturating_sub)
    }

    /// `M ⊆ N`.
    pub fn is_submultiset(&self, other: &Self) -> bool {
        self.entries
            .iter()
            .all(|&(v, k)| k <= other.multiplicity(v))
    }

    /// `n + M` or `n - M`, multiplicities preserved.
    pub fn affine(&self, n: i64, sign: Sign) -> Self {
        match sign {
            Sign::Plus => Self {
                entries: self.entries.iter().map(|&(v, k)| (n + v, k)).collect(),
            },
            Sign::Minus => Self {
                entries: self
                    .entries
                    .iter()
                    .rev()
                    .map(|&(v, k)| (n - v, k))
                    .collect(),
            },
        }
    }

    /// Shorthand for `affine(n, Sign::Plus)`.
    pub fn shift(&self, n: i64) -> Self {
        self.affine(n, Sign::Plus)
    }

    /// Shorthand for `affine(n, Sign::Minus)`.
    pub fn reflect(&self, n: i64) -> Self {
        self.affine(n, Sign::Minus)
    }

    /// Removes a single occurrence of `v`. Returns `false` if `v` was absent.
    pub fn remove_one(&mut self, v: i64) -> bool {
        match self.entries.binary_search_by_key(&v, |&(x, _)| x) {
            Ok(i) => {
                self.entries[i].1 -= 1;
                if self.entries[i].1 == 0 {
                    self.entries.remove(i);
                }
                true
            }
            Err(_) => false,
        }
    }

    pub fn insert(&mut self, v: i64, k: usize) {
        if k == 0 {
            return;
        }
        match self.entries.binary_search_by_key(&v, |&(x, _)| x) {
            Ok(i) => self.entries[i].1 += k,
            Err(i) => self.entries.insert(i, (v, k)),
        }
    }
}

impl FromIterator<i64> for IntMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        Self::from_counts(iter.into_iter().map(|v| (v, 1)))
    }
}

impl From<&[i64]> for IntMultiset {
    fn from(values: &[i64]) -> Self {
        values.iter().copied().collect()
    }
}

impl<const N: usize> From<[i64; N]> for IntMultiset {
    fn from(values: [i64; N]) -> Self {
        values.into_iter().collect()
    }
}

impl From<Vec<i64>> for IntMultiset {
    fn from(values: Vec<i64>) -> Self {
        values.into_iter().collect()
    }
}

/// Lexicographic order on the expanded sorted sequences, so `{1,1,5} < {1,2}`.
impl Ord for IntMultiset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IntMultiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}}}")
    }
}

impl fmt::Debug for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for IntMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for IntMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<i64>::deserialize(deserializer).map(IntMultiset::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ms(v: &[i64]) -> IntMultiset {
        IntMultiset::from(v)
    }

    #[test]
    fn intersect_takes_min_multiplicity() {
        assert_eq!(ms(&[6, 6, 6]).intersect(&ms(&[6, 10, 10])), ms(&[6]));
        assert!(ms(&[5, 5, 9]).intersect(&ms(&[6, 10, 10])).is_empty());
        assert!(ms(&[7]).intersect(&ms(&[8, 9, 10])).is_empty());
    }

    #[test]
    fn sum_diff_sub() {
        assert_eq!(ms(&[9, 9]).sum(&ms(&[10])), ms(&[9, 9, 10]));
        let m = ms(&[3, 3, 4, -1]);
        assert!(m.diff(&m).is_empty());
        assert!(ms(&[9, 11, 11, 11]).is_submultiset(&ms(&[9, 9, 9, 11, 11, 11, 13])));
        assert!(!ms(&[9, 9, 9, 9]).is_submultiset(&ms(&[9, 9, 9, 11])));
        assert_eq!(ms(&[1, 2, 2]).union(&ms(&[2, 3])), ms(&[1, 2, 2, 3]));
        assert_eq!(ms(&[1, 2, 2, 2]).diff(&ms(&[2, 5])), ms(&[1, 2, 2]));
    }

    #[test]
    fn affine_maps() {
        assert_eq!(ms(&[12, 12, 12, 14]).reflect(19), ms(&[5, 7, 7, 7]));
        assert_eq!(ms(&[5, 5]).reflect(15), ms(&[10, 10]));
        let m = ms(&[-3, 2, 2, 8]);
        assert_eq!(m.shift(0), m);
        assert_eq!(m.shift(7), ms(&[4, 9, 9, 15]));
    }

    #[test]
    fn norms_and_cards() {
        assert_eq!(ms(&[3, 6, 6, 6]).norm(), 21);
        assert_eq!(IntMultiset::new().norm(), 0);
        assert_eq!(ms(&[5, 5, 5, 7, 7, 7, 9]).card(), 7);
    }

    #[test]
    fn ordering_is_lexicographic_on_sorted_lists() {
        assert!(ms(&[1, 1, 5]) < ms(&[1, 2]));
        assert!(ms(&[1, 2, 0]) < ms(&[1, 2]));
        assert!(ms(&[1, 2]) < ms(&[1, 2, 2]));
        assert!(ms(&[]) < ms(&[0]));
    }

    #[test]
    fn json_is_flat_sorted_array() {
        let m = ms(&[6, 3, 6, 6]);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[3,6,6,6]");
        let back: IntMultiset = serde_json::from_str("[6,6,3,6]").unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn remove_and_insert() {
        let mut m = ms(&[2, 2, 5]);
        assert!(m.remove_one(2));
        assert!(m.remove_one(5));
        assert!(!m.remove_one(5));
        assert_eq!(m, ms(&[2]));
        m.insert(-1, 2);
        assert_eq!(m, ms(&[-1, -1, 2]));
    }

    fn small_multiset() -> impl Strategy<Value = IntMultiset> {
        prop::collection::vec(-8i64..12, 0..10).prop_map(IntMultiset::from)
    }

    proptest! {
        #[test]
        fn self_dual_intersection(m in small_multiset(), n in -10i64..25) {
            let h = m.intersect(&m.reflect(n));
            for x in h.support() {
                prop_assert_eq!(h.multiplicity(x), h.multiplicity(n - x));
            }
        }

        #[test]
        fn sum_laws(a in small_multiset(), b in small_multiset(), c in small_multiset()) {
            prop_assert_eq!(a.sum(&b), b.sum(&a));
            prop_assert_eq!(a.sum(&b).sum(&c), a.sum(&b.sum(&c)));
            let n = a.sum(&b);
            prop_assert!(a.is_submultiset(&n));
            prop_assert_eq!(a.sum(&n.diff(&a)), n);
        }

        #[test]
        fn reflection_is_involutive(m in small_multiset(), n in -20i64..20) {
            prop_assert_eq!(m.reflect(n).reflect(n), m.clone());
            prop_assert_eq!(m.reflect(n).card(), m.card());
        }
    }
}
