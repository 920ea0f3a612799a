use rayon::prelude::*;

use super::betti::{check_betti, AciBetti};
use crate::multiset::IntMultiset;

/// Search box for [`enumerate`]: every degree in `1..=max_degree` and
/// `2 ≤ |F| ≤ max_f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_degree: i64,
    pub max_f: usize,
}

/// Every admissible `(D, E, F)` inside `bounds`, deduplicated and sorted by
/// `(‖D‖, D, F, E)`.
///
/// Candidates are synthesized from `(D, S, F)`: `E` is then forced to be
/// `(d - F) ⊔ (d0 + D̄) ⊔ (θ_Z - S)`, and `‖F‖` is forced by the socle
/// degree of the induced Gorenstein sequence. Each candidate is filtered
/// through [`check_betti`]. Runs on the current rayon pool.
pub fn enumerate(bounds: EnumerationBounds) -> Vec<AciBetti> {
    let max = bounds.max_degree;
    if max < 1 || bounds.max_f < 2 {
        return Vec::new();
    }
    let mut ds = Vec::new();
    for d0 in 1..=max {
        for d1 in d0..=max {
            for d2 in d1..=max {
                for d3 in d2..=max {
                    ds.push([d0, d1, d2, d3]);
                }
            }
        }
    }
    let mut out: Vec<AciBetti> = ds
        .par_iter()
        .flat_map_iter(|&d| candidates_for(d, bounds))
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out.dedup();
    out
}

fn candidates_for([d0, d1, d2, d3]: [i64; 4], bounds: EnumerationBounds) -> Vec<AciBetti> {
    let max = bounds.max_degree;
    let dm = IntMultiset::from([d0, d1, d2, d3]);
    let dstar = IntMultiset::from([d1, d2, d3]);
    let d = dm.norm();
    let theta_z = dstar.norm();
    let theta_g = theta_z - d0;
    let half = (theta_g % 2 == 0).then_some(theta_g / 2);
    let f_lo = (d - max).max(1);
    let f_hi = max.min(d - 1);
    let mut out = Vec::new();
    for s in sub_multisets(&dstar) {
        let dbar = dstar.diff(&s);
        let fixed_e = dbar.shift(d0).sum(&s.reflect(theta_z));
        if fixed_e.iter().any(|e| e < 1 || e > max) {
            continue;
        }
        for p in 2..=bounds.max_f {
            let t = match half {
                Some(h) if s.contains(h) && (p + dbar.card()) % 2 == 0 => h,
                _ => 0,
            };
            let g_card = p + dbar.card() + usize::from(t != 0);
            if g_card % 2 == 0 {
                continue;
            }
            let target_g0 = theta_g * (g_card as i64 - 1) / 2;
            let f_sum = p as i64 * theta_z + dbar.norm() + t - target_g0;
            for f in bounded_partitions(p, f_sum, f_lo, f_hi) {
                let f = IntMultiset::from(f);
                let e = f.reflect(d).sum(&fixed_e);
                let Ok(b) = AciBetti::new(dm.clone(), e, f) else {
                    continue;
                };
                if check_betti(&b).admissible {
                    out.push(b);
                }
            }
        }
    }
    out
}

/// All sub-multisets of `m`, each once.
fn sub_multisets(m: &IntMultiset) -> Vec<IntMultiset> {
    let mut out = vec![IntMultiset::new()];
    for &(v, k) in m.counts() {
        out = out
            .into_iter()
            .flat_map(|base| {
                (0..=k).map(move |j| {
                    let mut next = base.clone();
                    next.insert(v, j);
                    next
                })
            })
            .collect();
    }
    out
}

/// Non-decreasing sequences of length `len` in `lo..=hi` summing to `sum`.
fn bounded_partitions(len: usize, sum: i64, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, sum: i64, lo: i64, hi: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if sum == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let n = len as i64;
        for v in lo..=hi {
            if v * n > sum {
                break;
            }
            if hi * (n - 1) < sum - v {
                continue;
            }
            acc.push(v);
            go(len - 1, sum - v, v, hi, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(len, sum, lo, hi, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(bounded_partitions(2, 5, 1, 4), vec![vec![1, 4], vec![2, 3]]);
        assert!(bounded_partitions(3, 100, 1, 4).is_empty());
        assert_eq!(bounded_partitions(1, 3, 3, 3), vec![vec![3]]);
    }

    #[test]
    fn sub_multisets_are_distinct() {
        let subs = sub_multisets(&IntMultiset::from([6, 6, 6]));
        assert_eq!(subs.len(), 4);
        assert_eq!(sub_multisets(&IntMultiset::from([5, 5, 9])).len(), 6);
        assert_eq!(sub_multisets(&IntMultiset::from([1, 2, 3])).len(), 8);
    }

    #[test]
    fn degenerate_bounds_are_empty() {
        assert!(enumerate(EnumerationBounds {
            max_degree: 0,
            max_f: 3
        })
        .is_empty());
        assert!(enumerate(EnumerationBounds {
            max_degree: 10,
            max_f: 1
        })
        .is_empty());
        assert!(enumerate(EnumerationBounds {
            max_degree: 3,
            max_f: 2
        })
        .is_empty());
    }
}
