//! Numerical theory of codimension-3 Artinian Gorenstein graded algebras.
//!
//! A Gorenstein Betti sequence is determined by its generator degrees `H`:
//! the resolution is `R(-θ) → ⊕_{θ-H} R(-h) → ⊕_H R(-h) → R` with
//! `θ = 2‖H‖/(|H|-1)`. All index sets below are 1-based on the ascending
//! degree list `d_1 ≤ ... ≤ d_{2n+1}`.

use std::fmt;

use rand::Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::multiset::IntMultiset;

/// Why a generator multiset is not a Gorenstein Betti sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum GorensteinRejection {
    /// `|H|` must be odd.
    EvenCount { count: usize },
    /// `|H| ≥ 3`.
    TooFew { count: usize },
    /// `2‖H‖/(|H|-1)` is not an integer.
    NonIntegralTheta { numerator: i64, denominator: i64 },
    /// `θ > h_{i+1} + h_{2m+2-i}` fails for this `i`.
    GaetaDiesel {
        i: usize,
        theta: i64,
        left: i64,
        right: i64,
    },
    /// `θ` was prescribed and disagrees with `2‖H‖/(|H|-1)`.
    ThetaMismatch { expected: i64, computed: i64 },
}

impl fmt::Display for GorensteinRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EvenCount { count } => write!(f, "|H| = {count} is even"),
            Self::TooFew { count } => write!(f, "|H| = {count} < 3"),
            Self::NonIntegralTheta {
                numerator,
                denominator,
            } => write!(f, "theta = {numerator}/{denominator} is not an integer"),
            Self::GaetaDiesel {
                i,
                theta,
                left,
                right,
            } => write!(
                f,
                "Gaeta-Diesel condition i={i}: theta={theta} is not > {left} + {right}"
            ),
            Self::ThetaMismatch { expected, computed } => write!(
                f,
                "socle degree {expected} differs from 2|H|/(#H-1) = {computed}"
            ),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GorensteinError {
    #[error("not a Gorenstein Betti sequence: {0}")]
    Inadmissible(GorensteinRejection),
    #[error("resolution does not define an Artinian quotient (H({degree}) = {value})")]
    NotArtinian { degree: i64, value: i64 },
    #[error("mng undefined at or below the initial degree {initial} (asked for {asked})")]
    MngAtInitialDegree { initial: i64, asked: i64 },
    #[error("inconsistent resolution: {0}")]
    Inconsistent(String),
}

/// Generator degrees `G0` and socle degree `θ` of an admissible
/// codimension-3 Gorenstein Betti sequence. Only constructible through the
/// admissibility check.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GorensteinBetti {
    gens: IntMultiset,
    theta: i64,
}

/// Checks `|H|` odd ≥ 3, integrality of `θ`, and the Gaeta–Diesel
/// inequalities.
pub fn check_gorenstein_betti(gens: &IntMultiset) -> Result<GorensteinBetti, GorensteinRejection> {
    let count = gens.card();
    if count % 2 == 0 {
        return Err(GorensteinRejection::EvenCount { count });
    }
    if count < 3 {
        return Err(GorensteinRejection::TooFew { count });
    }
    let numerator = 2 * gens.norm();
    let denominator = count as i64 - 1;
    if numerator % denominator != 0 {
        return Err(GorensteinRejection::NonIntegralTheta {
            numerator,
            denominator,
        });
    }
    let theta = numerator / denominator;
    let h = gens.to_sorted_vec();
    let m = (count - 1) / 2;
    for i in 1..=m {
        // h_{i+1} + h_{2m+2-i}, 1-based
        let (left, right) = (h[i], h[2 * m + 1 - i]);
        if theta <= left + right {
            return Err(GorensteinRejection::GaetaDiesel {
                i,
                theta,
                left,
                right,
            });
        }
    }
    Ok(GorensteinBetti {
        gens: gens.clone(),
        theta,
    })
}

/// As [`check_gorenstein_betti`], additionally requiring the socle degree to
/// equal `theta`.
pub fn check_with_theta(
    gens: &IntMultiset,
    theta: i64,
) -> Result<GorensteinBetti, GorensteinRejection> {
    if gens.card() % 2 == 1 && gens.card() >= 3 {
        let denominator = gens.card() as i64 - 1;
        let numerator = 2 * gens.norm();
        if numerator % denominator != 0 || numerator / denominator != theta {
            return Err(GorensteinRejection::ThetaMismatch {
                expected: theta,
                computed: numerator.div_euclid(denominator),
            });
        }
    }
    check_gorenstein_betti(gens)
}

/// Which clause of the mci rule produced the triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MciCase {
    /// `B ≠ ∅`: `(d_1, d_{max B}, d_{2n+4-min B})`.
    FromB,
    /// `B = ∅, C ≠ ∅`: `(d_1, d_2, d_{max C})`.
    FromC,
    /// `B = C = ∅`: `(d_1, d_2, d_3)`.
    Smallest,
}

/// Minimal type `(e1 ≤ e2 ≤ e3)` of a regular sequence inside an ideal with
/// the given Gorenstein Betti sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MciTriple {
    pub degrees: [i64; 3],
    pub case: MciCase,
}

impl Serialize for MciTriple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.degrees.serialize(s)
    }
}

impl fmt::Display for MciTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.degrees;
        write!(f, "({a},{b},{c})")
    }
}

/// The index sets `B`, `C` and `B̄`, 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BcSets {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub bbar: Vec<usize>,
}

impl GorensteinBetti {
    pub fn gens(&self) -> &IntMultiset {
        &self.gens
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    /// `n` with `|G0| = 2n + 1`.
    pub fn n(&self) -> usize {
        (self.gens.card() - 1) / 2
    }

    /// First syzygy degrees `θ - G0`.
    pub fn syzygies(&self) -> IntMultiset {
        self.gens.reflect(self.theta)
    }

    /// `(G0, G1, G2)`.
    pub fn modules(&self) -> [IntMultiset; 3] {
        [
            self.gens.clone(),
            self.syzygies(),
            IntMultiset::singleton(self.theta),
        ]
    }

    /// `d_i`, 1-based.
    fn d(&self, sorted: &[i64], i: usize) -> i64 {
        sorted[i - 1]
    }

    pub fn bc_sets(&self) -> BcSets {
        let d = self.gens.to_sorted_vec();
        let n = self.n();
        let t = self.theta;
        let at = |i: usize| self.d(&d, i);
        let b = (3..=n + 1)
            .filter(|&i| t <= at(i) + at(2 * n + 4 - i))
            .collect();
        let c = (4..=n + 2)
            .filter(|&i| 2 * n + 5 - i <= 2 * n + 1 && t <= at(i) + at(2 * n + 5 - i))
            .collect();
        let bbar = (3..=2 * n + 1)
            .filter(|&i| t <= at(i) + at(2 * n + 4 - i))
            .collect();
        BcSets { b, c, bbar }
    }

    pub fn mci(&self) -> MciTriple {
        let d = self.gens.to_sorted_vec();
        let n = self.n();
        let at = |i: usize| d[i - 1];
        let sets = self.bc_sets();
        if let (Some(&lo), Some(&hi)) = (sets.b.first(), sets.b.last()) {
            MciTriple {
                degrees: [at(1), at(hi), at(2 * n + 4 - lo)],
                case: MciCase::FromB,
            }
        } else if let Some(&hi) = sets.c.last() {
            MciTriple {
                degrees: [at(1), at(2), at(hi)],
                case: MciCase::FromC,
            }
        } else {
            MciTriple {
                degrees: [at(1), at(2), at(3)],
                case: MciCase::Smallest,
            }
        }
    }

    /// Hilbert function of the quotient of `k[x1,x2,x3]`.
    pub fn hilbert(&self) -> HilbertFn {
        hilbert_from_resolution(&self.modules(), 3)
            .expect("admissible Gorenstein sequences are Artinian in three variables")
    }
}

impl fmt::Display for GorensteinBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {{{}}})",
            self.gens,
            self.syzygies(),
            self.theta
        )
    }
}

impl Serialize for GorensteinBetti {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GorensteinBetti", 4)?;
        st.serialize_field("G0", &self.gens)?;
        st.serialize_field("G1", &self.syzygies())?;
        st.serialize_field("G2", &IntMultiset::singleton(self.theta))?;
        st.serialize_field("theta", &self.theta)?;
        st.end()
    }
}

/// Hilbert function `H(0), H(1), ...` up to its last nonzero value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertFn {
    pub values: Vec<i64>,
    pub nvars: usize,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

impl HilbertFn {
    pub fn value(&self, t: i64) -> i64 {
        if t < 0 {
            return 0;
        }
        self.values.get(t as usize).copied().unwrap_or(0)
    }

    /// `Δ²H(t) = H(t) - 2H(t-1) + H(t-2)`.
    pub fn second_difference(&self, t: i64) -> i64 {
        self.value(t) - 2 * self.value(t - 1) + self.value(t - 2)
    }

    /// Dimension of the degree-`t` part of the polynomial ring.
    fn ring_dim(&self, t: i64) -> i64 {
        binomial(t + self.nvars as i64 - 1, self.nvars as i64 - 1)
    }

    /// Smallest degree where the ideal is nonzero.
    pub fn initial_degree(&self) -> i64 {
        (0..)
            .find(|&t| self.value(t) < self.ring_dim(t))
            .expect("Artinian Hilbert functions eventually drop")
    }

    /// Sum of the values, the length of the Artinian algebra.
    pub fn length(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// `H(t) = Σ_i (-1)^i Σ_{h ∈ M_i} C(t - h + nvars - 1, nvars - 1)` with
/// `M_0 = {0}` and `modules = [M_1, M_2, ...]`.
pub fn hilbert_from_resolution(
    modules: &[IntMultiset],
    nvars: usize,
) -> Result<HilbertFn, GorensteinError> {
    let k = nvars as i64 - 1;
    let top = modules
        .iter()
        .filter_map(IntMultiset::largest)
        .max()
        .unwrap_or(0)
        .max(0);
    let eval = |t: i64| -> i64 {
        let mut v = binomial(t + k, k);
        for (i, m) in modules.iter().enumerate() {
            let s: i64 = m
                .counts()
                .iter()
                .map(|&(h, c)| c as i64 * binomial(t - h + k, k))
                .sum();
            if i % 2 == 0 {
                v -= s;
            } else {
                v += s;
            }
        }
        v
    };
    // past the largest twist H is a polynomial of degree < nvars, so
    // nvars consecutive zeros there mean it vanishes identically
    for t in top..top + nvars as i64 {
        let v = eval(t);
        if v != 0 {
            return Err(GorensteinError::NotArtinian {
                degree: t,
                value: v,
            });
        }
    }
    let mut values: Vec<i64> = (0..top.max(1)).map(eval).collect();
    while values.last() == Some(&0) {
        values.pop();
    }
    Ok(HilbertFn { values, nvars })
}

/// `-Δ²H(d)`, the largest number of degree-`d` minimal generators compatible
/// with `H`. Only meaningful above the initial degree.
pub fn mng(h: &HilbertFn, d: i64) -> Result<i64, GorensteinError> {
    let initial = h.initial_degree();
    if d <= initial {
        return Err(GorensteinError::MngAtInitialDegree { initial, asked: d });
    }
    Ok(-h.second_difference(d))
}

/// Removes from a (possibly non-minimal) Gorenstein resolution every
/// repetition `s` between generators and first syzygies whose multiplicity
/// in `m0 ∩ m1` exceeds that of `θ - s`, by the excess.
pub fn cancel_duals(
    m0: &IntMultiset,
    m1: &IntMultiset,
    theta: i64,
) -> Result<(IntMultiset, IntMultiset), GorensteinError> {
    if m0.card() != m1.card() {
        return Err(GorensteinError::Inconsistent(format!(
            "{} generators but {} first syzygies with a rank-one last module",
            m0.card(),
            m1.card()
        )));
    }
    let (mut a, mut b) = (m0.clone(), m1.clone());
    loop {
        let common = a.intersect(&b);
        let excess: Vec<(i64, usize)> = common
            .counts()
            .iter()
            .filter_map(|&(s, k)| {
                let dual = common.multiplicity(theta - s);
                (k > dual).then_some((s, k - dual))
            })
            .collect();
        if excess.is_empty() {
            return Ok((a, b));
        }
        let cut = IntMultiset::from_counts(excess);
        a = a.diff(&cut);
        b = b.diff(&cut);
    }
}

/// Cancels a ghost pair `{s, θ-s}` present in both generators and first
/// syzygies, as produced when a pfaffian presentation carries an extra
/// generator together with its zero partner.
pub fn cancel_symmetric_pair(
    m0: &IntMultiset,
    m1: &IntMultiset,
    theta: i64,
    s: i64,
) -> Result<(IntMultiset, IntMultiset), GorensteinError> {
    let pair = IntMultiset::from([s, theta - s]);
    if !pair.is_submultiset(m0) || !pair.is_submultiset(m1) {
        return Err(GorensteinError::Inconsistent(format!(
            "pair {pair} is not present in both modules"
        )));
    }
    Ok((m0.diff(&pair), m1.diff(&pair)))
}

/// A failed structural identity relating `G0`, `θ` and the Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BcViolation {
    pub clause: char,
    pub index: usize,
    pub detail: String,
}

/// Evaluates the clauses (a)–(e) linking `B̄`, `C` and `-Δ²H`, plus the
/// fact that `B = ∅` forces `B̄ ⊆ {n+2}`. Returns every violation found.
pub fn bc_violations(b: &GorensteinBetti) -> Vec<BcViolation> {
    let d = b.gens().to_sorted_vec();
    let n = b.n();
    let h = b.hilbert();
    let sets = b.bc_sets();
    let at = |i: usize| d[i - 1];
    let mu = |v: i64| b.gens().multiplicity(v) as i64;
    let neg_d2 = |v: i64| -h.second_difference(v);
    let mut out = Vec::new();
    let violation = |clause, index, detail: String| BcViolation {
        clause,
        index,
        detail,
    };

    for &i in &sets.bbar {
        if mu(at(i)) != neg_d2(at(i)) {
            out.push(violation(
                'a',
                i,
                format!("mu(d_{i})={} but -D2H={}", mu(at(i)), neg_d2(at(i))),
            ));
        }
    }
    for &i in &sets.c {
        if !sets.bbar.contains(&i)
            && !sets.bbar.contains(&(i - 1))
            && mu(at(i)) != neg_d2(at(i)) - 1
        {
            out.push(violation(
                'b',
                i,
                format!("mu(d_{i})={} but -D2H-1={}", mu(at(i)), neg_d2(at(i)) - 1),
            ));
        }
    }
    for (x, &i) in sets.bbar.iter().enumerate() {
        for &j in &sets.bbar[x + 1..] {
            if at(i) == at(j) {
                out.push(violation(
                    'c',
                    i,
                    format!("d_{i} = d_{j} with both in Bbar"),
                ));
            }
        }
    }
    for i in 1..=d.len() {
        let v = at(i);
        if v <= at(1) {
            continue;
        }
        let k = d.iter().position(|&x| x == v).expect("present") + 1;
        // B̄ and C are only defined from index 3 and 4 on
        if k >= 3 && mu(v) == neg_d2(v) && !sets.bbar.contains(&k) {
            out.push(violation('d', i, format!("k={k} not in Bbar")));
        }
        if k >= 4 && mu(v) == neg_d2(v) - 1 && k <= n + 2 && !sets.c.contains(&k) {
            out.push(violation('e', i, format!("k={k} not in C")));
        }
    }
    if sets.b.is_empty() && sets.bbar.iter().any(|&i| i != n + 2) {
        out.push(violation(
            'B',
            n + 2,
            format!("B empty but Bbar = {:?}", sets.bbar),
        ));
    }
    out
}

/// Samples an admissible Gorenstein sequence with `1 ≤ n ≤ max_n`
/// (`|G0| = 2n+1`) and degrees in `1..=max_degree` by rejection.
pub fn sample_admissible<R: Rng>(rng: &mut R, max_n: usize, max_degree: i64) -> GorensteinBetti {
    loop {
        let n = rng.gen_range(1..=max_n);
        let gens: IntMultiset = (0..2 * n + 1)
            .map(|_| rng.gen_range(1..=max_degree))
            .collect();
        if let Ok(b) = check_gorenstein_betti(&gens) {
            return b;
        }
    }
}
