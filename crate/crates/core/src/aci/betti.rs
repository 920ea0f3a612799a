use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gorenstein::{check_with_theta, GorensteinBetti, GorensteinRejection, MciTriple};
use crate::multiset::IntMultiset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AciError {
    #[error("|D| must be 4, got {0}")]
    DCount(usize),
    #[error("|E| must equal |F| + 3, got |E| = {e} and |F| = {f}")]
    ECount { e: usize, f: usize },
    #[error("|F| must be at least 2, got {0}")]
    FCount(usize),
    #[error("degrees must be positive, found {0}")]
    NonPositive(i64),
    #[error("degenerate linkage: d0 = {0} is not positive")]
    DegenerateLink(i64),
    #[error("slot bookkeeping mismatch: {0}")]
    SlotMismatch(String),
    #[error("not a Gorenstein Betti sequence: {0}")]
    Gorenstein(GorensteinRejection),
}

/// Graded Betti sequence `(D, E, F)` of a candidate almost complete
/// intersection: generators, first and second syzygies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBetti")]
pub struct AciBetti {
    #[serde(rename = "D")]
    d: IntMultiset,
    #[serde(rename = "E")]
    e: IntMultiset,
    #[serde(rename = "F")]
    f: IntMultiset,
}

#[derive(Deserialize)]
struct RawBetti {
    #[serde(rename = "D")]
    d: IntMultiset,
    #[serde(rename = "E")]
    e: IntMultiset,
    #[serde(rename = "F")]
    f: IntMultiset,
}

impl TryFrom<RawBetti> for AciBetti {
    type Error = AciError;

    fn try_from(raw: RawBetti) -> Result<Self, AciError> {
        AciBetti::new(raw.d, raw.e, raw.f)
    }
}

impl AciBetti {
    /// Validates `|D| = 4`, `|E| = |F| + 3`, `|F| ≥ 2` and positivity.
    pub fn new(d: IntMultiset, e: IntMultiset, f: IntMultiset) -> Result<Self, AciError> {
        if d.card() != 4 {
            return Err(AciError::DCount(d.card()));
        }
        if f.card() < 2 {
            return Err(AciError::FCount(f.card()));
        }
        if e.card() != f.card() + 3 {
            return Err(AciError::ECount {
                e: e.card(),
                f: f.card(),
            });
        }
        for m in [&d, &e, &f] {
            if let Some(v) = m.smallest().filter(|&v| v <= 0) {
                return Err(AciError::NonPositive(v));
            }
        }
        Ok(Self { d, e, f })
    }

    pub fn d(&self) -> &IntMultiset {
        &self.d
    }

    pub fn e(&self) -> &IntMultiset {
        &self.e
    }

    pub fn f(&self) -> &IntMultiset {
        &self.f
    }

    /// `p = |F|`.
    pub fn p(&self) -> usize {
        self.f.card()
    }

    /// Key of the canonical order `(‖D‖, D, F, E)`.
    pub(crate) fn sort_key(&self) -> (i64, &IntMultiset, &IntMultiset, &IntMultiset) {
        (self.d.norm(), &self.d, &self.f, &self.e)
    }
}

impl fmt::Display for AciBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(D={}, E={}, F={})", self.d, self.e, self.f)
    }
}

/// All the quantities derived from `(D, E, F)` with `d0 = min D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AciDecomposition {
    pub d: i64,
    pub d0: i64,
    pub dstar: IntMultiset,
    pub theta_z: i64,
    pub theta_g: i64,
    pub ehat: IntMultiset,
    pub s: IntMultiset,
    pub dbar: IntMultiset,
    pub t: IntMultiset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeFailure {
    /// `d - F ⊄ E`; `missing` is `(d - F) \ E`.
    NotContained {
        d_minus_f: IntMultiset,
        missing: IntMultiset,
    },
    /// `Ê ≠ (d0 + D̄) ⊔ (θ_Z - S)`.
    EhatMismatch {
        ehat: IntMultiset,
        expected: IntMultiset,
    },
}

impl fmt::Display for DecomposeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotContained { d_minus_f, missing } => write!(
                f,
                "d-F = {d_minus_f} is not contained in E (missing {missing})"
            ),
            Self::EhatMismatch { ehat, expected } => write!(
                f,
                "Ehat = {ehat} differs from (d0+Dbar) + (thetaZ-S) = {expected}"
            ),
        }
    }
}

/// Runs the aci-type test with the canonical choice `d0 = min D`.
pub fn decompose(b: &AciBetti) -> Result<AciDecomposition, DecomposeFailure> {
    let d = b.d.norm();
    let d0 = b.d.smallest().expect("|D| = 4");
    let mut dstar = b.d.clone();
    dstar.remove_one(d0);
    let theta_z = dstar.norm();
    let theta_g = theta_z - d0;

    let d_minus_f = b.f.reflect(d);
    if !d_minus_f.is_submultiset(&b.e) {
        let missing = d_minus_f.diff(&b.e);
        return Err(DecomposeFailure::NotContained { d_minus_f, missing });
    }
    let ehat = b.e.diff(&d_minus_f);
    let s = dstar.intersect(&ehat.reflect(theta_z));
    let dbar = dstar.diff(&s);
    let expected = dbar.shift(d0).sum(&s.reflect(theta_z));
    if ehat != expected {
        return Err(DecomposeFailure::EhatMismatch { ehat, expected });
    }
    let half = (theta_g % 2 == 0).then_some(theta_g / 2);
    let t = match half {
        Some(h) if s.contains(h) && (b.f.card() + dbar.card()) % 2 == 0 => {
            IntMultiset::singleton(h)
        }
        _ => IntMultiset::new(),
    };
    Ok(AciDecomposition {
        d,
        d0,
        dstar,
        theta_z,
        theta_g,
        ehat,
        s,
        dbar,
        t,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedFailure {
    /// `|G0|` is even, so no Gorenstein algebra can have these generators.
    Parity { g0: IntMultiset },
    Gorenstein {
        g0: IntMultiset,
        reason: GorensteinRejection,
    },
}

impl fmt::Display for InducedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Parity { g0 } => write!(f, "G0 = {g0} has even cardinality {}", g0.card()),
            Self::Gorenstein { g0, reason } => write!(f, "G0 = {g0}: {reason}"),
        }
    }
}

/// `G0 = (θ_Z - F) ⊔ D̄ ⊔ T` with socle degree `θ_G`.
pub fn induced_gorenstein(
    dec: &AciDecomposition,
    f: &IntMultiset,
) -> Result<GorensteinBetti, InducedFailure> {
    let g0 = f.reflect(dec.theta_z).sum(&dec.dbar).sum(&dec.t);
    if g0.card() % 2 == 0 {
        return Err(InducedFailure::Parity { g0 });
    }
    check_with_theta(&g0, dec.theta_g).map_err(|reason| InducedFailure::Gorenstein { g0, reason })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stage3Failure {
    /// `d_i < e_i` for the 1-based `index`.
    Dominance {
        dstar: [i64; 3],
        mci: [i64; 3],
        index: usize,
    },
    /// `d_i > e_i` fails for the index attached to `s ∈ Supp(S \ T)`.
    Strictness {
        s: i64,
        i: usize,
        d_i: i64,
        e_i: i64,
    },
}

impl fmt::Display for Stage3Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Dominance { dstar, mci, .. } => write!(
                f,
                "({},{},{}) \u{2271} ({},{},{})",
                dstar[0], dstar[1], dstar[2], mci[0], mci[1], mci[2]
            ),
            Self::Strictness { s, i, d_i, e_i } => {
                write!(f, "s={s}: i={i}, d_{i}={d_i} is not > e_{i}={e_i}")
            }
        }
    }
}

fn condition3(dec: &AciDecomposition, mci: &MciTriple) -> Result<(), Stage3Failure> {
    let ds = dec.dstar.to_sorted_vec();
    let dstar = [ds[0], ds[1], ds[2]];
    let e = mci.degrees;
    if let Some(i) = (0..3).find(|&i| dstar[i] < e[i]) {
        return Err(Stage3Failure::Dominance {
            dstar,
            mci: e,
            index: i + 1,
        });
    }
    let rest = dec.s.diff(&dec.t);
    for &(s, mu) in rest.counts() {
        let first = ds.iter().position(|&x| x == s).expect("S is inside D*") + 1;
        let i = first + mu - 1;
        if dstar[i - 1] <= e[i - 1] {
            return Err(Stage3Failure::Strictness {
                s,
                i,
                d_i: dstar[i - 1],
                e_i: e[i - 1],
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    Stage1(DecomposeFailure),
    Stage2(InducedFailure),
    Stage3(Stage3Failure),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Stage1(r) => r.fmt(f),
            Self::Stage2(r) => r.fmt(f),
            Self::Stage3(r) => r.fmt(f),
        }
    }
}

/// Outcome of [`check_betti`].
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub admissible: bool,
    pub stage: Option<u8>,
    #[serde(rename = "beta_G")]
    pub beta_g: Option<GorensteinBetti>,
    pub mci: Option<MciTriple>,
    pub witness: String,
    #[serde(skip)]
    pub decomposition: Option<AciDecomposition>,
    #[serde(skip)]
    pub rejection: Option<Rejection>,
}

impl Verdict {
    fn reject(
        rejection: Rejection,
        decomposition: Option<AciDecomposition>,
        beta_g: Option<GorensteinBetti>,
        mci: Option<MciTriple>,
    ) -> Self {
        let stage = match rejection {
            Rejection::Stage1(_) => 1,
            Rejection::Stage2(_) => 2,
            Rejection::Stage3(_) => 3,
        };
        Self {
            admissible: false,
            stage: Some(stage),
            beta_g,
            mci,
            witness: rejection.to_string(),
            decomposition,
            rejection: Some(rejection),
        }
    }

    /// Multi-line human-readable account of every computed quantity.
    pub fn explain(&self) -> String {
        let mut out = String::new();
        if let Some(dec) = &self.decomposition {
            out.push_str(&format!(
                "d = {}, d0 = {}, D* = {}, thetaZ = {}, thetaG = {}\n",
                dec.d, dec.d0, dec.dstar, dec.theta_z, dec.theta_g
            ));
            out.push_str(&format!(
                "Ehat = {}, S = {}, Dbar = {}, T = {}\n",
                dec.ehat, dec.s, dec.dbar, dec.t
            ));
        }
        if let Some(g) = &self.beta_g {
            out.push_str(&format!("beta_G = {g}\n"));
        }
        if let Some(m) = &self.mci {
            out.push_str(&format!("mci beta_G = {m}\n"));
        }
        match self.stage {
            None => out.push_str("admissible: conditions 1-3 hold\n"),
            Some(s) => out.push_str(&format!("rejected at condition {s}: {}\n", self.witness)),
        }
        out
    }
}

/// Decides whether `(D, E, F)` is the Betti sequence of some Artinian
/// almost complete intersection in three variables, running the three
/// conditions in order and stopping at the first failure.
pub fn check_betti(b: &AciBetti) -> Verdict {
    let dec = match decompose(b) {
        Ok(dec) => dec,
        Err(r) => return Verdict::reject(Rejection::Stage1(r), None, None, None),
    };
    let gor = match induced_gorenstein(&dec, &b.f) {
        Ok(g) => g,
        Err(r) => return Verdict::reject(Rejection::Stage2(r), Some(dec), None, None),
    };
    let mci = gor.mci();
    if let Err(r) = condition3(&dec, &mci) {
        return Verdict::reject(Rejection::Stage3(r), Some(dec), Some(gor), Some(mci));
    }
    Verdict {
        admissible: true,
        stage: None,
        beta_g: Some(gor),
        mci: Some(mci),
        witness: "conditions 1-3 hold".into(),
        decomposition: Some(dec),
        rejection: None,
    }
}

/// Cardinalities allowed for the part `S̄ ⊆ S` that survives in the minimal
/// resolution of the linked Gorenstein algebra: `∅`, `{θ_G/2}`,
/// `{α, θ_G-α}` or `{θ_G/2, α, θ_G-α}`, each realizable inside `S`.
pub fn sbar_cases(s: &IntMultiset, theta_g: i64) -> Vec<usize> {
    let half = (theta_g % 2 == 0).then_some(theta_g / 2);
    let pair_inside = |base: &IntMultiset| {
        s.support().any(|a| {
            let pair = IntMultiset::from([a, theta_g - a]);
            base.sum(&pair).is_submultiset(s)
        })
    };
    let mut out = vec![0];
    if half.is_some_and(|h| s.contains(h)) {
        out.push(1);
    }
    if pair_inside(&IntMultiset::new()) {
        out.push(2);
    }
    if let Some(h) = half.filter(|&h| s.contains(h)) {
        if pair_inside(&IntMultiset::singleton(h)) {
            out.push(3);
        }
    }
    out
}
