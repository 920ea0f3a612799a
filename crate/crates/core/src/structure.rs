//! Polynomial-level construction of almost complete intersection
//! resolutions from an alternating matrix.
//!
//! Given an alternating `φ` of odd size `m` and three slots `G`, reorder so
//! that `G` comes first and write
//!
//! ```text
//!   φ = [ α  -λᵗ ]     σ = F-part of the submaximal pfaffians
//!       [ λ   β  ]     p = pf β,  β̄ = pfaffian adjoint of β
//! ```
//!
//! The complex is
//!
//! ```text
//!   0 → F^∨ --[λᵗ; -β]--> G ⊕ F --[p·I  λᵗβ̄; -pfψ  -σ]--> G ⊕ R --[pfψ  p]--> R
//! ```
//!
//! where `pfψ` is the G-part of the pfaffian vector. Only the complex
//! property, homogeneity and rank bookkeeping are verified here; exactness
//! is not checked.

use num::BigRational;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::aci::{link_betti, LinkResult};
use crate::exact::{Homogeneity, MatrixError, Monomial, Poly, PolyMatrix};
use crate::multiset::IntMultiset;
use crate::pfaffian::{AlternatingMatrix, PfaffianError};

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("matrix size {0} must be odd and at least 5")]
    BadSize(usize),
    #[error("G slots must be three distinct indices below {size}, got {got:?}")]
    BadSlots { got: Vec<usize>, size: usize },
    #[error("{got} slot degrees given for a matrix of size {expected}")]
    DegreeCount { expected: usize, got: usize },
    #[error("slot degrees sum to {sum}, not a multiple of (m-1)/2 = {half}")]
    NonIntegralSocle { sum: i64, half: i64 },
    #[error("entry ({row},{col}) is not homogeneous of degree {expected}")]
    Grading {
        row: usize,
        col: usize,
        expected: i64,
    },
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Graded free module `⊕ R(-t)`, basis order preserved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        Self { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn multiset(&self) -> IntMultiset {
        IntMultiset::from(self.twists.clone())
    }
}

/// `modules[0] ← modules[1] ← ...` with `maps[i]: modules[i+1] → modules[i]`
/// of shape `rank(modules[i]) × rank(modules[i+1])`.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub modules: Vec<GradedFreeModule>,
    pub maps: Vec<PolyMatrix>,
}

/// An alternating matrix with a grading by slot degrees and a choice of
/// three slots for the complete intersection.
#[derive(Clone, Debug)]
pub struct AlternatingPresentation {
    pub matrix: AlternatingMatrix,
    pub g_slots: [usize; 3],
    /// Degree of the submaximal pfaffian at each slot.
    pub slot_degrees: Vec<i64>,
}

/// The blocks of `φ` after moving the G slots to the front.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub alpha: PolyMatrix,
    pub lambda: PolyMatrix,
    pub beta: AlternatingMatrix,
    pub beta_bar: AlternatingMatrix,
    /// `pf β`.
    pub p: Poly,
    /// Submaximal pfaffians at the G slots.
    pub pf_psi: Vec<Poly>,
    /// Submaximal pfaffians at the F slots.
    pub sigma: Vec<Poly>,
    /// Slot order used: G slots then the rest ascending.
    pub order: Vec<usize>,
    pub g_degrees: Vec<i64>,
    pub f_degrees: Vec<i64>,
    pub theta_g: i64,
}

impl AlternatingPresentation {
    pub fn new(
        matrix: AlternatingMatrix,
        g_slots: [usize; 3],
        slot_degrees: Vec<i64>,
    ) -> Result<Self, StructureError> {
        let m = matrix.size();
        if m % 2 == 0 || m < 5 {
            return Err(StructureError::BadSize(m));
        }
        let [a, b, c] = g_slots;
        if a == b || b == c || a == c || g_slots.iter().any(|&i| i >= m) {
            return Err(StructureError::BadSlots {
                got: g_slots.to_vec(),
                size: m,
            });
        }
        if slot_degrees.len() != m {
            return Err(StructureError::DegreeCount {
                expected: m,
                got: slot_degrees.len(),
            });
        }
        let pres = Self {
            matrix,
            g_slots,
            slot_degrees,
        };
        let theta = pres.theta_g()?;
        for i in 0..m {
            for j in i + 1..m {
                let expected = theta - pres.slot_degrees[i] - pres.slot_degrees[j];
                if !pres.matrix.get(i, j).homogeneity().fits(expected) {
                    return Err(StructureError::Grading {
                        row: i,
                        col: j,
                        expected,
                    });
                }
            }
        }
        Ok(pres)
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// Socle degree `θ = 2Σg/(m-1)` of the Gorenstein ideal.
    pub fn theta_g(&self) -> Result<i64, StructureError> {
        let sum: i64 = self.slot_degrees.iter().sum();
        let half = (self.size() as i64 - 1) / 2;
        if sum % half != 0 {
            return Err(StructureError::NonIntegralSocle { sum, half });
        }
        Ok(sum / half)
    }

    pub fn blocks(&self) -> Result<Blocks, StructureError> {
        let m = self.size();
        let mut order: Vec<usize> = self.g_slots.to_vec();
        order.extend((0..m).filter(|i| !self.g_slots.contains(i)));
        let phi = self.matrix.principal(&order);
        let pf = phi.submaximal_pfaffians()?;
        let g_idx = [0, 1, 2];
        let f_idx: Vec<usize> = (3..m).collect();
        let alpha = phi.matrix().select(&g_idx, &g_idx);
        let lambda = phi.matrix().select(&f_idx, &g_idx);
        let beta = phi.principal(&f_idx);
        let beta_bar = beta.adjoint()?;
        let p = beta.pfaffian()?;
        let degrees: Vec<i64> = order.iter().map(|&i| self.slot_degrees[i]).collect();
        Ok(Blocks {
            alpha,
            lambda,
            beta,
            beta_bar,
            p,
            pf_psi: pf[..3].to_vec(),
            sigma: pf[3..].to_vec(),
            order,
            g_degrees: degrees[..3].to_vec(),
            f_degrees: degrees[3..].to_vec(),
            theta_g: self.theta_g()?,
        })
    }
}

impl Blocks {
    /// `θ_Z`, the sum of the G degrees.
    pub fn theta_z(&self) -> i64 {
        self.g_degrees.iter().sum()
    }

    /// Degree of `p = pf β`.
    pub fn d0(&self) -> i64 {
        self.theta_z() - self.theta_g
    }

    /// The 3×3 alternating matrix whose submaximal pfaffians are `pfψ`.
    pub fn psi(&self) -> AlternatingMatrix {
        let q = &self.pf_psi;
        // pfaffians of [[0,a,b],[-a,0,c],[-b,-c,0]] are (c, -b, a)
        let upper = [q[2].clone(), -&q[1], q[0].clone()];
        AlternatingMatrix::from_upper(3, |i, j| upper[i + j - 1].clone())
    }

    /// `α·p + λᵗ·β̄·λ`, which should equal [`Blocks::psi`].
    pub fn lifted_psi(&self) -> Result<PolyMatrix, MatrixError> {
        let corr = self
            .lambda
            .transpose()
            .mat_mul(self.beta_bar.matrix())?
            .mat_mul(&self.lambda)?;
        self.alpha.scale(&self.p).add(&corr)
    }

    /// For every F slot `k`, coefficients `c` with `Σ c_i·pfψ_i = p·σ_k`,
    /// read off the middle map. Each row certifies `p·σ_k ∈ (pfψ)`.
    pub fn colon_certificates(&self) -> Result<Vec<[Poly; 3]>, MatrixError> {
        let lb = self.lambda.transpose().mat_mul(self.beta_bar.matrix())?;
        Ok((0..lb.cols())
            .map(|k| {
                [
                    lb.get(0, k).clone(),
                    lb.get(1, k).clone(),
                    lb.get(2, k).clone(),
                ]
            })
            .collect())
    }
}

/// Builds the four-term complex from a presentation. Its twists are
/// `{0}`, `G ⊔ {d0}`, `(d0 + G) ⊔ (d0 + F)`, `θ_Z - F`.
pub fn build_aci_complex(pres: &AlternatingPresentation) -> Result<GradedComplex, StructureError> {
    let bl = pres.blocks()?;
    let k = bl.f_degrees.len();
    let d0 = bl.d0();
    let theta_z = bl.theta_z();

    let lt = bl.lambda.transpose();
    let first = PolyMatrix::from_fn(3 + k, k, |i, j| {
        if i < 3 {
            lt.get(i, j).clone()
        } else {
            -bl.beta.get(i - 3, j)
        }
    });
    let lb = lt.mat_mul(bl.beta_bar.matrix())?;
    let middle = PolyMatrix::from_fn(4, 3 + k, |i, j| match (i < 3, j < 3) {
        (true, true) if i == j => bl.p.clone(),
        (true, true) => Poly::zero(),
        (true, false) => lb.get(i, j - 3).clone(),
        (false, true) => -&bl.pf_psi[j],
        (false, false) => -&bl.sigma[j - 3],
    });
    let mut last_row = bl.pf_psi.clone();
    last_row.push(bl.p.clone());
    let last = PolyMatrix::row(last_row);

    let c1: Vec<i64> = bl.g_degrees.iter().copied().chain([d0]).collect();
    let c2: Vec<i64> = bl
        .g_degrees
        .iter()
        .chain(&bl.f_degrees)
        .map(|g| g + d0)
        .collect();
    let c3: Vec<i64> = bl.f_degrees.iter().map(|f| theta_z - f).collect();
    Ok(GradedComplex {
        modules: vec![
            GradedFreeModule::new(vec![0]),
            GradedFreeModule::new(c1),
            GradedFreeModule::new(c2),
            GradedFreeModule::new(c3),
        ],
        maps: vec![last, middle, first],
    })
}

/// Nonzero entry of a composite, located in the target/source bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryWitness {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositionCheck {
    /// Checks `maps[index] · maps[index + 1] = 0`.
    pub index: usize,
    pub zero: bool,
    pub witness: Option<EntryWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogeneityCheck {
    pub index: usize,
    pub homogeneous: bool,
    pub witness: Option<HomogeneityWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityWitness {
    pub row: usize,
    pub col: usize,
    pub expected_degree: i64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub ranks: Vec<usize>,
    pub shapes_ok: bool,
    pub compositions: Vec<CompositionCheck>,
    pub homogeneity: Vec<HomogeneityCheck>,
    /// `Σ (-1)^i rank C_i`; zero for a resolution of a finite-length cyclic
    /// module.
    pub rank_alternating_sum: i64,
}

impl ComplexReport {
    pub fn all_ok(&self) -> bool {
        self.shapes_ok
            && self.rank_alternating_sum == 0
            && self.compositions.iter().all(|c| c.zero)
            && self.homogeneity.iter().all(|h| h.homogeneous)
    }
}

/// Checks shapes, `d∘d = 0`, homogeneity of every map (entry `(r, c)` of
/// `maps[i]` must be zero or of degree `twist_{i+1}[c] - twist_i[r]`) and
/// the alternating rank sum. Never fails; problems go into the report.
pub fn verify_complex(c: &GradedComplex) -> ComplexReport {
    let ranks: Vec<usize> = c.modules.iter().map(GradedFreeModule::rank).collect();
    let shapes_ok = c.maps.len() + 1 == c.modules.len()
        && c.maps
            .iter()
            .enumerate()
            .all(|(i, m)| m.shape() == (ranks[i], ranks[i + 1]));
    let rank_alternating_sum = ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum();

    let compositions = (0..c.maps.len().saturating_sub(1))
        .map(|i| match c.maps[i].mat_mul(&c.maps[i + 1]) {
            Ok(prod) => {
                let witness = prod
                    .entries()
                    .find(|(_, v)| !v.is_zero())
                    .map(|((row, col), v)| EntryWitness {
                        row,
                        col,
                        value: v.to_string(),
                    });
                CompositionCheck {
                    index: i,
                    zero: witness.is_none(),
                    witness,
                }
            }
            Err(e) => CompositionCheck {
                index: i,
                zero: false,
                witness: Some(EntryWitness {
                    row: 0,
                    col: 0,
                    value: e.to_string(),
                }),
            },
        })
        .collect();

    let homogeneity = c
        .maps
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let (target, source) = match (c.modules.get(i), c.modules.get(i + 1)) {
                (Some(t), Some(s)) => (t, s),
                _ => {
                    return HomogeneityCheck {
                        index: i,
                        homogeneous: false,
                        witness: None,
                    }
                }
            };
            let witness = m.entries().find_map(|((row, col), v)| {
                let expected = source.twists.get(col)? - target.twists.get(row)?;
                (!v.homogeneity().fits(expected)).then(|| HomogeneityWitness {
                    row,
                    col,
                    expected_degree: expected,
                    value: v.to_string(),
                })
            });
            HomogeneityCheck {
                index: i,
                homogeneous: witness.is_none(),
                witness,
            }
        })
        .collect();

    ComplexReport {
        ranks,
        shapes_ok,
        compositions,
        homogeneity,
        rank_alternating_sum,
    }
}

/// `(p_a, p_b, p_c, p_abc)` where `p_abc` is the pfaffian of `m` with rows
/// and columns `a, b, c` deleted. These generate `(p_a,p_b,p_c):(p_1..p_m)`
/// when `p_a, p_b, p_c` form a regular sequence.
pub fn corollary_gen_generators(
    m: &AlternatingMatrix,
    abc: [usize; 3],
) -> Result<Vec<Poly>, StructureError> {
    let size = m.size();
    if size % 2 == 0 || size < 5 {
        return Err(StructureError::BadSize(size));
    }
    let [a, b, c] = abc;
    if a == b || b == c || a == c || abc.iter().any(|&i| i >= size) {
        return Err(StructureError::BadSlots {
            got: abc.to_vec(),
            size,
        });
    }
    let pf = m.submaximal_pfaffians()?;
    let p_abc = m.delete_rows_cols(&abc)?.pfaffian()?;
    Ok(vec![pf[a].clone(), pf[b].clone(), pf[c].clone(), p_abc])
}

/// Random homogeneous form of degree `deg` in `nvars` variables with
/// integer coefficients in `-coeff..=coeff`; zero when `deg < 0`.
pub fn random_form<R: Rng>(rng: &mut R, nvars: usize, deg: i64, coeff: i64) -> Poly {
    if deg < 0 {
        return Poly::zero();
    }
    let mut out = Poly::zero();
    for exps in monomials(nvars, deg as u32) {
        let c = rng.gen_range(-coeff..=coeff);
        if c != 0 {
            out += &Poly::term(BigRational::from_integer(c.into()), Monomial::new(exps));
        }
    }
    out
}

fn monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials(nvars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Alternating matrix graded by `slot_degrees` with random entries of
/// degree `θ - g_i - g_j` in `nvars` variables.
pub fn random_graded_alternating<R: Rng>(
    rng: &mut R,
    slot_degrees: &[i64],
    nvars: usize,
) -> Result<AlternatingMatrix, StructureError> {
    let m = slot_degrees.len();
    let half = (m as i64 - 1) / 2;
    let sum: i64 = slot_degrees.iter().sum();
    if m % 2 == 0 || half == 0 {
        return Err(StructureError::BadSize(m));
    }
    if sum % half != 0 {
        return Err(StructureError::NonIntegralSocle { sum, half });
    }
    let theta = sum / half;
    Ok(AlternatingMatrix::from_upper(m, |i, j| {
        random_form(rng, nvars, theta - slot_degrees[i] - slot_degrees[j], 9)
    }))
}

/// Polynomial and multiset views of five general points linked in a
/// complete intersection of type `(2,2,8)`.
#[derive(Clone, Debug, Serialize)]
pub struct Example228Report {
    pub link: LinkResult,
    pub complex: ComplexReport,
    /// Twists of the polynomial complex, generators first.
    pub complex_twists: [IntMultiset; 3],
    /// Whether the only unit entry between the two syzygy modules sits in
    /// twist 15 on both sides.
    pub unit_entry_twist: Option<i64>,
    pub matches_paper: bool,
}

/// Reproduces the worked example: five general points in `P^3` have a
/// `5×5` linear pfaffian presentation; bordering it with the degree-8
/// generator `c·q_3` adds the slot pair `(8, -3)`.
pub fn reproduce_example_228<R: Rng>(rng: &mut R) -> Result<Example228Report, StructureError> {
    let gens = IntMultiset::from([2, 2, 2, 2, 2]);
    let link = link_betti(&gens, 5, [2, 2, 8], &IntMultiset::from([8]))
        .expect("five points admit the (2,2,8) link");

    let base = random_graded_alternating(rng, &[2; 5], 4)?;
    let c = random_form(rng, 4, 6, 9);
    let coeffs = [Poly::zero(), Poly::zero(), c, Poly::zero(), Poly::zero()];
    let phi = base.augment(&coeffs)?;
    let pres = AlternatingPresentation::new(phi, [0, 1, 5], vec![2, 2, 2, 2, 2, 8, -3])?;
    let cx = build_aci_complex(&pres)?;
    let report = verify_complex(&cx);
    let complex_twists = [
        cx.modules[1].multiset(),
        cx.modules[2].multiset(),
        cx.modules[3].multiset(),
    ];

    let first = &cx.maps[2];
    let mut unit_entry_twist = None;
    for ((row, col), v) in first.entries() {
        if v.homogeneity() == Homogeneity::Degree(0) {
            let (a, b) = (cx.modules[2].twists[row], cx.modules[3].twists[col]);
            if a == b {
                unit_entry_twist = Some(a);
            }
        }
    }

    let paper = [
        IntMultiset::from([2, 2, 7, 8]),
        IntMultiset::from([4, 9, 9, 9, 9, 9, 15]),
        IntMultiset::from([10, 10, 10, 15]),
    ];
    let matches_paper = link.d0 == 7
        && link.d == 19
        && link.resolution == paper
        && complex_twists == paper
        && link.cancelled == IntMultiset::singleton(15)
        && unit_entry_twist == Some(15)
        && report.all_ok();
    Ok(Example228Report {
        link,
        complex: report,
        complex_twists,
        unit_entry_twist,
        matches_paper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(5)
    }

    fn generic(degrees: &[i64], g: [usize; 3]) -> AlternatingPresentation {
        let m = random_graded_alternating(&mut rng(), degrees, 3).unwrap();
        AlternatingPresentation::new(m, g, degrees.to_vec()).unwrap()
    }

    #[test]
    fn generic_linear_five() {
        let pres = generic(&[2; 5], [0, 1, 2]);
        let cx = build_aci_complex(&pres).unwrap();
        let report = verify_complex(&cx);
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(report.ranks, vec![1, 4, 5, 2]);
        let bl = pres.blocks().unwrap();
        assert_eq!(bl.p, pres.matrix.get(3, 4).clone());
    }

    #[test]
    fn generic_linear_seven() {
        let pres = generic(&[3; 7], [0, 1, 2]);
        let report = verify_complex(&build_aci_complex(&pres).unwrap());
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(report.ranks, vec![1, 4, 7, 4]);
    }

    #[test]
    fn lifting_identity() {
        for (degrees, g) in [
            (vec![2; 5], [0, 1, 2]),
            (vec![2; 5], [4, 1, 3]),
            (vec![3; 7], [2, 5, 6]),
            (vec![1, 1, 2, 2, 2], [0, 3, 4]),
        ] {
            let bl = generic(&degrees, g).blocks().unwrap();
            assert_eq!(bl.lifted_psi().unwrap(), *bl.psi().matrix());
            assert_eq!(bl.psi().submaximal_pfaffians().unwrap(), bl.pf_psi);
        }
    }

    #[test]
    fn colon_certificates_hold() {
        let bl = generic(&[3; 7], [1, 3, 5]).blocks().unwrap();
        for (k, c) in bl.colon_certificates().unwrap().iter().enumerate() {
            let lhs: Poly = c.iter().zip(&bl.pf_psi).map(|(a, b)| a * b).sum();
            assert_eq!(lhs, &bl.p * &bl.sigma[k]);
        }
    }

    #[test]
    fn injected_faults_are_located() {
        let pres = generic(&[2; 5], [0, 1, 2]);
        let mut cx = build_aci_complex(&pres).unwrap();
        let bumped = cx.maps[1].get(0, 3) + &Poly::var(0);
        cx.maps[1].set(0, 3, bumped);
        let report = verify_complex(&cx);
        assert!(!report.compositions[0].zero);
        assert!(!report.compositions[1].zero);
        assert!(report.homogeneity.iter().all(|h| h.homogeneous));

        let mut cx = build_aci_complex(&pres).unwrap();
        cx.modules[3].twists[0] += 1;
        let report = verify_complex(&cx);
        assert!(report.compositions.iter().all(|c| c.zero));
        let h = &report.homogeneity[2];
        assert!(!h.homogeneous);
        assert_eq!(h.witness.as_ref().unwrap().col, 0);
    }

    #[test]
    fn augmented_complete_intersection() {
        let ci = AlternatingMatrix::from_upper(3, |i, j| Poly::var(i + j - 1));
        let phi = ci
            .augment(&[Poly::var(0), Poly::zero(), Poly::zero()])
            .unwrap();
        let pres = AlternatingPresentation::new(phi, [0, 1, 2], vec![1, 1, 1, 2, 1]).unwrap();
        let bl = pres.blocks().unwrap();
        assert!(bl.sigma.iter().any(Poly::is_zero));
        assert!(verify_complex(&build_aci_complex(&pres).unwrap()).all_ok());
    }

    #[test]
    fn corollary_generators() {
        let pres = generic(&[2; 5], [0, 1, 2]);
        let gens = corollary_gen_generators(&pres.matrix, [0, 1, 2]).unwrap();
        assert_eq!(gens.len(), 4);
        for q in &gens[..3] {
            assert_eq!(q.homogeneity(), Homogeneity::Degree(2));
        }
        assert_eq!(gens[3], pres.matrix.get(3, 4).clone());
        let mut zeroed = pres.matrix.matrix().clone();
        zeroed.set(3, 4, Poly::zero());
        zeroed.set(4, 3, Poly::zero());
        let zeroed = AlternatingMatrix::new(zeroed).unwrap();
        assert!(corollary_gen_generators(&zeroed, [0, 1, 2]).unwrap()[3].is_zero());
        assert!(corollary_gen_generators(&zeroed, [0, 1, 1]).is_err());
        assert!(corollary_gen_generators(&AlternatingMatrix::zero(3), [0, 1, 2]).is_err());
    }

    #[test]
    fn grading_is_enforced() {
        let m = random_graded_alternating(&mut rng(), &[2; 5], 3).unwrap();
        assert!(matches!(
            AlternatingPresentation::new(m.clone(), [0, 1, 2], vec![2, 2, 2, 2, 3]),
            Err(StructureError::NonIntegralSocle { .. })
        ));
        assert!(matches!(
            AlternatingPresentation::new(m.clone(), [0, 1, 2], vec![1, 2, 2, 2, 3]),
            Err(StructureError::Grading { .. })
        ));
        assert!(matches!(
            AlternatingPresentation::new(m, [0, 0, 2], vec![2; 5]),
            Err(StructureError::BadSlots { .. })
        ));
    }

    #[test]
    fn example_228() {
        let report = reproduce_example_228(&mut rng()).unwrap();
        assert!(report.complex.all_ok(), "{:?}", report.complex);
        assert_eq!(report.unit_entry_twist, Some(15));
        assert!(report.matches_paper);
    }
}
