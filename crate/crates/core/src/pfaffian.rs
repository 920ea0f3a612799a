//! Pfaffian algebra of alternating matrices over `Q[x1, x2, ...]`.
//!
//! Sign conventions are fixed by contract rather than by a literal cofactor
//! formula:
//!
//! * the submaximal pfaffian vector `p` of an odd matrix `M` satisfies
//!   `M·p = 0`, which gives `p_i = (-1)^(i+1) pf(M_î)` with 1-based `i`;
//! * the pfaffian adjoint `M̄` of an even matrix satisfies
//!   `M̄·M = M·M̄ = pf(M)·I`, which gives
//!   `M̄_ij = -(-1)^<i,j> pf(M_îĵ)`.
//!
//! Indices in this API are zero-based.

use std::collections::HashMap;

use num::{BigInt, BigRational};
use thiserror::Error;

use crate::exact::{MatrixError, Poly, PolyMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PfaffianError {
    #[error("odd-size pfaffian undefined (size {0})")]
    OddSize(usize),
    #[error("submaximal pfaffians need an odd size, got {0}")]
    EvenSize(usize),
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix is not alternating at ({row},{col})")]
    NotAlternating { row: usize, col: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("index {0} listed twice")]
    DuplicateIndex(usize),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrices of size {0} exceed the 63-row limit of the expansion")]
    TooLarge(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Square matrix with zero diagonal and `a_ji = -a_ij`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlternatingMatrix {
    inner: PolyMatrix,
}

impl std::fmt::Debug for AlternatingMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Alternating{:?}", self.inner)
    }
}

/// `<i,j>` for zero-based positions; only its parity matters.
fn bracket(i: usize, j: usize) -> usize {
    // 1-based: i+j+1 if i<j, i+j if i>j. Shifting both by one keeps parity.
    if i < j {
        i + j + 1
    } else {
        i + j
    }
}

fn signed(p: Poly, odd: bool) -> Poly {
    if odd {
        -p
    } else {
        p
    }
}

impl AlternatingMatrix {
    pub fn new(m: PolyMatrix) -> Result<Self, PfaffianError> {
        if !m.is_square() {
            return Err(PfaffianError::NotSquare(m.rows(), m.cols()));
        }
        let n = m.rows();
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(PfaffianError::NotAlternating { row: i, col: i });
            }
            for j in i + 1..n {
                if m.get(j, i) != &-m.get(i, j) {
                    return Err(PfaffianError::NotAlternating { row: j, col: i });
                }
            }
        }
        Ok(Self { inner: m })
    }

    /// Builds the alternating matrix whose strictly upper entries are
    /// `upper(i, j)` for `i < j`.
    pub fn from_upper(size: usize, mut upper: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut m = PolyMatrix::zeros(size, size);
        for i in 0..size {
            for j in i + 1..size {
                let a = upper(i, j);
                m.set(j, i, -&a);
                m.set(i, j, a);
            }
        }
        Self { inner: m }
    }

    pub fn zero(size: usize) -> Self {
        Self {
            inner: PolyMatrix::zeros(size, size),
        }
    }

    pub fn size(&self) -> usize {
        self.inner.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        self.inner.get(i, j)
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.inner
    }

    fn check_indices(&self, idx: &[usize]) -> Result<(), PfaffianError> {
        let n = self.size();
        let mut seen = vec![false; n];
        for &i in idx {
            if i >= n {
                return Err(PfaffianError::IndexOutOfRange { index: i, size: n });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(PfaffianError::DuplicateIndex(i));
            }
        }
        Ok(())
    }

    /// Deletes the listed rows together with the same columns.
    pub fn delete_rows_cols(&self, idx: &[usize]) -> Result<Self, PfaffianError> {
        self.check_indices(idx)?;
        let keep: Vec<usize> = (0..self.size()).filter(|i| !idx.contains(i)).collect();
        Ok(self.principal(&keep))
    }

    /// Principal submatrix on `keep` (in the given order). Any reordering of
    /// a principal submatrix is again alternating.
    pub fn principal(&self, keep: &[usize]) -> Self {
        Self {
            inner: self.inner.select(keep, keep),
        }
    }

    pub fn pfaffian(&self) -> Result<Poly, PfaffianError> {
        let n = self.size();
        if n % 2 == 1 {
            return Err(PfaffianError::OddSize(n));
        }
        if n >= 64 {
            return Err(PfaffianError::TooLarge(n));
        }
        let mut ctx = Expansion::new(self);
        Ok(ctx.pf(ctx.full()))
    }

    /// Reference pfaffian: signed sum over all perfect matchings. Shares no
    /// code with [`AlternatingMatrix::pfaffian`].
    pub fn pfaffian_by_matchings(&self) -> Result<Poly, PfaffianError> {
        let n = self.size();
        if n % 2 == 1 {
            return Err(PfaffianError::OddSize(n));
        }
        let mut total = Poly::zero();
        let mut used = vec![false; n];
        let mut seq = Vec::with_capacity(n);
        self.matchings(&mut used, &mut seq, &mut total);
        Ok(total)
    }

    fn matchings(&self, used: &mut [bool], seq: &mut Vec<usize>, total: &mut Poly) {
        let Some(i) = used.iter().position(|u| !u) else {
            // sign of the permutation (i1 j1 i2 j2 ...) by inversion count
            let inversions = (0..seq.len())
                .flat_map(|a| (a + 1..seq.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| seq[a] > seq[b])
                .count();
            let mut prod = Poly::one();
            for pair in seq.chunks(2) {
                prod = &prod * self.get(pair[0], pair[1]);
                if prod.is_zero() {
                    return;
                }
            }
            if inversions % 2 == 0 {
                *total += &prod;
            } else {
                *total -= &prod;
            }
            return;
        };
        used[i] = true;
        for j in i + 1..used.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            seq.push(i);
            seq.push(j);
            self.matchings(used, seq, total);
            seq.truncate(seq.len() - 2);
            used[j] = false;
        }
        used[i] = false;
    }

    /// Signed submaximal pfaffians `p` with `M·p = 0`.
    pub fn submaximal_pfaffians(&self) -> Result<Vec<Poly>, PfaffianError> {
        let n = self.size();
        if n % 2 == 0 {
            return Err(PfaffianError::EvenSize(n));
        }
        if n >= 64 {
            return Err(PfaffianError::TooLarge(n));
        }
        let mut ctx = Expansion::new(self);
        let full = ctx.full();
        Ok((0..n)
            .map(|i| signed(ctx.pf(full & !(1 << i)), i % 2 == 1))
            .collect())
    }

    /// Pfaffian adjoint `M̄` with `M̄·M = M·M̄ = pf(M)·I`.
    pub fn adjoint(&self) -> Result<Self, PfaffianError> {
        let n = self.size();
        if n % 2 == 1 {
            return Err(PfaffianError::OddSize(n));
        }
        if n >= 64 {
            return Err(PfaffianError::TooLarge(n));
        }
        let mut ctx = Expansion::new(self);
        let full = ctx.full();
        Ok(Self::from_upper(n, |i, j| {
            let minor = ctx.pf(full & !(1 << i) & !(1 << j));
            signed(minor, bracket(i, j) % 2 == 0)
        }))
    }

    /// Bordered matrix of size `m+2` whose submaximal pfaffians are
    /// `-(p_1, ..., p_m, Σ a_i p_i, 0)`:
    ///
    /// ```text
    ///   [  M    0   a ]
    ///   [  0    0  -1 ]
    ///   [ -a^t  1   0 ]
    /// ```
    pub fn augment(&self, coeffs: &[Poly]) -> Result<Self, PfaffianError> {
        let m = self.size();
        if m % 2 == 0 {
            return Err(PfaffianError::EvenSize(m));
        }
        if coeffs.len() != m {
            return Err(PfaffianError::LengthMismatch {
                expected: m,
                got: coeffs.len(),
            });
        }
        Ok(Self::from_upper(m + 2, |i, j| {
            if j < m {
                self.get(i, j).clone()
            } else if j == m {
                Poly::zero()
            } else if i < m {
                coeffs[i].clone()
            } else {
                Poly::from_int(-1)
            }
        }))
    }

    /// `A·M·Aᵗ`. Its submaximal pfaffian vector is `p·adj(A)`.
    pub fn congruence(&self, a: &PolyMatrix) -> Result<Self, PfaffianError> {
        if !a.is_square() {
            return Err(PfaffianError::NotSquare(a.rows(), a.cols()));
        }
        let prod = a.mat_mul(&self.inner)?.mat_mul(&a.transpose())?;
        Ok(Self { inner: prod })
    }

    /// Conjugation by `diag(d)` with `d_i = ±1`.
    fn diagonal_congruence(&self, d: &[i8]) -> Self {
        Self::from_upper(self.size(), |i, j| {
            let p = self.get(i, j).clone();
            if d[i] * d[j] < 0 {
                -p
            } else {
                p
            }
        })
    }
}

/// Memoized expansion along formula (1), always expanding on the row with
/// the fewest nonzero entries inside the current index set.
struct Expansion<'a> {
    m: &'a AlternatingMatrix,
    memo: HashMap<u64, Poly>,
}

impl<'a> Expansion<'a> {
    fn new(m: &'a AlternatingMatrix) -> Self {
        Self {
            m,
            memo: HashMap::new(),
        }
    }

    fn full(&self) -> u64 {
        let n = self.m.size();
        if n == 0 {
            0
        } else {
            (1u64 << n) - 1
        }
    }

    fn pf(&mut self, set: u64) -> Poly {
        if set == 0 {
            return Poly::one();
        }
        if set.count_ones() % 2 == 1 {
            return Poly::zero();
        }
        if let Some(p) = self.memo.get(&set) {
            return p.clone();
        }
        let members: Vec<usize> = (0..64).filter(|&k| set & (1 << k) != 0).collect();
        let nonzeros = |r: usize| {
            members
                .iter()
                .filter(|&&c| !self.m.get(r, c).is_zero())
                .count()
        };
        let (pos_i, row) = members
            .iter()
            .copied()
            .enumerate()
            .min_by_key(|&(_, r)| nonzeros(r))
            .expect("nonempty set");
        let mut acc = Poly::zero();
        for (pos_j, &col) in members.iter().enumerate() {
            let a = self.m.get(row, col);
            if pos_j == pos_i || a.is_zero() {
                continue;
            }
            let minor = self.pf(set & !(1 << row) & !(1 << col));
            if minor.is_zero() {
                continue;
            }
            let term = a * &minor;
            if bracket(pos_i, pos_j) % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        self.memo.insert(set, acc.clone());
        acc
    }
}

/// `a·pf(C) + pf(B·C̄·Bᵗ)`, the pfaffian of
///
/// ```text
///   [  0   a |  B ]
///   [ -a   0 |    ]
///   [ -Bᵗ    |  C ]
/// ```
pub fn block_pfaffian(
    a: &Poly,
    b: &PolyMatrix,
    c: &AlternatingMatrix,
) -> Result<Poly, PfaffianError> {
    if b.rows() != 2 || b.cols() != c.size() {
        return Err(MatrixError::DimensionMismatch {
            op: "block_pfaffian",
            left: b.shape(),
            right: (2, c.size()),
        }
        .into());
    }
    let pf_c = c.pfaffian()?;
    let inner = b.mat_mul(c.adjoint()?.matrix())?.mat_mul(&b.transpose())?;
    let inner = AlternatingMatrix::new(inner)?;
    Ok(&(a * &pf_c) + &inner.pfaffian()?)
}

/// Assembles the block matrix used by [`block_pfaffian`].
pub fn assemble_block(
    a: &Poly,
    b: &PolyMatrix,
    c: &AlternatingMatrix,
) -> Result<AlternatingMatrix, PfaffianError> {
    let k = c.size();
    if b.rows() != 2 || b.cols() != k {
        return Err(MatrixError::DimensionMismatch {
            op: "assemble_block",
            left: b.shape(),
            right: (2, k),
        }
        .into());
    }
    Ok(AlternatingMatrix::from_upper(k + 2, |i, j| match (i, j) {
        (0, 1) => a.clone(),
        (i, j) if i < 2 => b.get(i, j - 2).clone(),
        (i, j) => c.get(i - 2, j - 2).clone(),
    }))
}

/// Result of embedding three ideal elements as submaximal pfaffians.
#[derive(Clone, Debug)]
pub struct ThreeGeneratorEmbedding {
    /// Alternating matrix of size `n + 6`.
    pub matrix: AlternatingMatrix,
    /// Slots whose submaximal pfaffians are exactly `p1, p2, p3`.
    pub generator_slots: [usize; 3],
    /// Slots carrying the zero pfaffian.
    pub zero_slots: [usize; 3],
}

/// Given `psi` of odd size `n` with submaximal pfaffians `q_1..q_n` and three
/// coefficient vectors `c_k`, builds a matrix of size `n+6` whose submaximal
/// pfaffian vector is exactly `(q_1, ..., q_n, p1, 0, p2, 0, p3, 0)` with
/// `p_k = Σ_i c_k[i] q_i`.
pub fn three_generator_embedding(
    psi: &AlternatingMatrix,
    coeffs: [&[Poly]; 3],
) -> Result<ThreeGeneratorEmbedding, PfaffianError> {
    let n = psi.size();
    if n % 2 == 0 {
        return Err(PfaffianError::EvenSize(n));
    }
    // signs[i]: current pfaffian i equals signs[i] times its target; 0 marks
    // a zero slot whose sign is free.
    let mut signs: Vec<i8> = vec![1; n];
    let mut current = psi.clone();
    for c in coeffs {
        if c.len() != n {
            return Err(PfaffianError::LengthMismatch {
                expected: n,
                got: c.len(),
            });
        }
        let basis_sign = signs[0];
        let mut a: Vec<Poly> = c
            .iter()
            .map(|p| if basis_sign < 0 { -p } else { p.clone() })
            .collect();
        a.resize(current.size(), Poly::zero());
        current = current.augment(&a)?;
        // augment negates the whole vector and appends (p, 0)
        for s in signs.iter_mut() {
            *s = -*s;
        }
        signs.push(-1);
        signs.push(0);
    }
    let mut product: i8 = signs.iter().filter(|&&s| s != 0).product();
    let d: Vec<i8> = signs
        .iter()
        .map(|&s| match s {
            0 if product < 0 => {
                product = 1;
                -1
            }
            0 => 1,
            s => s,
        })
        .collect();
    Ok(ThreeGeneratorEmbedding {
        matrix: current.diagonal_congruence(&d),
        generator_slots: [n, n + 2, n + 4],
        zero_slots: [n + 1, n + 3, n + 5],
    })
}

/// Integer matrix helper for constant congruence matrices.
pub fn integer_matrix(rows: &[Vec<i64>]) -> PolyMatrix {
    PolyMatrix::from_fn(rows.len(), rows.first().map_or(0, Vec::len), |i, j| {
        Poly::constant(BigRational::from_integer(BigInt::from(rows[i][j])))
    })
}
