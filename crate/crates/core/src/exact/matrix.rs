use std::collections::HashMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num::BigRational;
use serde_json::Value;
use thiserror::Error;

use super::parse::{parse_poly, ParseError};
use super::poly::Poly;
use super::vars::VarNames;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("ragged matrix: row {row} has {got} entries, expected {expected}")]
    Ragged {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("matrix JSON must be an array of arrays of strings or integers")]
    BadJson,
    #[error("entry ({row},{col}): {source}")]
    Entry {
        row: usize,
        col: usize,
        source: ParseError,
    },
}

/// Dense row-major matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::Ragged {
                    row: i,
                    got: row.len(),
                    expected: c,
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Poly::from_int(v)).collect())
                .collect(),
        )
    }

    /// Column vector.
    pub fn column(entries: Vec<Poly>) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    /// Row vector.
    pub fn row(entries: Vec<Poly>) -> Self {
        Self {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.data[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Poly)> {
        let c = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, p)| ((k / c, k % c), p))
    }

    pub fn row_vec(&self, i: usize) -> Vec<Poly> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| -p).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.add(&other.neg()).map_err(|e| match e {
            MatrixError::DimensionMismatch { left, right, .. } => MatrixError::DimensionMismatch {
                op: "sub",
                left,
                right,
            },
            e => e,
        })
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    /// Submatrix keeping the listed rows and columns, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Determinant by Laplace expansion along successive rows, memoized on
    /// the set of remaining columns. Exact for symbolic entries.
    pub fn determinant(&self) -> Result<Poly, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        assert!(self.rows < 64, "determinant supports at most 63 rows");
        let full: u64 = if self.rows == 0 {
            0
        } else {
            (1u64 << self.rows) - 1
        };
        let mut memo = HashMap::new();
        Ok(self.det_minor(full, &mut memo))
    }

    fn det_minor(&self, cols: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
        if cols == 0 {
            return Poly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = self.rows - cols.count_ones() as usize;
        let mut acc = Poly::zero();
        let mut pos = 0;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let a = self.get(row, j);
            if !a.is_zero() {
                let minor = self.det_minor(cols & !(1 << j), memo);
                let term = a * &minor;
                if pos % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            pos += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Classical adjugate: `adj(A)·A = A·adj(A) = det(A)·I`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let rs: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cs: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.select(&rs, &cs).determinant()?;
                out.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
            }
        }
        Ok(out)
    }

    /// Parses the JSON array-of-arrays form. Cells are strings in infix
    /// notation or integers.
    pub fn from_json(value: &Value, names: &mut VarNames) -> Result<Self, MatrixError> {
        let rows = value.as_array().ok_or(MatrixError::BadJson)?;
        let mut out = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let cells = row.as_array().ok_or(MatrixError::BadJson)?;
            let mut parsed = Vec::with_capacity(cells.len());
            for (j, cell) in cells.iter().enumerate() {
                let p = match cell {
                    Value::String(s) => {
                        parse_poly(s, names).map_err(|source| MatrixError::Entry {
                            row: i,
                            col: j,
                            source,
                        })?
                    }
                    Value::Number(n) => Poly::from_int(n.as_i64().ok_or(MatrixError::BadJson)?),
                    _ => return Err(MatrixError::BadJson),
                };
                parsed.push(p);
            }
            out.push(parsed);
        }
        Self::from_rows(out)
    }

    pub fn to_json(&self, names: &VarNames) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        (0..self.cols)
                            .map(|j| Value::String(self.get(i, j).display(names).to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        self.get(i, j)
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sym(names: &mut VarNames, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_poly(s, names).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_2x2_symbolic() {
        let mut names = VarNames::default();
        let m = sym(&mut names, &[&["a", "b"], &["c", "d"]]);
        let det = m.determinant().unwrap();
        assert_eq!(det.display(&names).to_string(), "a*d - b*c");
    }

    #[test]
    fn det_known_integer() {
        let m = PolyMatrix::from_ints(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(m.determinant().unwrap().is_zero());
        let m = PolyMatrix::from_ints(&[vec![4, 3], vec![6, 3]]).unwrap();
        assert_eq!(m.determinant().unwrap(), Poly::from_int(-6));
        assert_eq!(PolyMatrix::zeros(0, 0).determinant().unwrap(), Poly::one());
    }

    #[test]
    fn adjugate_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = PolyMatrix::from_fn(4, 4, |_, _| Poly::from_int(rng.gen_range(-3..=3)));
            let det = a.determinant().unwrap();
            let adj = a.adjugate().unwrap();
            let expect = PolyMatrix::identity(4).scale(&det);
            assert_eq!(adj.mat_mul(&a).unwrap(), expect);
            assert_eq!(a.mat_mul(&adj).unwrap(), expect);
        }
    }

    #[test]
    fn transpose_involution_and_mismatch() {
        let mut names = VarNames::standard(3);
        let m = sym(&mut names, &[&["x1", "x2", "0"], &["1", "x3^2", "x1*x2"]]);
        assert_eq!(m.transpose().transpose(), m);
        assert!(matches!(
            m.mat_mul(&m),
            Err(MatrixError::DimensionMismatch { op: "mat_mul", .. })
        ));
        assert!(m.add(&m.transpose()).is_err());
        assert_eq!(m.determinant(), Err(MatrixError::NotSquare(2, 3)));
    }

    #[test]
    fn mat_mul_associative_on_symbolic_3x3() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut rand_lin = || {
            PolyMatrix::from_fn(3, 3, |_, _| {
                (0..3)
                    .map(|v| Poly::var(v).scale_int(rng.gen_range(-2..=2)))
                    .sum::<Poly>()
            })
        };
        let (a, b, c) = (rand_lin(), rand_lin(), rand_lin());
        let left = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
        let right = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn json_roundtrip() {
        let mut names = VarNames::standard(3);
        let v: Value = serde_json::from_str(r#"[[0, "a"], ["-a", 0]]"#).unwrap();
        let m = PolyMatrix::from_json(&v, &mut names).unwrap();
        assert_eq!(m.get(0, 1), &-m.get(1, 0));
        assert_eq!(m.to_json(&names).to_string(), r#"[["0","a"],["-a","0"]]"#);
        let bad: Value = serde_json::from_str(r#"[[0, "a +"]]"#).unwrap();
        assert!(matches!(
            PolyMatrix::from_json(&bad, &mut names),
            Err(MatrixError::Entry { row: 0, col: 1, .. })
        ));
        let ragged: Value = serde_json::from_str(r#"[[0, 1], [2]]"#).unwrap();
        assert!(matches!(
            PolyMatrix::from_json(&ragged, &mut names),
            Err(MatrixError::Ragged { .. })
        ));
    }
}
