//! Square matrices over `Z[t, 1/t]`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} x {left} vs {right} x {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("determinant {0} is not a unit of Z[t, 1/t]")]
    NonUnitDeterminant(LaurentPoly),
    #[error("rows do not form a square matrix")]
    NotSquare,
}

/// Up to this size determinants use cofactor expansion; above it, Bareiss
/// elimination with exact division.
const COFACTOR_LIMIT: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LPMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LPMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.n + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> + '_ {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn det(&self) -> LaurentPoly {
        if self.n <= COFACTOR_LIMIT {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> LaurentPoly {
        let cols: Vec<usize> = (0..self.n).collect();
        self.cofactor_rec(0, &cols)
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        match cols.len() {
            0 => LaurentPoly::one(),
            1 => self.get(row, cols[0]).clone(),
            _ => {
                let mut acc = LaurentPoly::zero();
                for (pos, &c) in cols.iter().enumerate() {
                    let entry = self.get(row, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = self.cofactor_rec(row + 1, &rest);
                    let term = entry * &minor;
                    if pos % 2 == 0 {
                        acc += &term;
                    } else {
                        acc += &(-term);
                    }
                }
                acc
            }
        }
    }

    /// Fraction-free Gaussian elimination. Every division is exact in the
    /// integral domain `Z[t, 1/t]`.
    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a: Vec<Vec<LaurentPoly>> = self.rows().map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Minor with `row` and `col` deleted.
    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let entries = (0..n)
            .filter(|&i| i != row)
            .flat_map(|i| {
                (0..n)
                    .filter(move |&j| j != col)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        Self { n: n - 1, entries }
    }

    pub fn adjugate(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        if n == 1 {
            out.entries[0] = LaurentPoly::one();
            return out;
        }
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det();
                out.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        out
    }

    /// Inverse of a matrix whose determinant is a unit `±t^k`.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let d = self.det();
        let inv = d
            .unit_inverse()
            .ok_or_else(|| MatrixError::NonUnitDeterminant(d.clone()))?;
        Ok(self.adjugate().scale(&inv))
    }

    /// `A` in the top-left block, `B` in the bottom-right, zeros elsewhere.
    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut out = Self::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out.set(self.n + i, self.n + j, other.get(i, j).clone());
            }
        }
        out
    }
}

impl fmt::Debug for LPMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LPMatrix{self}")
    }
}

/// One bracketed row per line.
impl fmt::Display for LPMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl Serialize for LPMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n,
            entries: self.rows().map(|r| r.to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LPMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.entries.len() != raw.n {
            return Err(serde::de::Error::custom("row count differs from n"));
        }
        LPMatrix::from_rows(raw.entries).map_err(serde::de::Error::custom)
    }
}
