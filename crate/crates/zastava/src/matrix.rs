//! Integer matrices with unbounded entries, row-major storage.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries; the entry count must match.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::from_entries(rows, cols, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn matmul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// Row operation `R_i += t·R_j`.
    pub fn add_row_multiple(&mut self, i: usize, j: usize, t: &BigInt) {
        for c in 0..self.cols {
            let delta = t * &self[(j, c)];
            self[(i, c)] += delta;
        }
    }

    /// Column operation `C_i += t·C_j`.
    pub fn add_col_multiple(&mut self, i: usize, j: usize, t: &BigInt) {
        for r in 0..self.rows {
            let delta = t * &self[(r, j)];
            self[(r, i)] += delta;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self[(i, c)].clone();
            self[(i, c)] = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self[(r, j)].clone();
            self[(r, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

// Matrices travel as arrays of rows; entries are decimal strings or JSON
// integers (accepted on input, strings on output so magnitude never clips).
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireEntry {
    Int(i64),
    Str(String),
}

impl WireEntry {
    fn into_bigint<E: serde::de::Error>(self) -> std::result::Result<BigInt, E> {
        match self {
            WireEntry::Int(n) => Ok(BigInt::from(n)),
            WireEntry::Str(s) => s
                .parse()
                .map_err(|_| E::custom(format!("invalid integer entry `{s}`"))),
        }
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<WireEntry>>::deserialize(deserializer)?;
        let mut converted = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                out.push(e.into_bigint::<D::Error>()?);
            }
            converted.push(out);
        }
        IntMatrix::from_rows(converted).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_checked() {
        assert!(IntMatrix::from_ints(2, 2, &[1, 2, 3]).is_err());
        assert!(IntMatrix::from_ints(2, 2, &[1, 2, 3, 4]).is_ok());
    }

    #[test]
    fn matmul_identity() {
        let a = IntMatrix::from_ints(2, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        let prod = IntMatrix::identity(2).matmul(&a).unwrap();
        assert_eq!(prod, a);
        assert!(a.matmul(&IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn row_col_ops() {
        let mut a = IntMatrix::from_ints(2, 2, &[1, 2, 3, 4]).unwrap();
        a.add_row_multiple(0, 1, &BigInt::from(2));
        assert_eq!(a, IntMatrix::from_ints(2, 2, &[7, 10, 3, 4]).unwrap());
        a.swap_cols(0, 1);
        assert_eq!(a, IntMatrix::from_ints(2, 2, &[10, 7, 4, 3]).unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let a = IntMatrix::from_ints(2, 2, &[1, -2, 0, 7]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[["1","-2"],["0","7"]]"#);
        let back: IntMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        let from_numbers: IntMatrix = serde_json::from_str("[[1,-2],[0,7]]").unwrap();
        assert_eq!(from_numbers, a);
    }
}
