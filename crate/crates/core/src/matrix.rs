use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Cell, Multiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Generic,
    UpperTriangular,
    StrictlyUpperTriangular,
}

/// Matrix of nonnegative integers with 1-indexed accessors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NatMatrix {
    rows: usize,
    cols: usize,
    kind: MatrixKind,
    entries: Vec<u64>,
}

impl NatMatrix {
    pub fn zeros(rows: usize, cols: usize, kind: MatrixKind) -> Self {
        NatMatrix { rows, cols, kind, entries: vec![0; rows * cols] }
    }

    pub fn from_rows(data: Vec<Vec<u64>>, kind: MatrixKind) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::domain("ragged matrix rows"));
        }
        let m = NatMatrix { rows, cols, kind, entries: data.concat() };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.kind == MatrixKind::Generic {
            return Ok(());
        }
        if self.rows != self.cols {
            return Err(Error::domain("triangular matrix must be square"));
        }
        let strict = self.kind == MatrixKind::StrictlyUpperTriangular;
        for ((i, j), _) in self.nonzero() {
            if i > j || (strict && i == j) {
                return Err(Error::domain(format!("entry at ({i},{j}) violates {:?}", self.kind)));
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: MatrixKind) -> Result<Self> {
        self.kind = kind;
        self.validate()?;
        Ok(self)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols, "index ({i},{j}) out of range");
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols, "index ({i},{j}) out of range");
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn trace(&self) -> u64 {
        (1..=self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Cell, u64)> + '_ {
        self.entries.iter().enumerate().filter(|(_, &v)| v > 0).map(move |(idx, &v)| {
            ((idx / self.cols + 1, idx % self.cols + 1), v)
        })
    }

    pub fn support(&self) -> Vec<Cell> {
        self.nonzero().map(|(c, _)| c).collect()
    }

    pub fn multiset(&self) -> Multiset {
        self.nonzero().collect()
    }

    pub fn from_multiset(rows: usize, cols: usize, kind: MatrixKind, ms: &Multiset) -> Result<Self> {
        let mut m = NatMatrix::zeros(rows, cols, kind);
        for (&(i, j), &v) in ms {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::domain(format!("cell ({i},{j}) outside {rows}x{cols}")));
            }
            m.add(i, j, v);
        }
        m.validate()?;
        Ok(m)
    }

    pub fn transpose(&self) -> NatMatrix {
        let mut t = NatMatrix::zeros(self.cols, self.rows, MatrixKind::Generic);
        for ((i, j), v) in self.nonzero() {
            t.set(j, i, v);
        }
        t
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[u64]>::to_vec).collect()
    }
}

/// Visits every matrix of the given shape and kind with entry sum at most `max_sum`.
pub fn for_each_matrix(rows: usize, cols: usize, kind: MatrixKind, max_sum: u64, mut visit: impl FnMut(&NatMatrix)) {
    let cells: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|i| (1..=cols).map(move |j| (i, j)))
        .filter(|&(i, j)| match kind {
            MatrixKind::Generic => true,
            MatrixKind::UpperTriangular => i <= j,
            MatrixKind::StrictlyUpperTriangular => i < j,
        })
        .collect();
    let mut m = NatMatrix::zeros(rows, cols, kind);
    fn rec(idx: usize, left: u64, cells: &[(usize, usize)], m: &mut NatMatrix, visit: &mut dyn FnMut(&NatMatrix)) {
        if idx == cells.len() {
            visit(m);
            return;
        }
        let (i, j) = cells[idx];
        for v in 0..=left {
            m.set(i, j, v);
            rec(idx + 1, left - v, cells, m, visit);
        }
        m.set(i, j, 0);
    }
    rec(0, max_sum, &cells, &mut m, &mut visit);
}

impl fmt::Display for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_are_enforced() {
        assert!(NatMatrix::from_rows(vec![vec![1, 1], vec![0, 1]], MatrixKind::UpperTriangular).is_ok());
        assert!(NatMatrix::from_rows(vec![vec![1, 1], vec![0, 1]], MatrixKind::StrictlyUpperTriangular).is_err());
        assert!(NatMatrix::from_rows(vec![vec![0, 0], vec![1, 0]], MatrixKind::UpperTriangular).is_err());
    }

    #[test]
    fn matrix_enumeration_counts() {
        let mut count = 0;
        for_each_matrix(2, 2, MatrixKind::Generic, 3, |_| count += 1);
        // C(3 + 4, 4)
        assert_eq!(count, 35);
        let mut count = 0;
        for_each_matrix(3, 3, MatrixKind::StrictlyUpperTriangular, 2, |m| {
            assert!(m.validate().is_ok());
            count += 1
        });
        assert_eq!(count, 10);
    }

    #[test]
    fn transpose_and_support() {
        let m = NatMatrix::from_rows(vec![vec![0, 2, 0], vec![1, 0, 3]], MatrixKind::Generic).unwrap();
        assert_eq!(m.support(), vec![(1, 2), (2, 1), (2, 3)]);
        assert_eq!(m.transpose().get(3, 2), 3);
        assert_eq!(m.sum(), 6);
    }
}
