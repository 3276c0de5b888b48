use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros. Fails if not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Membership in Par(a × b): at most `a` rows and at most `b` columns.
    pub fn fits_in(&self, a: usize, b: usize) -> bool {
        self.length() <= a && self.part(0) <= b
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&r| r > j).count())
            .collect();
        Partition { parts }
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    pub fn all_rows_even(&self) -> bool {
        self.parts.iter().all(|r| r % 2 == 0)
    }

    pub fn all_columns_even(&self) -> bool {
        self.column_lengths().iter().all(|c| c % 2 == 0)
    }

    /// Adds `m` to each of the first `k` parts (padding with zeros).
    pub fn add_rectangle(&self, k: usize, m: usize) -> Partition {
        let len = self.length().max(k);
        let parts = (0..len)
            .map(|i| self.part(i) + if i < k { m } else { 0 })
            .collect();
        Partition::new(parts).expect("adding a rectangle keeps parts decreasing")
    }

    /// All partitions fitting in `rows` × `cols`, in lexicographic order of parts.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if cur.len() == rows {
                return;
            }
            for part in 1..=max {
                cur.push(part);
                rec(rows, part, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of `n`.
    pub fn of_size(n: usize) -> Vec<Partition> {
        Partition::in_box(n, n).into_iter().filter(|p| p.size() == n).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
