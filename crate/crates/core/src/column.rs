use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly increasing subsequence of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Column {
    entries: Vec<usize>,
}

impl Column {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.first() == Some(&0) {
            return Err(Error::domain("column entries start at 1"));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!("column {entries:?} is not strictly increasing")));
        }
        Ok(Column { entries })
    }

    /// The column (1, 2, ..., k).
    pub fn initial(k: usize) -> Self {
        Column { entries: (1..=k).collect() }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.entries.last().copied().unwrap_or(0)
    }

    /// Sum of entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Image under i -> n-i+1, re-sorted.
    pub fn tilde(&self, n: usize) -> Column {
        let mut entries: Vec<usize> = self.entries.iter().map(|&i| n + 1 - i).collect();
        entries.reverse();
        Column { entries }
    }

    /// Componentwise order on columns of equal length.
    pub fn leq(&self, other: &Column) -> bool {
        self.len() == other.len() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Every k-subset of 1..=n, lexicographically.
    pub fn all(n: usize, k: usize) -> Vec<Column> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Column>) {
            if cur.len() == k {
                out.push(Column { entries: cur.clone() });
                return;
            }
            let need = k - cur.len();
            for x in start..=n {
                if n - x + 1 < need {
                    break;
                }
                cur.push(x);
                rec(x + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out
    }

    /// Every column of length at most k.
    pub fn all_up_to(n: usize, k: usize) -> Vec<Column> {
        (0..=k.min(n)).flat_map(|r| Column::all(n, r)).collect()
    }
}

impl TryFrom<Vec<usize>> for Column {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Column::new(v)
    }
}

impl From<Column> for Vec<usize> {
    fn from(c: Column) -> Vec<usize> {
        c.entries
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
