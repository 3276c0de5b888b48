use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use stanley_core::{Error, Result};

/// Grid point (x, y): x grows to the east, y to the north.
pub type Point = (i64, i64);

/// Hermitian symmetric pairs of simply-laced type handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "pair")]
pub enum WallachPair {
    /// (D_n, D_{n-1}), n >= 4.
    D { n: usize },
    E6,
    E7,
}

impl WallachPair {
    /// Number of Wallach representations.
    pub fn rank(&self) -> usize {
        match self {
            WallachPair::D { .. } => 1,
            WallachPair::E6 => 1,
            WallachPair::E7 => 2,
        }
    }

    pub fn check(&self, k: usize) -> Result<()> {
        if let WallachPair::D { n } = self {
            if *n < 4 {
                return Err(Error::domain(format!("D_n needs n >= 4, got {n}")));
            }
        }
        if k == 0 || k > self.rank() {
            return Err(Error::domain(format!("{self} has no Wallach representation with k={k}")));
        }
        Ok(())
    }
}

impl fmt::Display for WallachPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallachPair::D { n } => write!(f, "(D{n},D{})", n - 1),
            WallachPair::E6 => write!(f, "(E6,D5)"),
            WallachPair::E7 => write!(f, "(E7,E6)"),
        }
    }
}

/// Noncompact roots as grid points; covers are unit steps east or south.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPoset {
    pub label: String,
    pub points: Vec<Point>,
}

impl RootPoset {
    /// Rows given as (y, first x, last x).
    fn from_rows(label: String, rows: &[(i64, i64, i64)]) -> Self {
        let mut points: Vec<Point> = rows.iter().flat_map(|&(y, a, b)| (a..=b).map(move |x| (x, y))).collect();
        points.sort_by_key(|&(x, y)| (-y, x));
        RootPoset { label, points }
    }

    pub fn new(pair: WallachPair) -> Result<Self> {
        let label = pair.to_string();
        Ok(match pair {
            WallachPair::D { n } => {
                pair.check(1)?;
                let n = n as i64;
                Self::from_rows(label, &[(2, 1, n - 1), (1, n - 2, 2 * n - 4)])
            }
            WallachPair::E6 => Self::from_rows(label, &[(4, 1, 5), (3, 3, 5), (2, 4, 6), (1, 4, 8)]),
            WallachPair::E7 => {
                Self::from_rows(label, &[(9, 1, 6), (8, 4, 6), (7, 5, 7), (6, 5, 9), (5, 5, 9), (4, 8, 12)])
            }
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p)
    }

    /// Upper covers of a point: one step east or one step south.
    pub fn up(&self, (x, y): Point) -> Vec<Point> {
        [(x + 1, y), (x, y - 1)].into_iter().filter(|&q| self.contains(q)).collect()
    }

    pub fn minimum(&self) -> Point {
        self.points[0]
    }

    pub fn maximum(&self) -> Point {
        *self.points.last().expect("nonempty poset")
    }

    /// All maximal chains, as point lists from the minimum to the maximum.
    pub fn maximal_chains(&self) -> Vec<Vec<Point>> {
        let mut out = Vec::new();
        let mut path = vec![self.minimum()];
        fn rec(poset: &RootPoset, path: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
            let last = *path.last().expect("nonempty");
            let next = poset.up(last);
            if next.is_empty() {
                out.push(path.clone());
                return;
            }
            for q in next {
                path.push(q);
                rec(poset, path, out);
                path.pop();
            }
        }
        rec(self, &mut path, &mut out);
        out
    }

    /// Largest unions of k maximal chains.
    pub fn facets(&self, k: usize) -> Vec<BTreeSet<Point>> {
        let chains: Vec<BTreeSet<Point>> = self.maximal_chains().into_iter().map(|c| c.into_iter().collect()).collect();
        let mut best = 0;
        let mut found: BTreeSet<BTreeSet<Point>> = BTreeSet::new();
        let mut pick: Vec<usize> = Vec::new();
        fn rec(
            chains: &[BTreeSet<Point>],
            k: usize,
            from: usize,
            pick: &mut Vec<usize>,
            best: &mut usize,
            found: &mut BTreeSet<BTreeSet<Point>>,
        ) {
            if pick.len() == k {
                let union: BTreeSet<Point> = pick.iter().flat_map(|&i| chains[i].iter().copied()).collect();
                if union.len() > *best {
                    *best = union.len();
                    found.clear();
                }
                if union.len() == *best {
                    found.insert(union);
                }
                return;
            }
            for i in from..chains.len() {
                pick.push(i);
                rec(chains, k, i + 1, pick, best, found);
                pick.pop();
            }
        }
        rec(&chains, k, 0, &mut pick, &mut best, &mut found);
        found.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(RootPoset::new(WallachPair::E6).unwrap().len(), 16);
        assert_eq!(RootPoset::new(WallachPair::E7).unwrap().len(), 27);
        assert_eq!(RootPoset::new(WallachPair::D { n: 6 }).unwrap().len(), 10);
        assert!(RootPoset::new(WallachPair::D { n: 3 }).is_err());
    }

    #[test]
    fn chain_counts() {
        assert_eq!(RootPoset::new(WallachPair::E7).unwrap().maximal_chains().len(), 78);
        assert_eq!(RootPoset::new(WallachPair::D { n: 5 }).unwrap().maximal_chains().len(), 2);
    }
}
