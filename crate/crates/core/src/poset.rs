use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A matrix position (row, column), 1-indexed.
pub type Cell = (usize, usize);

/// Cells with multiplicities.
pub type Multiset = BTreeMap<Cell, u64>;

/// The three partial orders on matrix cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassicalPoset {
    /// p x q rectangle, componentwise order.
    Gl { p: usize, q: usize },
    /// Cells i <= j; (i,j) <= (i',j') iff i <= i' and j >= j'.
    O { n: usize },
    /// Cells i < j, componentwise order.
    Sp { n: usize },
}

impl ClassicalPoset {
    pub fn contains(&self, (i, j): Cell) -> bool {
        if i == 0 || j == 0 {
            return false;
        }
        match *self {
            ClassicalPoset::Gl { p, q } => i <= p && j <= q,
            ClassicalPoset::O { n } => i <= j && j <= n,
            ClassicalPoset::Sp { n } => i < j && j <= n,
        }
    }

    fn check(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::domain(format!("cell {c:?} is not in {self}")))
        }
    }

    /// Order comparison, assuming both cells belong to the poset.
    pub fn leq_unchecked(&self, a: Cell, b: Cell) -> bool {
        match self {
            ClassicalPoset::O { .. } => a.0 <= b.0 && a.1 >= b.1,
            _ => a.0 <= b.0 && a.1 <= b.1,
        }
    }

    pub fn leq(&self, a: Cell, b: Cell) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.leq_unchecked(a, b))
    }

    pub fn comparable(&self, a: Cell, b: Cell) -> bool {
        self.leq_unchecked(a, b) || self.leq_unchecked(b, a)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let (rows, cols) = match *self {
            ClassicalPoset::Gl { p, q } => (p, q),
            ClassicalPoset::O { n } | ClassicalPoset::Sp { n } => (n, n),
        };
        (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .filter(|&c| self.contains(c))
            .collect()
    }

    /// Largest k for which the k-th order complex is nontrivial.
    pub fn max_rank(&self) -> usize {
        match *self {
            ClassicalPoset::Gl { p, q } => p.min(q),
            ClassicalPoset::O { n } => n,
            ClassicalPoset::Sp { n } => n / 2,
        }
    }

    /// A sort key that is a linear extension of the order.
    pub fn linear_key(&self, (i, j): Cell) -> (usize, isize) {
        match self {
            ClassicalPoset::O { .. } => (i, -(j as isize)),
            _ => (i, j as isize),
        }
    }

    /// Size of the largest antichain among `cells` (Dilworth, via matching).
    pub fn width(&self, cells: &[Cell]) -> usize {
        let n = cells.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| a != b && cells[a] != cells[b] && self.leq_unchecked(cells[a], cells[b]))
                    .collect()
            })
            .collect();
        let mut matched: Vec<Option<usize>> = vec![None; n];
        fn augment(a: usize, adj: &[Vec<usize>], seen: &mut [bool], matched: &mut [Option<usize>]) -> bool {
            for &b in &adj[a] {
                if seen[b] {
                    continue;
                }
                seen[b] = true;
                if matched[b].is_none_or(|a2| augment(a2, adj, seen, matched)) {
                    matched[b] = Some(a);
                    return true;
                }
            }
            false
        }
        let mut size = 0;
        for a in 0..n {
            let mut seen = vec![false; n];
            if augment(a, &adj, &mut seen, &mut matched) {
                size += 1;
            }
        }
        n - size
    }

    /// Longest chain in the multiset, counting multiplicities.
    pub fn height(&self, ms: &Multiset) -> u64 {
        let mut cells: Vec<(Cell, u64)> = ms.iter().filter(|(_, &m)| m > 0).map(|(&c, &m)| (c, m)).collect();
        cells.sort_by_key(|&(c, _)| self.linear_key(c));
        let mut best = vec![0u64; cells.len()];
        let mut top = 0;
        for b in 0..cells.len() {
            let below = (0..b)
                .filter(|&a| self.leq_unchecked(cells[a].0, cells[b].0))
                .map(|a| best[a])
                .max()
                .unwrap_or(0);
            best[b] = below + cells[b].1;
            top = top.max(best[b]);
        }
        top
    }

    /// (width of the support, height with multiplicity).
    pub fn width_height(&self, ms: &Multiset) -> Result<(usize, u64)> {
        let support: Vec<Cell> = ms.iter().filter(|(_, &m)| m > 0).map(|(&c, _)| c).collect();
        for &c in &support {
            self.check(c)?;
        }
        Ok((self.width(&support), self.height(ms)))
    }
}

impl fmt::Display for ClassicalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalPoset::Gl { p, q } => write!(f, "P_GL({p},{q})"),
            ClassicalPoset::O { n } => write!(f, "P_O({n})"),
            ClassicalPoset::Sp { n } => write!(f, "P_Sp({n})"),
        }
    }
}
