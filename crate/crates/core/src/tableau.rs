use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Semistandard Young tableau with entries in `1..=bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
    bound: usize,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::domain("row lengths must weakly decrease"));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > bound {
                    return Err(Error::domain(format!("entry {x} outside 1..={bound}")));
                }
                if c > 0 && row[c - 1] > x {
                    return Err(Error::domain("rows must weakly increase"));
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return Err(Error::domain("columns must strictly increase"));
                }
            }
        }
        Ok(SemistandardTableau { rows, bound })
    }

    /// Smallest bound that fits the entries.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bound = rows.iter().flatten().copied().max().unwrap_or(0);
        Self::new(rows, bound)
    }

    pub fn empty(bound: usize) -> Self {
        SemistandardTableau { rows: Vec::new(), bound }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>, bound: usize) -> Self {
        SemistandardTableau { rows, bound }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn with_bound(mut self, bound: usize) -> Result<Self> {
        if self.rows.iter().flatten().any(|&x| x > bound) {
            return Err(Error::domain(format!("entries exceed bound {bound}")));
        }
        self.bound = bound;
        Ok(self)
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid tableau shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column `c` (0-indexed), read top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.column(0)
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.column(c)).collect()
    }
}

/// All SSYT of the given shape with entries at most `n`, in lexicographic
/// order of the row-major reading word.
pub fn ssyt_enumerate(shape: &Partition, n: usize) -> Vec<SemistandardTableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |rows| out.push(SemistandardTableau::from_rows_unchecked(rows.to_vec(), n)));
    out
}

/// Visits every SSYT of the shape without allocating a tableau per result.
pub fn for_each_ssyt(shape: &Partition, n: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    if shape.length() > n {
        return;
    }
    let cols = shape.column_lengths();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
        .collect();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        cols: &[usize],
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if idx == cells.len() {
            visit(rows);
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = r + 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        // leave room for the strictly increasing cells below
        let hi = n - (cols[c] - r - 1);
        for x in lo..=hi {
            rows[r][c] = x;
            rec(idx + 1, cells, cols, n, rows, visit);
        }
    }
    rec(0, &cells, &cols, n, &mut rows, &mut visit);
}
