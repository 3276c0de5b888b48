use serde::{Deserialize, Serialize};
use stanley_core::{Cell, ClassicalPoset, Column, Error, Result};

use crate::paths::{for_each_family, turns, vertical_diagonal_end, End, FamilySpec, Steps, Turn};

/// A family of non-intersecting paths with its corner set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub paths: Vec<Vec<Cell>>,
    pub corners: Vec<Cell>,
    /// 1-based indices of paths whose diagonal endpoint is painted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub painted: Vec<usize>,
}

impl Facet {
    pub fn empty() -> Self {
        Facet { paths: Vec::new(), corners: Vec::new(), painted: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    pub fn corner_count(&self) -> usize {
        self.corners.len()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.paths.concat();
        cells.sort_unstable();
        cells
    }
}

/// Number of facets with each corner count, indexed by that count.
pub fn corner_counts(facets: &[Facet]) -> Vec<u64> {
    let mut hist = Vec::new();
    for f in facets {
        let c = f.corner_count();
        if hist.len() <= c {
            hist.resize(c + 1, 0);
        }
        hist[c] += 1;
    }
    hist
}

fn collect(spec: &FamilySpec<'_>, corners: impl Fn(&[Vec<Cell>]) -> Vec<Cell>) -> Vec<Facet> {
    let mut out = Vec::new();
    for_each_family(spec, |paths| {
        let mut c = corners(paths);
        c.sort_unstable();
        out.push(Facet { paths: paths.to_vec(), corners: c, painted: Vec::new() });
    });
    out
}

fn o_corners(paths: &[Vec<Cell>], with_diagonal: bool) -> Vec<Cell> {
    paths
        .iter()
        .flat_map(|p| {
            let mut c = turns(p, Turn::SouthWest);
            if with_diagonal {
                c.extend(vertical_diagonal_end(p));
            }
            c
        })
        .collect()
}

fn check_k(poset: &ClassicalPoset, k: usize) -> Result<()> {
    if k > poset.max_rank() {
        return Err(Error::domain(format!("k={k} exceeds the maximal rank {} of {poset}", poset.max_rank())));
    }
    Ok(())
}

/// All facets of the k-th order complex, with their standard corners.
pub fn enumerate_facets(poset: ClassicalPoset, k: usize) -> Result<Vec<Facet>> {
    check_k(&poset, k)?;
    if k == 0 {
        return Ok(vec![Facet::empty()]);
    }
    let contains = move |c: Cell| poset.contains(c);
    Ok(match poset {
        ClassicalPoset::Gl { p, q } => {
            let spec = FamilySpec {
                starts: (1..=k).map(|i| (i, 1)).collect(),
                ends: (1..=k).map(|i| End::At((p, q - i + 1))).collect(),
                steps: Steps::SouthEast,
                contains: &contains,
            };
            collect(&spec, |ps| ps.iter().flat_map(|p| turns(p, Turn::SouthEast)).collect())
        }
        ClassicalPoset::O { n } => {
            let spec = FamilySpec {
                starts: (1..=k).map(|i| (i, n)).collect(),
                ends: vec![End::Diagonal; k],
                steps: Steps::SouthWest,
                contains: &contains,
            };
            collect(&spec, |ps| o_corners(ps, true))
        }
        ClassicalPoset::Sp { n } => {
            let spec = FamilySpec {
                starts: (1..=k).map(|i| (1, 2 * i)).collect(),
                ends: (1..=k).map(|i| End::At((n - 2 * i + 1, n))).collect(),
                steps: Steps::SouthEast,
                contains: &contains,
            };
            collect(&spec, |ps| {
                ps.iter()
                    .enumerate()
                    .flat_map(|(idx, path)| {
                        let i = idx + 1;
                        let s = (k - i + 1, k + i + 1);
                        let t = ((n + 1).saturating_sub(k + i + 1), (n + 1).saturating_sub(k - i + 1));
                        // when n <= 2k the points s_i, t_i fall outside and no turn is free
                        let lo = path.iter().position(|&c| c == s).unwrap_or(usize::MAX);
                        let hi = path.iter().position(|&c| c == t).unwrap_or(0);
                        turns(path, Turn::SouthEast)
                            .into_iter()
                            .filter(move |c| {
                                let pos = path.iter().position(|d| d == c).expect("corner on path");
                                lo < pos && pos < hi
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
        }
    })
}

/// Orthogonal facets with exactly `m` painted diagonal endpoints; painted
/// endpoints are not corners.
pub fn enumerate_painted_facets(n: usize, k: usize, m: usize) -> Result<Vec<Facet>> {
    if m > k {
        return Err(Error::domain(format!("cannot paint {m} of {k} paths")));
    }
    let base = enumerate_facets(ClassicalPoset::O { n }, k)?;
    let subsets = Column::all(k, m);
    let mut out = Vec::with_capacity(base.len() * subsets.len());
    for f in &base {
        for s in &subsets {
            let painted_ends: Vec<Cell> = s.entries().iter().map(|&i| *f.paths[i - 1].last().expect("nonempty")).collect();
            let corners = f.corners.iter().copied().filter(|c| !painted_ends.contains(c)).collect();
            out.push(Facet { paths: f.paths.clone(), corners, painted: s.entries().to_vec() });
        }
    }
    Ok(out)
}

fn check_start_column(col: &Column, n: usize) -> Result<()> {
    if col.is_empty() || col.max_entry() > n {
        return Err(Error::domain(format!("column {col} is not a nonempty subset of 1..={n}")));
    }
    Ok(())
}

/// Orthogonal families whose paths start at (i, n) for i in `starts`.
pub fn enumerate_facets_from_starts(n: usize, starts: &Column) -> Result<Vec<Facet>> {
    check_start_column(starts, n)?;
    let contains = move |c: Cell| ClassicalPoset::O { n }.contains(c);
    let spec = FamilySpec {
        starts: starts.entries().iter().map(|&i| (i, n)).collect(),
        ends: vec![End::Diagonal; starts.len()],
        steps: Steps::SouthWest,
        contains: &contains,
    };
    Ok(collect(&spec, |ps| o_corners(ps, true)))
}

/// Orthogonal facets whose diagonal endpoints never count as corners.
pub fn enumerate_facets_varied_endpoints(n: usize, k: usize) -> Result<Vec<Facet>> {
    let mut facets = enumerate_facets(ClassicalPoset::O { n }, k)?;
    for f in &mut facets {
        f.corners.retain(|c| c.0 != c.1);
    }
    Ok(facets)
}

/// Which side of the rectangle the variable endpoints sit on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Paths (i_l, 1) -> (p, q+1-l), corners at south-then-east turns.
    Rows,
    /// Paths (1, j_l) -> (p+1-l, q), corners at east-then-south turns.
    Columns,
}

/// Rectangle families with starts given by a column of row (or column) indices.
pub fn enumerate_gl_facets_from_columns(p: usize, q: usize, col: &Column, orientation: Orientation) -> Result<Vec<Facet>> {
    let k = col.len();
    let (limit, other) = match orientation {
        Orientation::Rows => (p, q),
        Orientation::Columns => (q, p),
    };
    check_start_column(col, limit)?;
    if k > other {
        return Err(Error::domain(format!("{k} paths do not fit in {p}x{q}")));
    }
    let contains = move |c: Cell| ClassicalPoset::Gl { p, q }.contains(c);
    let (starts, ends, turn) = match orientation {
        Orientation::Rows => (
            col.entries().iter().map(|&i| (i, 1)).collect(),
            (1..=k).map(|l| End::At((p, q + 1 - l))).collect(),
            Turn::SouthEast,
        ),
        Orientation::Columns => (
            col.entries().iter().map(|&j| (1, j)).collect(),
            (1..=k).map(|l| End::At((p + 1 - l, q))).collect(),
            Turn::EastSouth,
        ),
    };
    let spec = FamilySpec { starts, ends, steps: Steps::SouthEast, contains: &contains };
    Ok(collect(&spec, |ps| ps.iter().flat_map(|path| turns(path, turn)).collect()))
}

/// Cells shadowed by the variable starts and the fixed endpoints of a
/// symplectic family with starts (1, i_l).
fn shadows(n: usize, starts: &Column) -> Vec<Cell> {
    let mut out = Vec::new();
    for (idx, &i) in starts.entries().iter().enumerate() {
        let l = idx + 1;
        for j in 1..l {
            if j < i {
                out.push((j + 1, i - j));
            }
            // the endpoint (n-2l+1, n) shadows toward the southwest
            out.push((n - 2 * l + 1 + j, n - j));
        }
    }
    out
}

/// South-then-east turns of the family that are not shadowed.
pub fn sp_corners_with_shadows(paths: &[Vec<Cell>], n: usize, starts: &Column) -> Vec<Cell> {
    let shadowed = shadows(n, starts);
    paths
        .iter()
        .flat_map(|p| turns(p, Turn::SouthEast))
        .filter(|c| !shadowed.contains(c))
        .collect()
}

/// Symplectic families (1, i_l) -> (n-2l+1, n), with shadow-filtered corners.
pub fn enumerate_sp_facets_from_starts(n: usize, starts: &Column) -> Result<Vec<Facet>> {
    check_start_column(starts, n)?;
    let k = starts.len();
    if 2 * k > n || starts.entries()[0] < 2 {
        return Err(Error::domain(format!("starts {starts} invalid for {k} symplectic paths in n={n}")));
    }
    let contains = move |c: Cell| ClassicalPoset::Sp { n }.contains(c);
    let spec = FamilySpec {
        starts: starts.entries().iter().map(|&i| (1, i)).collect(),
        ends: (1..=k).map(|l| End::At((n - 2 * l + 1, n))).collect(),
        steps: Steps::SouthEast,
        contains: &contains,
    };
    Ok(collect(&spec, |ps| sp_corners_with_shadows(ps, n, starts)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[usize]) -> Column {
        Column::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let gl = enumerate_facets(ClassicalPoset::Gl { p: 3, q: 4 }, 2).unwrap();
        assert_eq!(corner_counts(&gl), vec![1, 2, 3]);
        let o = enumerate_facets(ClassicalPoset::O { n: 4 }, 2).unwrap();
        assert_eq!(corner_counts(&o), vec![1, 3, 6]);
        let pure = enumerate_facets_varied_endpoints(4, 2).unwrap();
        assert_eq!(corner_counts(&pure), vec![6, 3, 1]);
        let painted = enumerate_painted_facets(4, 3, 2).unwrap();
        assert_eq!(painted.len(), 12);
        assert_eq!(corner_counts(&painted), vec![6, 6]);
    }

    #[test]
    fn variable_starts() {
        let one = enumerate_facets_from_starts(4, &col(&[3, 4])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].corner_count(), 0);
        let f = enumerate_facets_from_starts(4, &col(&[1, 3])).unwrap();
        assert_eq!(corner_counts(&f), vec![1, 4, 4, 1]);
    }

    #[test]
    fn symplectic_shadows() {
        assert_eq!(corner_counts(&enumerate_sp_facets_from_starts(6, &col(&[2, 4])).unwrap()), vec![1, 1, 1]);
        let f = enumerate_sp_facets_from_starts(6, &col(&[5, 6])).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].corner_count(), 0);
        assert_eq!(f[0].size(), 9);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_facets(ClassicalPoset::Sp { n: 5 }, 3).is_err());
        assert!(enumerate_painted_facets(4, 2, 3).is_err());
        assert_eq!(enumerate_facets(ClassicalPoset::O { n: 3 }, 0).unwrap(), vec![Facet::empty()]);
    }
}
