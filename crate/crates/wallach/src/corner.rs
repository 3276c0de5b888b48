use std::collections::BTreeSet;

use stanley_core::{ClassicalPoset, Result};
use stanley_lattice::region::{corner_region, rotated_leq};

use crate::finite::FinitePoset;
use crate::root_poset::{Point, RootPoset, WallachPair};
use crate::shelling::shelled_facets;

/// The corner region of the first path, with the rotated order.
pub fn classical_corner_poset(poset: ClassicalPoset, k: usize) -> Result<FinitePoset> {
    let region = corner_region(poset, k, 1)?;
    let elements = region.into_iter().map(|(i, j)| (i as i64, j as i64)).collect();
    Ok(FinitePoset::new(elements, |a, b| {
        rotated_leq(poset, (a.0 as usize, a.1 as usize), (b.0 as usize, b.1 as usize))
    }))
}

/// The smaller classical poset the corner region should match; None when empty.
pub fn reduced_classical(poset: ClassicalPoset, k: usize) -> Option<ClassicalPoset> {
    let out = match poset {
        ClassicalPoset::Gl { p, q } => ClassicalPoset::Gl { p: p.checked_sub(k)?, q: q.checked_sub(k)? },
        ClassicalPoset::O { n } => ClassicalPoset::Sp { n: (n + 1).checked_sub(k)? },
        ClassicalPoset::Sp { n } => ClassicalPoset::O { n: n.checked_sub(2 * k + 1)? },
    };
    (!out.cells().is_empty()).then_some(out)
}

/// Points lying strictly north-east of nothing else in the set.
fn north_east_border(cells: &BTreeSet<Point>) -> BTreeSet<Point> {
    cells
        .iter()
        .copied()
        .filter(|&(x, y)| !cells.iter().any(|&(u, v)| u > x && v > y))
        .collect()
}

/// Corners falling on the outermost path of each facet, ordered by grid position.
pub fn wallach_corner_poset(pair: WallachPair, k: usize) -> Result<FinitePoset> {
    pair.check(k)?;
    let poset = RootPoset::new(pair)?;
    let mut region = BTreeSet::new();
    for f in shelled_facets(&poset, k) {
        let outer = north_east_border(&f.cells);
        region.extend(f.corners.intersection(&outer).copied());
    }
    Ok(FinitePoset::new(region.into_iter().collect(), |a, b| a.0 <= b.0 && a.1 <= b.1))
}

/// The poset the exceptional corner region is expected to match.
pub fn wallach_reduced(pair: WallachPair, k: usize) -> Result<FinitePoset> {
    pair.check(k)?;
    Ok(match (pair, k) {
        (WallachPair::E6, 1) => FinitePoset::from_classical(ClassicalPoset::Gl { p: 5, q: 1 }),
        (WallachPair::E7, 1) => {
            let d6 = RootPoset::new(WallachPair::D { n: 6 })?;
            let up = |a: Point, b: Point| a.0 <= b.0 && a.1 >= b.1;
            FinitePoset::new(d6.points, up)
        }
        _ => FinitePoset::from_classical(ClassicalPoset::Gl { p: 1, q: 1 }),
    })
}
