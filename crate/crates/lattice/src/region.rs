//! Corner regions: where the corners of a single path can fall.

use std::collections::BTreeSet;

use stanley_core::{Cell, ClassicalPoset, Result};

use crate::classical::enumerate_facets;

/// Union over all facets of the corners of path `index` (1-based).
pub fn corner_region(poset: ClassicalPoset, k: usize, index: usize) -> Result<BTreeSet<Cell>> {
    let facets = enumerate_facets(poset, k)?;
    let mut region = BTreeSet::new();
    for f in &facets {
        let path = &f.paths[index - 1];
        region.extend(f.corners.iter().filter(|c| path.contains(c)));
    }
    Ok(region)
}

/// The order in which a path's corners become pairwise incomparable.
pub fn rotated_leq(poset: ClassicalPoset, a: Cell, b: Cell) -> bool {
    match poset {
        // corners along a south/west path form a south-west chain
        ClassicalPoset::O { .. } => a.0 <= b.0 && a.1 <= b.1,
        _ => a.0 <= b.0 && a.1 >= b.1,
    }
}
