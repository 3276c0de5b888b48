//! Superimposing the corners of all paths onto one corner region gives a
//! bijection between facets and multisets of height at most k there.

use std::collections::{BTreeMap, HashSet};

use stanley_core::{Cell, ClassicalPoset, Multiset};
use stanley_lattice::enumerate_facets;
use stanley_lattice::region::corner_region;

fn unshift(poset: ClassicalPoset, c: Cell, i: usize) -> Cell {
    let d = i - 1;
    match poset {
        ClassicalPoset::Gl { .. } => (c.0 - d, c.1 + d),
        ClassicalPoset::O { .. } => (c.0 - d, c.1 - d),
        ClassicalPoset::Sp { .. } => (c.0 + d, c.1 - d),
    }
}

/// A poset whose order on the region makes each path's corners an antichain.
fn rotated(poset: ClassicalPoset) -> ClassicalPoset {
    match poset {
        ClassicalPoset::O { .. } => ClassicalPoset::Gl { p: 99, q: 99 },
        _ => ClassicalPoset::O { n: 99 },
    }
}

fn multisets_of_height_at_most(cells: &[Cell], order: ClassicalPoset, k: usize) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    let mut entries = vec![0u64; cells.len()];
    fn rec(idx: usize, cells: &[Cell], entries: &mut Vec<u64>, order: ClassicalPoset, k: usize, out: &mut BTreeMap<u64, u64>) {
        if idx == cells.len() {
            let ms: Multiset = cells.iter().zip(entries.iter()).filter(|(_, &m)| m > 0).map(|(&c, &m)| (c, m)).collect();
            if order.height(&ms) <= k as u64 {
                *out.entry(entries.iter().sum()).or_insert(0) += 1;
            }
            return;
        }
        for m in 0..=k as u64 {
            entries[idx] = m;
            rec(idx + 1, cells, entries, order, k, out);
        }
        entries[idx] = 0;
    }
    rec(0, cells, &mut entries, order, k, &mut out);
    out
}

#[test]
fn superimposed_corners_biject_onto_bounded_height_multisets() {
    let mut cases = Vec::new();
    for p in 2..=5 {
        for q in 2..=5 {
            cases.push(ClassicalPoset::Gl { p, q });
        }
    }
    for n in 2..=6 {
        cases.push(ClassicalPoset::O { n });
    }
    for n in 4..=9 {
        cases.push(ClassicalPoset::Sp { n });
    }
    let mut checked = 0;
    for poset in cases {
        for k in 1..=poset.max_rank().min(2) {
            let region: Vec<Cell> = corner_region(poset, k, 1).unwrap().into_iter().collect();
            if region.len() > 9 {
                continue;
            }
            let mut images = HashSet::new();
            let mut by_corners: BTreeMap<u64, u64> = BTreeMap::new();
            for f in enumerate_facets(poset, k).unwrap() {
                let mut ms = Multiset::new();
                for (idx, path) in f.paths.iter().enumerate() {
                    for c in f.corners.iter().filter(|c| path.contains(c)) {
                        let base = unshift(poset, *c, idx + 1);
                        assert!(region.contains(&base), "{poset} k={k}: corner {c:?} outside region");
                        *ms.entry(base).or_insert(0) += 1;
                    }
                }
                assert!(rotated(poset).height(&ms) <= k as u64);
                assert!(images.insert(ms), "{poset} k={k}: two facets share a corner multiset");
                *by_corners.entry(f.corner_count() as u64).or_insert(0) += 1;
            }
            assert_eq!(by_corners, multisets_of_height_at_most(&region, rotated(poset), k), "{poset} k={k}");
            checked += 1;
        }
    }
    assert!(checked >= 30, "only {checked} cases checked");
}
