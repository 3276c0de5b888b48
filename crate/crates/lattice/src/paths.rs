//! Backtracking enumeration of non-intersecting path families.

use std::collections::HashSet;

use stanley_core::Cell;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Steps {
    /// Row index grows (south) or column index grows (east).
    SouthEast,
    /// Row index grows (south) or column index shrinks (west).
    SouthWest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    At(Cell),
    /// Stop on the first cell (j, j).
    Diagonal,
}

/// Which turn pattern counts as a corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    /// Entered from the north, left to the east.
    SouthEast,
    /// Entered from the west, left to the south.
    EastSouth,
    /// Entered from the north, left to the west.
    SouthWest,
}

pub struct FamilySpec<'a> {
    pub starts: Vec<Cell>,
    pub ends: Vec<End>,
    pub steps: Steps,
    pub contains: &'a dyn Fn(Cell) -> bool,
}

fn moves(steps: Steps, (i, j): Cell) -> [Option<Cell>; 2] {
    match steps {
        // east before south: lexicographic on step letters E < S
        Steps::SouthEast => [Some((i, j + 1)), Some((i + 1, j))],
        // south before west: S < W
        Steps::SouthWest => [Some((i + 1, j)), j.checked_sub(1).map(|j| (i, j))],
    }
}

fn can_reach(steps: Steps, from: Cell, end: End) -> bool {
    match (steps, end) {
        (Steps::SouthEast, End::At(t)) => from.0 <= t.0 && from.1 <= t.1,
        (Steps::SouthWest, End::At(t)) => from.0 <= t.0 && from.1 >= t.1,
        (_, End::Diagonal) => true,
    }
}

fn at_end(cell: Cell, end: End) -> bool {
    match end {
        End::At(t) => cell == t,
        End::Diagonal => cell.0 == cell.1,
    }
}

/// Calls `visit` on every family of pairwise disjoint paths, one per start.
pub fn for_each_family(spec: &FamilySpec<'_>, mut visit: impl FnMut(&[Vec<Cell>])) {
    assert_eq!(spec.starts.len(), spec.ends.len());
    let mut used: HashSet<Cell> = HashSet::new();
    let mut family: Vec<Vec<Cell>> = Vec::new();
    // starts are reserved up front so earlier paths cannot run over them
    let reserved: HashSet<Cell> = spec.starts.iter().copied().collect();
    if reserved.len() != spec.starts.len() || !spec.starts.iter().all(|&s| (spec.contains)(s)) {
        return;
    }
    family_rec(spec, 0, &reserved, &mut used, &mut family, &mut visit);
}

fn family_rec(
    spec: &FamilySpec<'_>,
    idx: usize,
    reserved: &HashSet<Cell>,
    used: &mut HashSet<Cell>,
    family: &mut Vec<Vec<Cell>>,
    visit: &mut dyn FnMut(&[Vec<Cell>]),
) {
    if idx == spec.starts.len() {
        visit(family);
        return;
    }
    let start = spec.starts[idx];
    let end = spec.ends[idx];
    if used.contains(&start) || !can_reach(spec.steps, start, end) {
        return;
    }
    let mut path = vec![start];
    used.insert(start);
    path_rec(spec, idx, end, reserved, used, &mut path, family, visit);
    used.remove(&start);
}

#[allow(clippy::too_many_arguments)]
fn path_rec(
    spec: &FamilySpec<'_>,
    idx: usize,
    end: End,
    reserved: &HashSet<Cell>,
    used: &mut HashSet<Cell>,
    path: &mut Vec<Cell>,
    family: &mut Vec<Vec<Cell>>,
    visit: &mut dyn FnMut(&[Vec<Cell>]),
) {
    let cur = *path.last().expect("path has a start");
    if at_end(cur, end) {
        family.push(path.clone());
        family_rec(spec, idx + 1, reserved, used, family, visit);
        family.pop();
        return;
    }
    for next in moves(spec.steps, cur).into_iter().flatten() {
        if !(spec.contains)(next) || used.contains(&next) || reserved.contains(&next) {
            continue;
        }
        if !can_reach(spec.steps, next, end) {
            continue;
        }
        used.insert(next);
        path.push(next);
        path_rec(spec, idx, end, reserved, used, path, family, visit);
        path.pop();
        used.remove(&next);
    }
}

/// Cells of `path` showing the given turn.
pub fn turns(path: &[Cell], turn: Turn) -> Vec<Cell> {
    path.windows(3)
        .filter(|w| {
            let (prev, cur, next) = (w[0], w[1], w[2]);
            match turn {
                Turn::SouthEast => prev == (cur.0 - 1, cur.1) && next == (cur.0, cur.1 + 1),
                Turn::EastSouth => prev == (cur.0, cur.1 - 1) && next == (cur.0 + 1, cur.1),
                Turn::SouthWest => prev == (cur.0 - 1, cur.1) && next.1 + 1 == cur.1 && next.0 == cur.0,
            }
        })
        .map(|w| w[1])
        .collect()
}

/// The final cell if it lies on the diagonal and was entered by a southward step.
pub fn vertical_diagonal_end(path: &[Cell]) -> Option<Cell> {
    match path {
        [.., prev, last] if last.0 == last.1 && prev.0 + 1 == last.0 && prev.1 == last.1 => Some(*last),
        _ => None,
    }
}
