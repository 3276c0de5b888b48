use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use stanley_core::{Cell, ClassicalPoset, Column, Error, MatrixKind, NatMatrix, Result, for_each_matrix};
use stanley_rsk::peel;

use crate::diagram::top_fits;
use crate::limits::{multisets, Limits};

/// Group and copies; k is passed separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum GraphGroup {
    Gl { p: usize, q: usize },
    Sl { p: usize, q: usize },
    O { n: usize },
    So { n: usize },
    /// k is the rank: the group acts on 2k-space.
    Sp { n: usize },
}

impl GraphGroup {
    fn layout(&self) -> (ClassicalPoset, usize, usize, MatrixKind) {
        match *self {
            GraphGroup::Gl { p, q } | GraphGroup::Sl { p, q } => (ClassicalPoset::Gl { p, q }, p, q, MatrixKind::Generic),
            GraphGroup::O { n } | GraphGroup::So { n } => (ClassicalPoset::O { n }, n, n, MatrixKind::UpperTriangular),
            GraphGroup::Sp { n } => (ClassicalPoset::Sp { n }, n, n, MatrixKind::StrictlyUpperTriangular),
        }
    }

    fn vertices(&self) -> usize {
        match *self {
            GraphGroup::Gl { p, q } | GraphGroup::Sl { p, q } => p + q,
            GraphGroup::O { n } | GraphGroup::So { n } | GraphGroup::Sp { n } => n,
        }
    }
}

/// Multichain counts: chains[m][x] = number of I_1 <= ... <= I_m = columns[x].
struct Multichains {
    columns: Vec<Column>,
    counts: Vec<Vec<BigUint>>,
}

impl Multichains {
    fn new(n: usize, k: usize, max_len: usize) -> Self {
        let columns = Column::all(n, k);
        let below: Vec<Vec<usize>> =
            columns.iter().map(|x| (0..columns.len()).filter(|&y| columns[y].leq(x)).collect()).collect();
        let mut counts = vec![vec![BigUint::zero(); columns.len()], vec![BigUint::from(1u8); columns.len()]];
        for m in 2..=max_len {
            let prev = &counts[m - 1];
            let next = below.iter().map(|ys| ys.iter().map(|&y| &prev[y]).sum()).collect();
            counts.push(next);
        }
        Multichains { columns, counts }
    }
}

/// Basis-diagram counts in every degree 0..=up_to.
pub fn graded_dimensions_by_graphs(group: GraphGroup, k: usize, up_to: usize, limits: &Limits) -> Result<Vec<BigUint>> {
    limits.vertices(group.vertices())?;
    limits.degree(up_to)?;
    let (poset, rows, cols, kind) = group.layout();
    let max_arcs = up_to / 2;
    limits.candidates(multisets(poset.cells().len() + 1, max_arcs))?;

    let hyper = match group {
        GraphGroup::Sl { p, q } => {
            if k == 0 || k > p.min(q) {
                return Err(Error::domain(format!("SL needs 1 <= k <= min(p,q), got k={k}")));
            }
            let m = up_to / k;
            Some((Multichains::new(p, k, m), Multichains::new(q, k, m)))
        }
        _ => None,
    };
    let paintings = match group {
        GraphGroup::So { n } if (1..=n).contains(&k) => Column::all(n, k),
        _ => Vec::new(),
    };

    let mut dims = vec![BigUint::zero(); up_to + 1];
    let mut err = None;
    for_each_matrix(rows, cols, kind, max_arcs as u64, |m: &NatMatrix| {
        if err.is_some() || poset.width(&m.support()) > k {
            return;
        }
        let base = 2 * m.sum() as usize;
        dims[base] += 1u8;
        if hyper.is_none() && paintings.is_empty() {
            return;
        }
        let dec = match peel(m, poset) {
            Ok(d) => d,
            Err(e) => {
                err = Some(e);
                return;
            }
        };
        if let Some((star, plain)) = &hyper {
            for (chains, by_row, mc) in [(&dec.chains_star, true, star), (&dec.chains, false, plain)] {
                let valid: Vec<usize> =
                    (0..mc.columns.len()).filter(|&x| top_fits(mc.columns[x].entries(), chains, by_row)).collect();
                for len in 1..mc.counts.len() {
                    let d = base + k * len;
                    if d > up_to {
                        break;
                    }
                    let total: BigUint = valid.iter().map(|&x| &mc.counts[len][x]).sum();
                    dims[d] += total;
                }
            }
        }
        if !paintings.is_empty() && base + k <= up_to {
            let ok = paintings.iter().filter(|i| top_fits(i.entries(), &dec.chains, true)).count();
            dims[base + k] += ok;
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(dims),
    }
}

pub fn graded_dimension_by_graphs(group: GraphGroup, k: usize, d: usize, limits: &Limits) -> Result<BigUint> {
    Ok(graded_dimensions_by_graphs(group, k, d, limits)?.pop().expect("nonempty"))
}

/// Calls `visit` on every perfect matching of `vertices` as sorted arcs.
fn for_each_matching(vertices: &[usize], visit: &mut dyn FnMut(&[Cell])) {
    fn rec(rest: &mut Vec<usize>, arcs: &mut Vec<Cell>, visit: &mut dyn FnMut(&[Cell])) {
        if rest.is_empty() {
            visit(arcs);
            return;
        }
        let i = rest.remove(0);
        for idx in 0..rest.len() {
            let j = rest.remove(idx);
            arcs.push((i, j));
            rec(rest, arcs, visit);
            arcs.pop();
            rest.insert(idx, j);
        }
        rest.insert(0, i);
    }
    if vertices.len().is_multiple_of(2) {
        rec(&mut vertices.to_vec(), &mut Vec::new(), visit);
    }
}

/// Calls `visit` with every injective map from 1..=small into 1..=big, as arcs (source, target).
fn for_each_injection(small: usize, big: usize, visit: &mut dyn FnMut(&[Cell])) {
    fn rec(i: usize, small: usize, used: &mut Vec<bool>, arcs: &mut Vec<Cell>, visit: &mut dyn FnMut(&[Cell])) {
        if i > small {
            visit(arcs);
            return;
        }
        for j in 1..used.len() {
            if !used[j] {
                used[j] = true;
                arcs.push((i, j));
                rec(i + 1, small, used, arcs, visit);
                arcs.pop();
                used[j] = false;
            }
        }
    }
    rec(1, small, &mut vec![false; big + 1], &mut Vec::new(), visit);
}

/// Splits `set` into blocks of size k that form a chain; visits the top block.
fn for_each_chain_partition(set: &[usize], k: usize, visit: &mut dyn FnMut(&Column)) {
    fn rec(rest: &[usize], k: usize, blocks: &mut Vec<Column>, visit: &mut dyn FnMut(&Column)) {
        if rest.is_empty() {
            // blocks were built smallest-first-entry first
            if blocks.windows(2).all(|w| w[0].leq(&w[1])) {
                visit(blocks.last().expect("nonempty"));
            }
            return;
        }
        let first = rest[0];
        for others in Column::all(rest.len() - 1, k - 1) {
            let mut block = vec![first];
            block.extend(others.entries().iter().map(|&x| rest[x]));
            let remaining: Vec<usize> = rest[1..]
                .iter()
                .enumerate()
                .filter(|(idx, _)| !others.entries().contains(&(idx + 1)))
                .map(|(_, &v)| v)
                .collect();
            blocks.push(Column::new(block).expect("increasing"));
            rec(&remaining, k, blocks, visit);
            blocks.pop();
        }
    }
    if k > 0 && set.len().is_multiple_of(k) && !set.is_empty() {
        rec(set, k, &mut Vec::new(), visit);
    }
}

fn factorial_ratio(big: usize, small: usize) -> u128 {
    ((big - small + 1)..=big).fold(1u128, |a, x| a.saturating_mul(x as u128))
}

fn double_factorial(n: usize) -> u128 {
    (1..n).step_by(2).fold(1u128, |a, x| a.saturating_mul(x as u128))
}

/// Number of 1-regular basis diagrams: the dimension of the tensor invariants.
pub fn count_tensor_invariants(group: GraphGroup, k: usize, limits: &Limits) -> Result<BigUint> {
    limits.vertices(group.vertices())?;
    let (poset, rows, cols, kind) = group.layout();
    let mut count = 0u64;
    let matrix_of = |arcs: &[Cell]| {
        let mut m = NatMatrix::zeros(rows, cols, kind);
        for &(i, j) in arcs {
            m.add(i, j, 1);
        }
        m
    };
    let width_ok = |arcs: &[Cell]| poset.width(arcs) <= k;
    match group {
        GraphGroup::Gl { p, q } => {
            if p == q {
                limits.candidates(factorial_ratio(p, p))?;
                for_each_injection(p, q, &mut |arcs| count += u64::from(width_ok(arcs)));
            }
        }
        GraphGroup::Sl { p, q } => {
            if k == 0 {
                return Err(Error::domain("SL needs k >= 1"));
            }
            if p.abs_diff(q) % k != 0 {
                return Ok(BigUint::zero());
            }
            let starred = p >= q;
            let (small, big) = if starred { (q, p) } else { (p, q) };
            limits.candidates(factorial_ratio(big, small))?;
            for_each_injection(small, big, &mut |pairs| {
                let arcs: Vec<Cell> = pairs.iter().map(|&(s, b)| if starred { (b, s) } else { (s, b) }).collect();
                if !width_ok(&arcs) {
                    return;
                }
                if big == small {
                    count += 1;
                    return;
                }
                let used: Vec<usize> = pairs.iter().map(|&(_, b)| b).collect();
                let free: Vec<usize> = (1..=big).filter(|v| !used.contains(v)).collect();
                let dec = peel(&matrix_of(&arcs), poset).expect("arcs lie in the rectangle");
                let chains = if starred { &dec.chains_star } else { &dec.chains };
                for_each_chain_partition(&free, k, &mut |top| {
                    count += u64::from(top_fits(top.entries(), chains, starred));
                });
            });
        }
        GraphGroup::O { n } | GraphGroup::Sp { n } => {
            limits.candidates(double_factorial(n))?;
            let all: Vec<usize> = (1..=n).collect();
            for_each_matching(&all, &mut |arcs| count += u64::from(width_ok(arcs)));
        }
        GraphGroup::So { n } => {
            limits.candidates(double_factorial(n).saturating_mul(1 << n.min(100)))?;
            let all: Vec<usize> = (1..=n).collect();
            for_each_matching(&all, &mut |arcs| count += u64::from(width_ok(arcs)));
            if (1..=n).contains(&k) && (n - k).is_multiple_of(2) {
                for painted in Column::all(n, k) {
                    let rest: Vec<usize> = all.iter().copied().filter(|v| !painted.entries().contains(v)).collect();
                    for_each_matching(&rest, &mut |arcs| {
                        if width_ok(arcs) {
                            let dec = peel(&matrix_of(arcs), poset).expect("arcs lie in the triangle");
                            count += u64::from(top_fits(painted.entries(), &dec.chains, true));
                        }
                    });
                }
            }
        }
    }
    Ok(BigUint::from(count))
}
