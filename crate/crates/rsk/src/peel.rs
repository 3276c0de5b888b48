use serde::{Deserialize, Serialize};
use stanley_core::{Cell, ClassicalPoset, Error, Multiset, NatMatrix, Result};

/// Chains and antichains peeled off the multisupport of a matrix.
///
/// `chains_star` is only populated for the GL and Sp posets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelDecomposition {
    pub poset: ClassicalPoset,
    pub chains_star: Vec<Multiset>,
    pub chains: Vec<Multiset>,
    pub antichains: Vec<Multiset>,
}

/// Repeatedly removes every cell (with all its copies) that no remaining
/// cell blocks.
fn peel_chains(ms: &Multiset, blocks: impl Fn(Cell, Cell) -> bool) -> Vec<Multiset> {
    let mut rest = ms.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let border: Multiset = rest
            .iter()
            .filter(|(&c, _)| !rest.keys().any(|&d| blocks(d, c)))
            .map(|(&c, &m)| (c, m))
            .collect();
        for c in border.keys() {
            rest.remove(c);
        }
        out.push(border);
    }
    out
}

/// Repeatedly removes one copy of each minimal cell.
fn peel_antichains(poset: &ClassicalPoset, ms: &Multiset) -> Vec<Multiset> {
    let mut rest = ms.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let minimal: Vec<Cell> = rest
            .keys()
            .copied()
            .filter(|&c| !rest.keys().any(|&d| d != c && poset.leq_unchecked(d, c)))
            .collect();
        for c in &minimal {
            let m = rest.get_mut(c).expect("present");
            *m -= 1;
            if *m == 0 {
                rest.remove(c);
            }
        }
        out.push(minimal.into_iter().map(|c| (c, 1)).collect());
    }
    out
}

pub fn peel(m: &NatMatrix, poset: ClassicalPoset) -> Result<PeelDecomposition> {
    let ms = m.multiset();
    if let Some(c) = ms.keys().find(|&&c| !poset.contains(c)) {
        return Err(Error::domain(format!("support cell {c:?} lies outside {poset}")));
    }
    let (chains_star, chains) = match poset {
        ClassicalPoset::O { .. } => (Vec::new(), peel_chains(&ms, |d, c| d.0 < c.0 && d.1 < c.1)),
        _ => (
            peel_chains(&ms, |d, c| d.0 < c.0 && d.1 > c.1),
            peel_chains(&ms, |d, c| d.0 > c.0 && d.1 < c.1),
        ),
    };
    Ok(PeelDecomposition { poset, chains_star, chains, antichains: peel_antichains(&poset, &ms) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use stanley_core::MatrixKind;

    #[test]
    fn zero_matrix_peels_to_nothing() {
        let m = NatMatrix::zeros(3, 3, MatrixKind::Generic);
        let d = peel(&m, ClassicalPoset::Gl { p: 3, q: 3 }).unwrap();
        assert!(d.chains_star.is_empty() && d.chains.is_empty() && d.antichains.is_empty());
    }

    #[test]
    fn support_outside_poset() {
        let m = NatMatrix::from_rows(vec![vec![1, 0], vec![0, 0]], MatrixKind::Generic).unwrap();
        assert!(peel(&m, ClassicalPoset::Sp { n: 2 }).is_err());
    }
}
