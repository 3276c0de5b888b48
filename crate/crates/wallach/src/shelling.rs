use std::collections::BTreeSet;

use stanley_core::Result;
use stanley_series::{IntPolynomial, RationalSeries};

use crate::root_poset::{Point, RootPoset, WallachPair};

/// A facet with its restriction face in the shelling order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShelledFacet {
    pub cells: BTreeSet<Point>,
    /// Points v such that removing v lands inside an earlier facet.
    pub corners: BTreeSet<Point>,
}

/// Facets ordered from the north-east down, with restriction faces.
pub fn shelled_facets(poset: &RootPoset, k: usize) -> Vec<ShelledFacet> {
    let mut facets = poset.facets(k);
    facets.sort_by_key(|f| (std::cmp::Reverse(f.iter().map(|&(x, y)| x + y).sum::<i64>()), f.clone()));
    let mut out: Vec<ShelledFacet> = Vec::with_capacity(facets.len());
    for (i, f) in facets.iter().enumerate() {
        let corners = f
            .iter()
            .copied()
            .filter(|v| facets[..i].iter().any(|g| f.iter().all(|c| c == v || g.contains(c))))
            .collect();
        out.push(ShelledFacet { cells: f.clone(), corners });
    }
    out
}

/// Σ_f t^{#cor f} / (1 - t)^d over the facets of the k-th order complex.
pub fn wallach_series(pair: WallachPair, k: usize) -> Result<RationalSeries> {
    pair.check(k)?;
    let poset = RootPoset::new(pair)?;
    let facets = shelled_facets(&poset, k);
    let d = facets.first().map_or(0, |f| f.cells.len());
    let mut num = IntPolynomial::zero();
    for f in &facets {
        num.add_term(f.corners.len(), 1.into());
    }
    RationalSeries::new(num, [(1, d as u32)])
}
