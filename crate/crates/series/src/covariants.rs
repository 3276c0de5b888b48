use std::collections::BTreeMap;

use num_bigint::BigInt;
use stanley_core::{Column, Error, Partition, Result};
use stanley_lattice::{
    bin_of_chain, enumerate_facets_from_starts, enumerate_gl_facets_from_columns, enumerate_painted_facets,
    enumerate_sp_facets_from_starts, sigma_chains, BinContext, Orientation,
};

use crate::invariants::{path_decomposition, path_series};
use crate::rational::RationalSeries;

/// Σ over families f starting at `col` of t^{2 cor(f)} / (1 - t^2)^{|f|}, in a p by q rectangle.
pub fn series_from_start_column(col: &Column, p: usize, q: usize, orientation: Orientation) -> Result<RationalSeries> {
    Ok(path_series(&enumerate_gl_facets_from_columns(p, q, col, orientation)?))
}

/// Orthogonal version: paths from (i, n) down to the diagonal.
pub fn series_from_start_column_o(col: &Column, n: usize) -> Result<RationalSeries> {
    Ok(path_series(&enumerate_facets_from_starts(n, col)?))
}

/// Symplectic version with shadow-filtered corners.
pub fn series_from_start_column_sp(col: &Column, n: usize) -> Result<RationalSeries> {
    Ok(path_series(&enumerate_sp_facets_from_starts(n, col)?))
}

/// A covariant series with the chain counts that weight each start column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovariantSeries {
    pub series: RationalSeries,
    /// Every admissible start column, in lexicographic order, with its bin size.
    pub bins: Vec<(Column, u64)>,
}

impl CovariantSeries {
    pub fn bin_sizes(&self) -> Vec<u64> {
        self.bins.iter().map(|(_, c)| *c).collect()
    }

    pub fn chain_count(&self) -> u64 {
        self.bins.iter().map(|(_, c)| *c).sum()
    }
}

/// Counts σ-chains per bin, listing every column in `columns` (zeros included).
fn binned(sigma: &Partition, n: usize, k: usize, ctx: BinContext, columns: Vec<Column>) -> Result<Vec<(Column, u64)>> {
    let mut counts: BTreeMap<Column, u64> = columns.into_iter().map(|c| (c, 0)).collect();
    for chain in sigma_chains(sigma, n, k)? {
        let bin = bin_of_chain(&chain, ctx)?;
        *counts
            .get_mut(&bin)
            .ok_or_else(|| Error::domain(format!("bin {bin} outside the admissible columns")))? += 1;
    }
    Ok(counts.into_iter().collect())
}

fn assemble(
    sigma: &Partition,
    bins: Vec<(Column, u64)>,
    mut p_i: impl FnMut(&Column) -> Result<RationalSeries>,
) -> Result<CovariantSeries> {
    let mut parts = Vec::new();
    for (col, count) in &bins {
        if *count > 0 {
            parts.push(p_i(col)?.scale(&BigInt::from(*count)));
        }
    }
    Ok(CovariantSeries { series: RationalSeries::sum(&parts).shift(sigma.size()), bins })
}

/// GL covariants of type (σ⁺, σ⁻) with one of the two parts zero.
pub fn hilbert_gl_covariants(
    k: usize,
    p: usize,
    q: usize,
    sigma_plus: &Partition,
    sigma_minus: &Partition,
) -> Result<CovariantSeries> {
    if !sigma_plus.is_empty() && !sigma_minus.is_empty() {
        return Err(Error::Unsupported(format!(
            "mixed covariant type ({sigma_plus}, {sigma_minus}); one part must be zero"
        )));
    }
    if k == 0 || k > p.min(q) {
        return Err(Error::domain(format!("GL covariants need 1 <= k <= min(p,q), got k={k}")));
    }
    let (sigma, n, orientation) = if sigma_minus.is_empty() {
        (sigma_plus, q, Orientation::Columns)
    } else {
        (sigma_minus, p, Orientation::Rows)
    };
    let bins = binned(sigma, n, k, BinContext::Gl { n, k }, Column::all(n, k))?;
    assemble(sigma, bins, |col| series_from_start_column(col, p, q, orientation))
}

fn check_wedge(k: usize, n: usize, m: usize) -> Result<()> {
    if m > k || k > n || k == 0 {
        return Err(Error::domain(format!("need 0 <= m <= k <= n and k >= 1, got m={m}, k={k}, n={n}")));
    }
    Ok(())
}

/// Orthogonal covariants of type Λ^m, binned over start columns.
pub fn hilbert_o_covariants_wedge(k: usize, n: usize, m: usize) -> Result<CovariantSeries> {
    check_wedge(k, n, m)?;
    let sigma = Partition::new(vec![1; m])?;
    let bins = binned(&sigma, n, k, BinContext::Gl { n, k }, Column::all(n, k))?;
    assemble(&sigma, bins, |col| series_from_start_column_o(col, n))
}

/// The same series from facets with m painted diagonal endpoints.
pub fn hilbert_o_covariants_wedge_painted(k: usize, n: usize, m: usize) -> Result<RationalSeries> {
    check_wedge(k, n, m)?;
    Ok(path_decomposition(&enumerate_painted_facets(n, k, m)?, m).series())
}

/// Symplectic covariants of type σ, binned over columns dominating (2, 4, ..., 2k).
pub fn hilbert_sp_covariants(k: usize, n: usize, sigma: &Partition) -> Result<CovariantSeries> {
    if k == 0 || 2 * k > n {
        return Err(Error::domain(format!("Sp covariants need 1 <= k <= n/2, got k={k}, n={n}")));
    }
    if sigma.length() > k {
        return Err(Error::domain(format!("type {sigma} has more than k={k} rows")));
    }
    let admissible = Column::all(n, k)
        .into_iter()
        .filter(|c| c.entries().iter().enumerate().all(|(j, &x)| x >= 2 * (j + 1)))
        .collect();
    let bins = binned(sigma, n, k, BinContext::Sp { n, k }, admissible)?;
    assemble(sigma, bins, |col| series_from_start_column_sp(col, n))
}

