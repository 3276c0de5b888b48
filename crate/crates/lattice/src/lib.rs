//! Enumeration of facets of k-th order complexes on the classical posets, as
//! families of k non-intersecting lattice paths, together with their corners
//! and the decorations needed for semiinvariants and covariants: painted
//! endpoints, variable starting points, chains of columns and bins.

#![forbid(unsafe_code)]

pub mod chains;
pub mod classical;
pub mod columns;
pub mod paths;
pub mod region;

pub use chains::{enumerate_column_chains, enumerate_sl_hyperedge_facets, ColumnChain, Side, SlFacet};
pub use classical::{
    corner_counts, enumerate_facets, enumerate_facets_from_starts, enumerate_facets_varied_endpoints,
    enumerate_gl_facets_from_columns, enumerate_painted_facets, enumerate_sp_facets_from_starts,
    sp_corners_with_shadows, Facet, Orientation,
};
pub use columns::{bin_of_chain, column_arrow, column_preceq, sigma_chains, BinContext, SigmaChain};
