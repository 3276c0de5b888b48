//! Root posets drawn on a grid, their shellings, and corner posets.

#![forbid(unsafe_code)]

pub mod corner;
pub mod finite;
pub mod root_poset;
pub mod shelling;

pub use corner::{classical_corner_poset, reduced_classical, wallach_corner_poset, wallach_reduced};
pub use finite::FinitePoset;
pub use root_poset::{RootPoset, WallachPair};
pub use shelling::{shelled_facets, wallach_series, ShelledFacet};
