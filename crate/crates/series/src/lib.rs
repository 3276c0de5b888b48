//! Exact rational-function arithmetic for Hilbert series, and the assembly of
//! invariant and covariant series from enumerated facets. Wherever a second,
//! tableau-based formula is available it is exposed separately so the two can
//! be compared.

#![forbid(unsafe_code)]

pub mod covariants;
pub mod howe;
pub mod invariants;
pub mod poly;
pub mod rational;
pub mod tableau_forms;

pub use covariants::{
    hilbert_gl_covariants, hilbert_o_covariants_wedge, hilbert_o_covariants_wedge_painted, hilbert_sp_covariants,
    series_from_start_column, series_from_start_column_o, series_from_start_column_sp, CovariantSeries,
};
pub use howe::{howe_weight, HoweWeight};
pub use invariants::{
    hilbert_invariants, hilbert_o_semiinvariants, Group, SemiForm, StanleyDecomposition, StanleyTerm,
};
pub use poly::IntPolynomial;
pub use rational::{bernstein_degree, gorenstein_check, RationalSeries, SeriesJson};
