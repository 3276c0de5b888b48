//! Shared combinatorial types: partitions, semistandard tableaux, the three
//! classical posets on matrix cells, columns, and exact counting formulas.

#![forbid(unsafe_code)]

pub mod column;
pub mod counting;
pub mod error;
pub mod matrix;
pub mod partition;
pub mod poset;
pub mod tableau;

pub use column::Column;
pub use counting::{binomial, gl_module_dim, syt_count};
pub use error::{Error, Result};
pub use matrix::{for_each_matrix, MatrixKind, NatMatrix};
pub use partition::Partition;
pub use poset::{Cell, ClassicalPoset, Multiset};
pub use tableau::{ssyt_enumerate, SemistandardTableau};
