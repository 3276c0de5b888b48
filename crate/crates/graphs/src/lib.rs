//! Arc diagrams (with hyperedges and painted vertices) as bases of invariant
//! rings, counted by direct enumeration. Nothing here depends on the
//! lattice-path machinery, so the counts serve as an independent check of it.

#![forbid(unsafe_code)]

pub mod count;
pub mod diagram;
pub mod limits;

pub use count::{count_tensor_invariants, graded_dimension_by_graphs, graded_dimensions_by_graphs, GraphGroup};
pub use diagram::{diagram_width, validate_so_painting, validate_sl_hyperedges, ArcDiagram, DiagramKind, HyperedgeSide};
pub use limits::Limits;
