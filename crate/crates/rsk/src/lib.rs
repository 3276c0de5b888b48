//! Knuth's RSK correspondence, its symmetric (twin) specialization, Burge's
//! column-insertion variant for upper triangular matrices, and the border
//! peeling of a matrix support into chains and antichains.

#![forbid(unsafe_code)]

mod insertion;
pub mod peel;
pub mod verify;

pub use insertion::{
    rsk_gl, rsk_gl_inverse, rsk_o, rsk_o_inverse, rsk_sp, rsk_sp_inverse, twin_rsk, TableauPair,
};
pub use peel::{peel, PeelDecomposition};
