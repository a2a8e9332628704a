//! Exact 2x2 matrices and their orientation-preserving action on the
//! rational projective line.

mod catalog;
mod matrix;

pub use catalog::{
    classic_pairs, quadrant_arc, sl2_example_certificate, ClassicPair, ConstraintError, Sl2Params,
};
pub use matrix::{Matrix2, MatrixError};
