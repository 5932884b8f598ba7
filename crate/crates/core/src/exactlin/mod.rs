//! Exact linear algebra over the rationals: matrices, canonical subspaces,
//! kernels and characteristic polynomials.

mod charpoly;
mod matrix;
mod rational;
mod subspace;

pub use charpoly::{char_poly, rank_sequence, Polynomial};
pub use matrix::Matrix;
pub use rational::{
    add_vectors, format_rational, format_vector, int, is_zero_vector, parse_rational, ratio,
    scale_vector, sub_vectors, unit_vector, zero_vector, Rational, Vector,
};
pub(crate) use rational::axpy;
pub use subspace::{subspace_ops, SpanBuilder, Subspace, SubspaceOps};
