//! Exact rational dense linear algebra kernel.
//!
//! Everything downstream builds on this: arithmetic, row reduction, kernels,
//! characteristic/minimal polynomials, Kronecker products, subspace calculus,
//! and the span of the algebra generated by a pair of matrices.

pub mod algebra;
pub mod charpoly;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use algebra::{generated_algebra_dim, invariant_subspace_witness, word_basis, WordBasis};
pub use charpoly::{char_poly, min_poly};
pub use matrix::{Matrix, Vector};
pub use poly::Poly;
pub use scalar::Scalar;
