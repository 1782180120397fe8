//! Exact-arithmetic toolkit for tridiagonal pairs of Krawtchouk type.
//!
//! A tridiagonal pair is an ordered pair of diagonalizable matrices, each
//! acting tridiagonally on an ordering of the other's eigenspaces, with no
//! common invariant subspace. The Krawtchouk class has both spectra equal
//! to d, d−2, …, −d. This crate generates such pairs in every admissible
//! shape, verifies the defining axioms instance by instance over exact
//! rationals, computes split decompositions, invariant bilinear forms,
//! isomorphism certificates and Drinfel'd polynomials, and runs a battery
//! of executable conjecture checks against generated corpora.

pub mod constructions;
pub mod conjectures;
pub mod drinfeld;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod pair;
pub mod wire;

pub use error::{Error, Result};
pub use linalg::{Matrix, Poly, Scalar, Vector};
pub use pair::{TdPair, VerificationReport};
