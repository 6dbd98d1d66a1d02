//! Arbitrary-precision rational scalars and exact dense linear algebra.
//!
//! Everything downstream (generator families, the invariant-form solver, the
//! Poisson structure) is built on these two types. All arithmetic is exact;
//! there is no floating point anywhere in the crate, so every comparison in
//! the test suite is a strict equality.

mod matrix;
mod rational;

pub use matrix::{Matrix, SingularMatrixError};
pub use rational::{ParseRationalError, Rational};
