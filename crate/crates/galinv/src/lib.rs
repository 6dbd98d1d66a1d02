//! Exact computation of the bilinear forms left invariant by families of
//! linear transformations on classical spacetime, the analysis of those
//! forms, and the Poisson bracket carried by their antisymmetric part.
//!
//! All arithmetic is over arbitrary-precision rationals; every operation is
//! a pure function on immutable values, and all printed output is
//! deterministic. The flagship instance is the family of boosts
//! `(x⃗, t) ↦ (x⃗ + v⃗t, t)` together with the spatial rotations; the solver
//! recovers the invariant-form family parametrized by a spatial vector `a⃗`
//! and a scalar `a⁰`, and the `poisson` module turns its antisymmetric part
//! into a bracket on polynomial observables via the exact Moore–Penrose
//! pseudo-inverse.

pub mod exact;
pub mod forms;
pub mod groups;
pub mod invariants;
pub mod io;
pub mod poisson;
pub mod poly;
pub mod report;

pub use exact::{Matrix, Rational};
pub use forms::{BilinearForm, FourVector, GalileanParameters};
pub use invariants::{FormBasis, InvarianceProblem};
pub use poisson::PoissonStructure;
pub use poly::Polynomial;
