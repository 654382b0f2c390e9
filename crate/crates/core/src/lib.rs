//! Exact computation of initial-degree invariants of fat point schemes on
//! P1 x P1.
//!
//! The crate computes, in exact arithmetic, the dimension h0 of linear
//! systems of bi-homogeneous forms with prescribed vanishing orders at
//! points of P1 x P1, the initial-degree invariants alpha-star and
//! alpha-plus of symbolic powers of point ideals, bounds on Waldschmidt
//! constants, and runs desk-scale verification sweeps of the classification
//! statements relating stagnation of these invariants to grids and fibers.

pub mod geometry;
pub mod invariants;
pub mod linsys;
pub mod matrix;
pub mod presets;
pub mod scalar;
pub mod verifier;

pub use geometry::{FatPointConfig, Fiber, FiberDirection, ProductPoint, ProjCoord};
pub use invariants::{Accel, JumpVector, Variant, WaldschmidtBounds};
pub use linsys::{BiDegree, BiForm, ConditionsMatrix};
pub use matrix::Matrix;
pub use scalar::{Mode, Scalar, DEFAULT_PRIME};
pub use verifier::{EnumSpec, VerifyReport, Violation};
