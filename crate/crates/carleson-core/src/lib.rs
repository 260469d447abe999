#![cfg_attr(not(test), no_std)]
// Validation uses the `!(x > 0.0)` form throughout: unlike `x <= 0.0`
// it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Numerical verification of Carleson-measure admissibility criteria for
//! diagonal control systems on the half-plane.
//!
//! The crate is `no_std` (with `alloc`): it contains only pure
//! computation. File formats, CLI, and reports live in the companion
//! `carleson-cli` crate.

extern crate alloc;

pub mod kernels;
pub mod measures;
pub mod numerics;
pub mod reciprocal;
pub mod systems;

pub use kernels::{HalfPlanePoint, RktReport};
pub use measures::{CarlesonReport, DiscreteMeasure, HalfPlaneAtom, Interval};
pub use numerics::quadrature::{IntegralResult, QuadratureSpec};
pub use systems::{DiagonalSystem, InputSignal, ProbeReport};
