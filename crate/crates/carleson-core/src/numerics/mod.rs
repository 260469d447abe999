//! Numerical foundation: adaptive quadrature on finite and semi-infinite
//! intervals, Bessel functions, and the one-dimensional Poisson kernel.
//!
//! Everything here is pure and deterministic: series and sums run in a
//! fixed ascending index order with compensated accumulation, so repeated
//! runs produce identical bits.

pub mod bessel;
pub mod poisson;
pub mod quadrature;

pub use bessel::{bessel_i0_integral, bessel_inu, bessel_j1, bessel_jnu};
pub use poisson::poisson_kernel;
pub use quadrature::{
    integrate_adaptive, integrate_adaptive_real, integrate_semiinfinite, IntegralResult,
    QuadratureSpec,
};

use core::fmt;

/// Errors surfaced by the numerics layer.
#[derive(Debug, Clone, PartialEq)]
pub enum NumericsError {
    /// Subdivision budget exhausted before reaching the requested tolerance.
    /// Carries the best value and error estimate reached, for diagnostics.
    NonConvergence {
        value_re: f64,
        value_im: f64,
        error_estimate: f64,
        subdivisions: u32,
    },
    /// `decay_rate <= 0` passed to a semi-infinite rule.
    InvalidDecay,
    /// Ill-formed quadrature request (bad bounds or tolerances).
    InvalidSpec(&'static str),
    /// Argument outside the floating-point range of `exp`.
    Overflow,
    /// Poisson kernel evaluated at height `t <= 0`.
    InvalidHeight,
}

impl fmt::Display for NumericsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericsError::NonConvergence {
                error_estimate,
                subdivisions,
                ..
            } => write!(
                f,
                "quadrature did not converge: error estimate {error_estimate:.3e} after {subdivisions} subdivisions"
            ),
            NumericsError::InvalidDecay => write!(f, "decay rate must be positive"),
            NumericsError::InvalidSpec(msg) => write!(f, "invalid quadrature request: {msg}"),
            NumericsError::Overflow => write!(f, "argument exceeds floating-point range of exp"),
            NumericsError::InvalidHeight => write!(f, "Poisson kernel height must be positive"),
        }
    }
}

impl core::error::Error for NumericsError {}

/// Compensated (Kahan) accumulator for deterministic summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, term: f64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Sums `terms` in ascending index order with compensation.
pub fn kahan_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut acc = KahanSum::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}
