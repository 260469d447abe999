//! Reciprocal systems `z' + A^{-1} z = A^{-1} b u`: diagonal trajectories
//! of the inverse generator, the Laplace-pair representation identities
//! with Bessel kernels, the finite-time constant `C_T`, and the growth
//! bound on the inner Bessel norm.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::bessel::{bessel_inu, bessel_j1, bessel_jnu};
use crate::numerics::quadrature::{
    integrate_adaptive, truncation_point, IntegralResult, QuadratureSpec,
};
use crate::numerics::{KahanSum, NumericsError};
use crate::systems::{DiagonalSystem, InputSignal, ProbeReport, SystemError};

/// Errors from the reciprocal-system functionals.
#[derive(Debug, Clone, PartialEq)]
pub enum ReciprocalError {
    InvalidParameters(&'static str),
    Quadrature(NumericsError),
    System(SystemError),
}

impl fmt::Display for ReciprocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReciprocalError::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            ReciprocalError::Quadrature(e) => write!(f, "quadrature failure: {e}"),
            ReciprocalError::System(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReciprocalError {}

impl From<NumericsError> for ReciprocalError {
    fn from(e: NumericsError) -> Self {
        ReciprocalError::Quadrature(e)
    }
}

impl From<SystemError> for ReciprocalError {
    fn from(e: SystemError) -> Self {
        ReciprocalError::System(e)
    }
}

/// State of the reciprocal semigroup at time `t`: components `e^{-t/lambda_n}`.
pub fn inverse_state(sys: &DiagonalSystem, t: f64) -> Result<Vec<Complex64>, ReciprocalError> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(ReciprocalError::InvalidParameters("t must be non-negative"));
    }
    Ok(sys.lambdas().iter().map(|l| (-l.inv() * t).exp()).collect())
}

/// Which scalar Laplace-pair identity to verify.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BesselVariant {
    /// `e^{-t/lambda} = 1 - int_0^inf sqrt(t/s) J_1(2 sqrt(st)) e^{-lambda s} ds`
    Zwart,
    /// `lambda^{-1/2} e^{-t/lambda} = int_0^inf (pi s)^{-1/2} cos(2 sqrt(st)) e^{-lambda s} ds`
    Half,
    /// `lambda^{-nu-1} e^{-t/lambda} = int_0^inf (s/t)^{nu/2} J_nu(2 sqrt(st)) e^{-lambda s} ds`,
    /// `nu > -1`.
    Power(f64),
}

impl BesselVariant {
    pub fn name(&self) -> &'static str {
        match self {
            BesselVariant::Zwart => "zwart",
            BesselVariant::Half => "half",
            BesselVariant::Power(_) => "power",
        }
    }
}

/// One verified identity instance: both sides and their distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselIdentityReport {
    pub lambda: Complex64,
    pub t: f64,
    pub variant: BesselVariant,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

fn check_lambda(lambda: Complex64) -> Result<(), ReciprocalError> {
    if !(lambda.re > 0.0) || !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(ReciprocalError::InvalidParameters("require Re lambda > 0"));
    }
    Ok(())
}

fn semiinfinite_with_truncation<F: Fn(f64) -> Complex64>(
    f: F,
    s_max: f64,
    decay: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult, NumericsError> {
    let tail = f(s_max).norm() / decay;
    let mut r = integrate_adaptive(&f, 0.0, s_max, spec)?;
    r.error_estimate += tail;
    Ok(r)
}

/// Verifies one representation identity by semi-infinite quadrature and
/// reports the residual `|lhs - rhs|`.
pub fn bessel_identity_residual(
    lambda: Complex64,
    t: f64,
    variant: BesselVariant,
    spec: &QuadratureSpec,
) -> Result<BesselIdentityReport, ReciprocalError> {
    check_lambda(lambda)?;
    if !(t >= 0.0) || !t.is_finite() {
        return Err(ReciprocalError::InvalidParameters("t must be non-negative"));
    }
    let decay = lambda.re;
    let exp_inv = (-lambda.inv() * t).exp();

    let (lhs, rhs) = match variant {
        BesselVariant::Zwart => {
            let lhs = exp_inv;
            let rhs = if t == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                let integrand = |s: f64| -> Complex64 {
                    (t / s).sqrt() * bessel_j1(2.0 * (s * t).sqrt()) * (-lambda * s).exp()
                };
                let integral = semiinfinite_with_truncation(
                    integrand,
                    truncation_point(decay, spec.abs_tol),
                    decay,
                    spec,
                )?;
                Complex64::new(1.0, 0.0) - integral.value
            };
            (lhs, rhs)
        }
        BesselVariant::Half => {
            let lhs = lambda.powf(-0.5) * exp_inv;
            let integrand = |s: f64| -> Complex64 {
                (core::f64::consts::PI * s).powf(-0.5)
                    * (2.0 * (s * t).sqrt()).cos()
                    * (-lambda * s).exp()
            };
            let integral = semiinfinite_with_truncation(
                integrand,
                truncation_point(decay, spec.abs_tol),
                decay,
                spec,
            )?;
            (lhs, integral.value)
        }
        BesselVariant::Power(nu) => {
            if !(nu > -1.0) || !nu.is_finite() {
                return Err(ReciprocalError::InvalidParameters("require nu > -1"));
            }
            let lhs = lambda.powf(-nu - 1.0) * exp_inv;
            // Conservative truncation absorbing kernel growth up to
            // e^{2 sqrt(st)}: s_max solves Re(lambda) s - 2 sqrt(st) =
            // 40 + |ln tol|.
            let budget = 40.0 + spec.abs_tol.ln().abs();
            let u = (t.sqrt() + (t + decay * budget).sqrt()) / decay;
            let s_max = u * u;
            let gamma_nu1 = libm::tgamma(nu + 1.0);
            let integrand = |s: f64| -> Complex64 {
                let kernel = if t == 0.0 {
                    s.powf(nu) / gamma_nu1
                } else {
                    (s / t).powf(0.5 * nu)
                        * bessel_jnu(nu, 2.0 * (s * t).sqrt()).unwrap_or(f64::NAN)
                };
                kernel * (-lambda * s).exp()
            };
            let integral = semiinfinite_with_truncation(integrand, s_max, decay, spec)?;
            (lhs, integral.value)
        }
    };

    Ok(BesselIdentityReport {
        lambda,
        t,
        variant,
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
    })
}

/// Integrability exponent for [`c_t_constant`]: finite `p >= 1` or `p = ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeExponent {
    Finite(f64),
    Infinity,
}

/// The finite-time admissibility constant of the reciprocal estimate:
///
/// `C_T = || t -> e^{-eps t} || s -> I_0(2 sqrt(st)) ||_{L^p(0,T)} ||_{L^p(0,∞)}`.
///
/// The damping is pulled inside the inner integral so each evaluation of
/// `e^{-eps t} I_0(2 sqrt(st))` stays in floating-point range; the outer
/// integral is truncated where `p eps t - 2 p sqrt(tT)` exceeds the decay
/// budget. For `p = ∞` the inner norm is `I_0(2 sqrt(tT))` and the outer
/// norm is a sup, located by scan plus golden-section refinement.
pub fn c_t_constant(
    p: TimeExponent,
    epsilon: f64,
    t_horizon: f64,
    spec: &QuadratureSpec,
) -> Result<f64, ReciprocalError> {
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(ReciprocalError::InvalidParameters(
            "epsilon must be positive",
        ));
    }
    if !(t_horizon > 0.0) || !t_horizon.is_finite() {
        return Err(ReciprocalError::InvalidParameters("T must be positive"));
    }

    match p {
        TimeExponent::Finite(p) => {
            if !(p >= 1.0) || !p.is_finite() {
                return Err(ReciprocalError::InvalidParameters("p must be >= 1"));
            }
            let budget = 40.0 + spec.abs_tol.ln().abs();
            // p eps t - 2 p sqrt(t T) = budget, quadratic in sqrt(t)
            let disc = p * p * t_horizon + p * epsilon * budget;
            let u = (p * t_horizon.sqrt() + disc.sqrt()) / (p * epsilon);
            let t_max = u * u;
            if 2.0 * (t_max * t_horizon).sqrt() > 700.0 {
                return Err(ReciprocalError::Quadrature(NumericsError::Overflow));
            }
            let inner = |t: f64| -> Result<f64, NumericsError> {
                let weight = (-epsilon * t).exp();
                let r = integrate_adaptive(
                    |s| {
                        let v = weight * bessel_inu(0.0, 2.0 * (s * t).sqrt()).unwrap_or(f64::NAN);
                        Complex64::new(v.powf(p), 0.0)
                    },
                    0.0,
                    t_horizon,
                    spec,
                )?;
                Ok(r.re().max(0.0))
            };
            // Nested quadrature: the inner integral is evaluated at every
            // outer node. Inner failures surface as NaN and poison the
            // outer value, so they cannot pass silently.
            let outer = semiinfinite_with_truncation(
                |t| Complex64::new(inner(t).unwrap_or(f64::NAN), 0.0),
                t_max,
                p * epsilon,
                spec,
            )?;
            let value = outer.re();
            if !value.is_finite() {
                return Err(ReciprocalError::Quadrature(NumericsError::NonConvergence {
                    value_re: value,
                    value_im: 0.0,
                    error_estimate: f64::INFINITY,
                    subdivisions: outer.subdivisions_used,
                }));
            }
            Ok(value.max(0.0).powf(1.0 / p))
        }
        TimeExponent::Infinity => {
            let g = |t: f64| -> f64 {
                (-epsilon * t).exp()
                    * bessel_inu(0.0, 2.0 * (t * t_horizon).sqrt()).unwrap_or(f64::NAN)
            };
            let budget = 40.0 + spec.abs_tol.ln().abs();
            let disc = t_horizon + epsilon * budget;
            let u = (t_horizon.sqrt() + disc.sqrt()) / epsilon;
            let t_max = (u * u).max(1.0);
            if 2.0 * (t_max * t_horizon).sqrt() > 700.0 {
                return Err(ReciprocalError::Quadrature(NumericsError::Overflow));
            }
            let n = 400;
            let mut best_t = 0.0;
            let mut best = 1.0; // g(0) = I_0(0) = 1
            for k in 0..=n {
                let t = t_max * (k as f64) / (n as f64);
                let v = g(t);
                if v > best {
                    best = v;
                    best_t = t;
                }
            }
            let width = t_max / (n as f64);
            let (mut lo, mut hi) = ((best_t - width).max(0.0), best_t + width);
            let inv_phi = 0.618_033_988_749_894_9_f64;
            let mut c = hi - inv_phi * (hi - lo);
            let mut d = lo + inv_phi * (hi - lo);
            let (mut fc, mut fd) = (g(c), g(d));
            for _ in 0..200 {
                if fc >= fd {
                    hi = d;
                    d = c;
                    fd = fc;
                    c = hi - inv_phi * (hi - lo);
                    fc = g(c);
                } else {
                    lo = c;
                    c = d;
                    fc = fd;
                    d = lo + inv_phi * (hi - lo);
                    fd = g(d);
                }
            }
            Ok(best.max(fc).max(fd))
        }
    }
}

/// Both sides of the inner-norm growth bound: the actual
/// `f(t) = int_0^T I_0(2 sqrt(st))^p ds` against the displayed majorant
/// `(2/(t p^2)) (1 + e^{p sqrt(tT)} (p sqrt(tT) - 1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FBoundReport {
    pub f_value: f64,
    pub bound: f64,
    pub holds: bool,
}

/// Evaluates `f(t)` by quadrature and compares with the majorant.
pub fn f_bound_check(
    t: f64,
    p: f64,
    t_horizon: f64,
    spec: &QuadratureSpec,
) -> Result<FBoundReport, ReciprocalError> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(ReciprocalError::InvalidParameters("t must be positive"));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(ReciprocalError::InvalidParameters("p must be >= 1"));
    }
    if !(t_horizon > 0.0) || !t_horizon.is_finite() {
        return Err(ReciprocalError::InvalidParameters("T must be positive"));
    }
    if 2.0 * p * (t * t_horizon).sqrt() > 700.0 {
        return Err(ReciprocalError::Quadrature(NumericsError::Overflow));
    }
    let f_value = integrate_adaptive(
        |s| {
            let v = bessel_inu(0.0, 2.0 * (s * t).sqrt()).unwrap_or(f64::NAN);
            Complex64::new(v.powf(p), 0.0)
        },
        0.0,
        t_horizon,
        spec,
    )?
    .re();
    let x = p * (t * t_horizon).sqrt();
    let bound = 2.0 / (t * p * p) * (1.0 + x.exp() * (x - 1.0));
    Ok(FBoundReport {
        f_value,
        bound,
        holds: f_value <= bound,
    })
}

/// Finite-time probe for the reciprocal system:
/// `|| (int_0^T e^{-s/lambda_n} (b_n/lambda_n) u(s) ds)_n ||_{l_q}`
/// over `||u||_{L^{p'}(0,T)}`, with per-mode quadrature on `[0, T]`.
pub fn reciprocal_probe(
    sys: &DiagonalSystem,
    u: &InputSignal,
    t_horizon: f64,
    p_prime: f64,
    spec: &QuadratureSpec,
) -> Result<ProbeReport, ReciprocalError> {
    if !(t_horizon > 0.0) || !t_horizon.is_finite() {
        return Err(ReciprocalError::InvalidParameters("T must be positive"));
    }
    if !(p_prime >= 1.0) || !p_prime.is_finite() {
        return Err(ReciprocalError::InvalidParameters("p' must be >= 1"));
    }
    let denom = u.lp_norm(p_prime, Some(t_horizon))?;
    if denom == 0.0 {
        return Ok(ProbeReport {
            ratio: 0.0,
            witness_input: u.describe(),
            p: p_prime,
            time_horizon: Some(t_horizon),
        });
    }
    let mut acc = KahanSum::new();
    for (lambda, b) in sys.lambdas().iter().zip(sys.b()) {
        let inv = lambda.inv();
        let integral = integrate_adaptive(|s| (-inv * s).exp() * u.eval(s), 0.0, t_horizon, spec)?;
        acc.add(((b / lambda) * integral.value).norm().powf(sys.q()));
    }
    let numer = acc.value().powf(1.0 / sys.q());
    Ok(ProbeReport {
        ratio: numer / denom,
        witness_input: u.describe(),
        p: p_prime,
        time_horizon: Some(t_horizon),
    })
}

#[cfg(test)]
mod tests;
