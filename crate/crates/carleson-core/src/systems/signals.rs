//! Analytic input families with closed-form convolutions, Laplace
//! transforms, and L^p norms. No quadrature enters any admissibility
//! statistic computed from these.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use super::SystemError;
use crate::numerics::KahanSum;

/// `(e^w - 1) / w`, series-stable near `w = 0`.
pub(crate) fn expm1_over(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        // 1 + w/2 + w^2/6 + w^3/24 + w^4/120; next term ~ 1e-22
        let mut acc = Complex64::new(1.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for k in 2..=5 {
            term *= w / (k as f64);
            acc += term;
        }
        acc
    } else {
        (w.exp() - 1.0) / w
    }
}

/// An input signal supported on `[0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub enum InputSignal {
    /// `u(s) = e^{-s conj(z)}` with `Re z > 0`.
    TruncatedExponential { z: Complex64 },
    /// `u(s) = 1` on `[0, tau]`.
    Indicator { tau: f64 },
    /// Piecewise constant: `values[i]` on `[breakpoints[i], breakpoints[i+1])`,
    /// zero outside `[breakpoints[0], breakpoints[last])`.
    StepFunction {
        breakpoints: Vec<f64>,
        values: Vec<Complex64>,
    },
}

impl InputSignal {
    pub fn exponential(z: Complex64) -> Result<Self, SystemError> {
        if !(z.re > 0.0) || !z.re.is_finite() || !z.im.is_finite() {
            return Err(SystemError::InvalidInput("exponential rate needs Re z > 0"));
        }
        Ok(InputSignal::TruncatedExponential { z })
    }

    pub fn indicator(tau: f64) -> Result<Self, SystemError> {
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(SystemError::InvalidInput(
                "indicator length must be positive",
            ));
        }
        Ok(InputSignal::Indicator { tau })
    }

    pub fn step(breakpoints: Vec<f64>, values: Vec<Complex64>) -> Result<Self, SystemError> {
        if breakpoints.len() < 2 || values.len() + 1 != breakpoints.len() {
            return Err(SystemError::InvalidInput(
                "need k+1 breakpoints for k step values",
            ));
        }
        if breakpoints[0] < 0.0 {
            return Err(SystemError::InvalidInput("support must lie in [0, inf)"));
        }
        if breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(SystemError::InvalidInput(
                "breakpoints must be strictly increasing",
            ));
        }
        if breakpoints.iter().any(|b| !b.is_finite()) {
            return Err(SystemError::InvalidInput("breakpoints must be finite"));
        }
        Ok(InputSignal::StepFunction {
            breakpoints,
            values,
        })
    }

    /// Pointwise value `u(s)`.
    pub fn eval(&self, s: f64) -> Complex64 {
        if s < 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        match self {
            InputSignal::TruncatedExponential { z } => (-z.conj() * s).exp(),
            InputSignal::Indicator { tau } => {
                if s <= *tau {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            InputSignal::StepFunction {
                breakpoints,
                values,
            } => {
                if s < breakpoints[0] || s >= breakpoints[breakpoints.len() - 1] {
                    return Complex64::new(0.0, 0.0);
                }
                let idx = breakpoints.partition_point(|&b| b <= s) - 1;
                values[idx.min(values.len() - 1)]
            }
        }
    }

    /// The modulus signal `|u|`: same support, values `|u(s)|`.
    /// For the exponential variant this is the real exponential with rate
    /// `Re z`.
    pub fn modulus(&self) -> InputSignal {
        match self {
            InputSignal::TruncatedExponential { z } => InputSignal::TruncatedExponential {
                z: Complex64::new(z.re, 0.0),
            },
            InputSignal::Indicator { tau } => InputSignal::Indicator { tau: *tau },
            InputSignal::StepFunction {
                breakpoints,
                values,
            } => InputSignal::StepFunction {
                breakpoints: breakpoints.clone(),
                values: values
                    .iter()
                    .map(|v| Complex64::new(v.norm(), 0.0))
                    .collect(),
            },
        }
    }

    /// `int_0^t e^{-lambda (t-s)} u(s) ds`, closed form per piece.
    pub fn convolve_exp(&self, lambda: Complex64, t: f64) -> Complex64 {
        if t <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        match self {
            InputSignal::TruncatedExponential { z } => {
                // e^{-lambda t} * int_0^t e^{(lambda - conj z) s} ds
                let w = (lambda - z.conj()) * t;
                (-lambda * t).exp() * t * expm1_over(w)
            }
            InputSignal::Indicator { tau } => {
                let m = t.min(*tau);
                // e^{-lambda(t-m)} (1 - e^{-lambda m}) / lambda
                (-lambda * (t - m)).exp() * m * expm1_over(-lambda * m)
            }
            InputSignal::StepFunction {
                breakpoints,
                values,
            } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (i, v) in values.iter().enumerate() {
                    let a = breakpoints[i];
                    let b = breakpoints[i + 1].min(t);
                    if a >= b {
                        continue;
                    }
                    // int_a^b e^{-lambda(t-s)} ds
                    let seg = (-lambda * (t - b)).exp() * (b - a) * expm1_over(-lambda * (b - a));
                    acc += v * seg;
                }
                acc
            }
        }
    }

    /// Laplace transform `int_0^inf e^{-lambda s} u(s) ds`.
    pub fn laplace(&self, lambda: Complex64) -> Complex64 {
        match self {
            InputSignal::TruncatedExponential { z } => {
                Complex64::new(1.0, 0.0) / (lambda + z.conj())
            }
            InputSignal::Indicator { tau } => *tau * expm1_over(-lambda * *tau),
            InputSignal::StepFunction {
                breakpoints,
                values,
            } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (i, v) in values.iter().enumerate() {
                    let a = breakpoints[i];
                    let d = breakpoints[i + 1] - a;
                    acc += v * (-lambda * a).exp() * d * expm1_over(-lambda * d);
                }
                acc
            }
        }
    }

    /// `L^p` norm on `[0, horizon]` (`None` meaning `[0, ∞)`), closed form.
    pub fn lp_norm(&self, p: f64, horizon: Option<f64>) -> Result<f64, SystemError> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(SystemError::InvalidInput("p must be >= 1"));
        }
        match self {
            InputSignal::TruncatedExponential { z } => {
                let rate = p * z.re;
                match horizon {
                    None => Ok(rate.powf(-1.0 / p)),
                    Some(h) => {
                        let mass = (1.0 - (-rate * h).exp()) / rate;
                        Ok(mass.powf(1.0 / p))
                    }
                }
            }
            InputSignal::Indicator { tau } => {
                let len = horizon.map_or(*tau, |h| tau.min(h));
                Ok(len.powf(1.0 / p))
            }
            InputSignal::StepFunction {
                breakpoints,
                values,
            } => {
                let mut acc = KahanSum::new();
                for (i, v) in values.iter().enumerate() {
                    let a = horizon.map_or(breakpoints[i], |h| breakpoints[i].min(h));
                    let b = horizon.map_or(breakpoints[i + 1], |h| breakpoints[i + 1].min(h));
                    if b > a {
                        acc.add(v.norm().powf(p) * (b - a));
                    }
                }
                Ok(acc.value().powf(1.0 / p))
            }
        }
    }

    /// Short human-readable description, used in probe reports.
    pub fn describe(&self) -> String {
        match self {
            InputSignal::TruncatedExponential { z } => {
                format!("exp(-s*conj({:+.6e}{:+.6e}i))", z.re, z.im)
            }
            InputSignal::Indicator { tau } => format!("indicator[0,{tau:.6e}]"),
            InputSignal::StepFunction { breakpoints, .. } => {
                format!("step({} pieces)", breakpoints.len() - 1)
            }
        }
    }
}
