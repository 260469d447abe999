//! Reproducing kernels `k_z(lambda) = 1/(lambda + conj z)` of Hardy spaces
//! on the right half-plane: exact H^p norms, L^q norms against discrete
//! measures, and the reproducing-kernel-thesis ratio statistic.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use crate::measures::{candidate_tents, DiscreteMeasure};
use crate::numerics::quadrature::{integrate_adaptive_real, QuadratureSpec};
use crate::numerics::{KahanSum, NumericsError};

/// Errors from the kernel functionals.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelError {
    EmptyMeasure,
    InvalidExponent(&'static str),
    InvalidPoint(&'static str),
    Quadrature(NumericsError),
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::EmptyMeasure => write!(f, "measure has no atoms"),
            KernelError::InvalidExponent(msg) => write!(f, "invalid exponent: {msg}"),
            KernelError::InvalidPoint(msg) => write!(f, "invalid half-plane point: {msg}"),
            KernelError::Quadrature(e) => write!(f, "quadrature failure: {e}"),
        }
    }
}

impl core::error::Error for KernelError {}

impl From<NumericsError> for KernelError {
    fn from(e: NumericsError) -> Self {
        KernelError::Quadrature(e)
    }
}

/// A point `z` of the open right half-plane, `Re z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    pub re: f64,
    pub im: f64,
}

impl HalfPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self, KernelError> {
        if !(re > 0.0) || !re.is_finite() || !im.is_finite() {
            return Err(KernelError::InvalidPoint("require finite re > 0"));
        }
        Ok(Self { re, im })
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn check_exponent(p: f64) -> Result<(), KernelError> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(KernelError::InvalidExponent("exponent must exceed 1"));
    }
    Ok(())
}

/// Dual exponent `p'` with `1/p + 1/p' = 1`.
pub fn dual_exponent(p: f64) -> f64 {
    p / (p - 1.0)
}

/// `C_p = (int_R (1+t^2)^{-p/2} dt)^{1/p}`, evaluated by quadrature after
/// the substitution `t = tan(theta)` which maps the line onto
/// `(-pi/2, pi/2)` with integrand `cos(theta)^{p-2}`.
pub fn cp_constant(p: f64, spec: &QuadratureSpec) -> Result<f64, KernelError> {
    check_exponent(p)?;
    let half = integrate_adaptive_real(
        |theta| theta.cos().powf(p - 2.0),
        0.0,
        core::f64::consts::FRAC_PI_2,
        spec,
    )?;
    Ok((2.0 * half.re()).powf(1.0 / p))
}

/// Exact Hardy-space norm `||k_z||_{H^p} = C_p (Re z)^{-1/p'}`.
pub fn repkernel_hp_norm(
    z: HalfPlanePoint,
    p: f64,
    spec: &QuadratureSpec,
) -> Result<f64, KernelError> {
    check_exponent(p)?;
    let cp = cp_constant(p, spec)?;
    Ok(cp * z.re.powf(-1.0 / dual_exponent(p)))
}

/// `||k_z||_{L^q(mu)} = (sum_n w_n |1/(lambda_n + conj z)|^q)^{1/q}` with
/// `lambda_n = t_n + i x_n`; exact finite sum in atom order.
pub fn repkernel_lq_mu_norm(
    z: HalfPlanePoint,
    q: f64,
    mu: &DiscreteMeasure,
) -> Result<f64, KernelError> {
    check_exponent(q)?;
    let zbar = z.to_complex().conj();
    let mut acc = KahanSum::new();
    for a in mu.atoms() {
        let lambda = Complex64::new(a.t, a.x);
        acc.add(a.w * (lambda + zbar).norm().powf(-q));
    }
    Ok(acc.value().powf(1.0 / q))
}

/// Integrated unit-height Poisson kernel over the unit ball,
/// `eps_1 = int_{-1}^{1} P_1(y) dy = 1/2`.
pub fn epsilon_d_constant() -> f64 {
    0.5
}

/// Probe set for the RKT ratio sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ZGridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub n_re: usize,
    pub im_max: f64,
    pub n_im: usize,
    /// Also probe the apexes `r + i omega` of the measure's candidate
    /// tents; with these included the Lemma chain below is exact.
    pub include_tent_apexes: bool,
}

impl ZGridSpec {
    /// Default grid for a measure. The window covers `Re` in
    /// `[min t / 10, 10 max(t + |x|)]` and the atom hull symmetrically in
    /// `Im`, with extra margin: the ratio decays only like `Re^{-1/p}`
    /// towards the window edges, and the boundary guard wants the edge
    /// ratio below half the interior maximum.
    pub fn for_measure(
        mu: &DiscreteMeasure,
        n_re: usize,
        n_im: usize,
    ) -> Result<Self, KernelError> {
        if mu.is_empty() {
            return Err(KernelError::EmptyMeasure);
        }
        let mut t_min = f64::INFINITY;
        let mut reach: f64 = 0.0;
        for a in mu.atoms() {
            t_min = t_min.min(a.t);
            reach = reach.max(a.t + a.x.abs());
        }
        Ok(Self {
            re_min: t_min / 50.0,
            re_max: 50.0 * reach,
            n_re,
            im_max: 12.0 * reach,
            n_im,
            include_tent_apexes: true,
        })
    }

    fn points(&self, mu: &DiscreteMeasure) -> Vec<HalfPlanePoint> {
        let mut pts = Vec::new();
        let log_lo = self.re_min.ln();
        let log_hi = self.re_max.ln();
        for i in 0..self.n_re {
            let f = if self.n_re == 1 {
                0.0
            } else {
                (i as f64) / ((self.n_re - 1) as f64)
            };
            let re = (log_lo + f * (log_hi - log_lo)).exp();
            for j in 0..self.n_im {
                let g = if self.n_im == 1 {
                    0.5
                } else {
                    (j as f64) / ((self.n_im - 1) as f64)
                };
                let im = -self.im_max + 2.0 * self.im_max * g;
                pts.push(HalfPlanePoint { re, im });
            }
        }
        if self.include_tent_apexes {
            for tent in candidate_tents(mu) {
                pts.push(HalfPlanePoint {
                    re: tent.r(),
                    im: tent.omega(),
                });
            }
        }
        pts
    }
}

/// Result of the reproducing-kernel-thesis sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RktReport {
    pub sup_ratio: f64,
    pub witness_z: HalfPlanePoint,
    pub grid_description: String,
    /// Set when the ratio at the grid boundary exceeds half the interior
    /// maximum, indicating the sweep window may clip the true sup.
    pub grid_too_small: bool,
}

/// Sweeps `||k_z||_{L^q(mu)} / ||k_z||_{H^p}` over the probe set and
/// reports the maximal ratio with its witness.
pub fn rkt_sup(
    mu: &DiscreteMeasure,
    p: f64,
    q: f64,
    grid: &ZGridSpec,
    spec: &QuadratureSpec,
) -> Result<RktReport, KernelError> {
    if mu.is_empty() {
        return Err(KernelError::EmptyMeasure);
    }
    check_exponent(p)?;
    check_exponent(q)?;
    let cp = cp_constant(p, spec)?;
    let inv_dual = 1.0 / dual_exponent(p);

    let mut best = f64::NEG_INFINITY;
    let mut witness = HalfPlanePoint { re: 1.0, im: 0.0 };
    let mut boundary_best: f64 = 0.0;
    let points = grid.points(mu);
    for z in &points {
        let lq = repkernel_lq_mu_norm(*z, q, mu)?;
        let hp = cp * z.re.powf(-inv_dual);
        let ratio = lq / hp;
        if ratio > best {
            best = ratio;
            witness = *z;
        }
        let on_boundary = z.re <= grid.re_min * (1.0 + 1e-12)
            || z.re >= grid.re_max * (1.0 - 1e-12)
            || z.im.abs() >= grid.im_max * (1.0 - 1e-12);
        if on_boundary {
            boundary_best = boundary_best.max(ratio);
        }
    }

    Ok(RktReport {
        sup_ratio: best,
        witness_z: witness,
        grid_description: format!(
            "re: {} log-spaced points on [{:.6e}, {:.6e}]; im: {} points on [{:.6e}, {:.6e}]; tent apexes: {}",
            grid.n_re, grid.re_min, grid.re_max, grid.n_im, -grid.im_max, grid.im_max,
            grid.include_tent_apexes
        ),
        grid_too_small: boundary_best > 0.5 * best,
    })
}

#[cfg(test)]
mod tests;
