//! Diagonal control systems `x' + Ax = b u` on `l_q`: the discrete
//! measures of the two admissibility criteria, admissibility probe
//! functionals for analytic inputs, extrapolation norms, the Weiss-set
//! sup, square-function norms, and the vector-valued extension.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use crate::measures::{DiscreteMeasure, HalfPlaneAtom, Interval};
use crate::numerics::quadrature::{integrate_semiinfinite, QuadratureSpec};
use crate::numerics::{KahanSum, NumericsError};

mod signals;

pub use signals::InputSignal;

/// Errors from system construction and the admissibility functionals.
#[derive(Debug, Clone, PartialEq)]
pub enum SystemError {
    EmptySystem,
    EmptyFamily,
    ShapeMismatch(&'static str),
    ExponentOrder,
    SectorViolation,
    DivergentParameters,
    InvalidSystem(&'static str),
    InvalidInput(&'static str),
    Quadrature(NumericsError),
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::EmptySystem => write!(f, "system has no modes"),
            SystemError::EmptyFamily => write!(f, "input family is empty"),
            SystemError::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            SystemError::ExponentOrder => write!(f, "requires p <= q"),
            SystemError::SectorViolation => write!(f, "eigenvalues not in a proper sector"),
            SystemError::DivergentParameters => {
                write!(f, "ring sum diverges: requires theta > 1/p'")
            }
            SystemError::InvalidSystem(msg) => write!(f, "invalid system: {msg}"),
            SystemError::InvalidInput(msg) => write!(f, "invalid input signal: {msg}"),
            SystemError::Quadrature(e) => write!(f, "quadrature failure: {e}"),
        }
    }
}

impl core::error::Error for SystemError {}

impl From<NumericsError> for SystemError {
    fn from(e: NumericsError) -> Self {
        SystemError::Quadrature(e)
    }
}

/// A diagonal system: eigenvalues `lambda_n` of `A` (all in the open right
/// half-plane), input coefficients `b_n`, and the state exponent `q` of
/// the sequence space `l_q`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalSystem {
    lambdas: Vec<Complex64>,
    b: Vec<Complex64>,
    q: f64,
}

impl DiagonalSystem {
    pub fn new(lambdas: Vec<Complex64>, b: Vec<Complex64>, q: f64) -> Result<Self, SystemError> {
        if lambdas.len() != b.len() {
            return Err(SystemError::ShapeMismatch(
                "eigenvalue and coefficient counts differ",
            ));
        }
        if !(q > 1.0) || !q.is_finite() {
            return Err(SystemError::InvalidSystem("q must exceed 1"));
        }
        for l in &lambdas {
            if !(l.re > 0.0) || !l.re.is_finite() || !l.im.is_finite() {
                return Err(SystemError::InvalidSystem("eigenvalues need Re > 0"));
            }
        }
        for c in &b {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(SystemError::InvalidSystem("coefficients must be finite"));
            }
        }
        Ok(Self { lambdas, b, q })
    }

    pub fn lambdas(&self) -> &[Complex64] {
        &self.lambdas
    }

    pub fn b(&self) -> &[Complex64] {
        &self.b
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Smallest sector half-angle containing every eigenvalue.
    pub fn sector_angle(&self) -> f64 {
        let mut theta: f64 = 0.0;
        for l in &self.lambdas {
            theta = theta.max((l.im.abs() / l.re).atan());
        }
        theta
    }
}

/// `l_q` norm of non-negative `terms^q`-summands, fixed order.
fn lq_norm<I: Iterator<Item = f64>>(moduli: I, q: f64) -> f64 {
    let mut acc = KahanSum::new();
    for m in moduli {
        acc.add(m.powf(q));
    }
    acc.value().powf(1.0 / q)
}

/// The discrete measure `mu = sum_n |b_n|^q delta_{lambda_n}` of the
/// Laplace-transform criterion. Zero-weight modes are dropped.
pub fn poisson_measure(sys: &DiagonalSystem) -> DiscreteMeasure {
    let atoms = sys
        .lambdas
        .iter()
        .zip(&sys.b)
        .filter(|(_, b)| b.norm() > 0.0)
        .map(|(l, b)| HalfPlaneAtom {
            x: l.im,
            t: l.re,
            w: b.norm().powf(sys.q),
        })
        .collect();
    DiscreteMeasure::new(atoms).expect("eigenvalue invariants imply valid atoms")
}

/// The discrete measure `mu = sum_n |b_n/lambda_n|^q delta_{1/lambda_n}`
/// of the direct criterion for analytic semigroups.
pub fn reciprocal_measure(sys: &DiagonalSystem) -> DiscreteMeasure {
    let atoms = sys
        .lambdas
        .iter()
        .zip(&sys.b)
        .filter(|(_, b)| b.norm() > 0.0)
        .map(|(l, b)| {
            let inv = l.inv();
            HalfPlaneAtom {
                x: inv.im,
                t: inv.re,
                w: (b / l).norm().powf(sys.q),
            }
        })
        .collect();
    DiscreteMeasure::new(atoms).expect("eigenvalue invariants imply valid atoms")
}

/// The comparison measure `nu = sum_n |b_n/r_n|^q delta_{1/r_n}` with
/// `r_n = Re lambda_n`, supported on the positive real axis.
pub fn realpart_measure(sys: &DiagonalSystem) -> DiscreteMeasure {
    let atoms = sys
        .lambdas
        .iter()
        .zip(&sys.b)
        .filter(|(_, b)| b.norm() > 0.0)
        .map(|(l, b)| HalfPlaneAtom {
            x: 0.0,
            t: 1.0 / l.re,
            w: (b.norm() / l.re).powf(sys.q),
        })
        .collect();
    DiscreteMeasure::new(atoms).expect("eigenvalue invariants imply valid atoms")
}

/// `||(b_n / (lambda_n + conj z))_n||_{l_q}`: the state reached by the
/// exponential probe `e^{-s conj z}`, in closed form.
pub fn output_norm_exponential(sys: &DiagonalSystem, z: Complex64) -> Result<f64, SystemError> {
    if !(z.re > 0.0) {
        return Err(SystemError::InvalidInput("probe needs Re z > 0"));
    }
    let zbar = z.conj();
    Ok(lq_norm(
        sys.lambdas
            .iter()
            .zip(&sys.b)
            .map(|(l, b)| (b / (l + zbar)).norm()),
        sys.q,
    ))
}

/// `||(b_n int_0^t e^{-lambda_n (t-s)} u(s) ds)_n||_{l_q}` by per-piece
/// closed forms.
pub fn finite_time_state(sys: &DiagonalSystem, u: &InputSignal, t: f64) -> f64 {
    lq_norm(
        sys.lambdas
            .iter()
            .zip(&sys.b)
            .map(|(l, b)| (b * u.convolve_exp(*l, t)).norm()),
        sys.q,
    )
}

/// `||(b_n int_0^inf e^{-lambda_n s} u(s) ds)_n||_{l_q}`: the infinite-time
/// admissibility numerator, closed form via the Laplace transform.
pub fn infinite_horizon_state(sys: &DiagonalSystem, u: &InputSignal) -> f64 {
    lq_norm(
        sys.lambdas
            .iter()
            .zip(&sys.b)
            .map(|(l, b)| (b * u.laplace(*l)).norm()),
        sys.q,
    )
}

/// A probe-family admissibility statistic. The ratio is a lower bound of
/// the true admissibility constant: the sup runs over the supplied family
/// (and a time grid), never over all of `L^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub ratio: f64,
    pub witness_input: String,
    pub p: f64,
    /// `None` encodes the infinite horizon.
    pub time_horizon: Option<f64>,
}

/// Number of points in the default log-spaced time and lambda grids.
pub const DEFAULT_GRID_POINTS: usize = 200;

/// Max over the family (and, for finite horizons, a log-spaced time grid)
/// of `output norm / ||u||_{L^p}`.
pub fn admissibility_probe_sup(
    sys: &DiagonalSystem,
    p: f64,
    family: &[InputSignal],
    horizon: Option<f64>,
) -> Result<ProbeReport, SystemError> {
    if family.is_empty() {
        return Err(SystemError::EmptyFamily);
    }
    if !(p > 1.0) || !p.is_finite() {
        return Err(SystemError::InvalidSystem("p must exceed 1"));
    }
    if let Some(h) = horizon {
        if !(h > 0.0) || !h.is_finite() {
            return Err(SystemError::InvalidInput("horizon must be positive"));
        }
    }

    let mut best = f64::NEG_INFINITY;
    let mut witness = family[0].describe();
    for u in family {
        let denom = u.lp_norm(p, horizon)?;
        if !(denom > 0.0) {
            return Err(SystemError::InvalidInput(
                "family member has zero L^p norm on the horizon",
            ));
        }
        let numer = match horizon {
            None => infinite_horizon_state(sys, u),
            Some(h) => {
                // sup over a log-spaced time grid in (0, h]
                let mut m: f64 = 0.0;
                for k in 0..DEFAULT_GRID_POINTS {
                    let f = (k as f64 + 1.0) / (DEFAULT_GRID_POINTS as f64);
                    let t = h * 1e-4f64.powf(1.0 - f);
                    m = m.max(finite_time_state(sys, u, t));
                }
                m
            }
        };
        let ratio = numer / denom;
        if ratio > best {
            best = ratio;
            witness = u.describe();
        }
    }

    Ok(ProbeReport {
        ratio: best,
        witness_input: witness,
        p,
        time_horizon: horizon,
    })
}

/// Both sides of the sectorial convolution majorant: the exact state norm
/// at time `tau` against the kernel bound
/// `(1/cos theta) || ( |b_n/lambda_n| (Phi_{1/r_n} * |u|)(tau) )_n ||_{l_q}`
/// with `Phi_s(x) = s^{-1} e^{-x/s} 1_{x>=0}` and `r_n = Re lambda_n`.
/// The first component never exceeds the second.
pub fn convolution_majorant_check(
    sys: &DiagonalSystem,
    u: &InputSignal,
    tau: f64,
) -> Result<(f64, f64), SystemError> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(SystemError::InvalidInput("tau must be positive"));
    }
    let theta = sys.sector_angle();
    if !(theta < core::f64::consts::FRAC_PI_2) {
        return Err(SystemError::SectorViolation);
    }
    let lhs = finite_time_state(sys, u, tau);
    let abs_u = u.modulus();
    let majorant = lq_norm(
        sys.lambdas.iter().zip(&sys.b).map(|(l, b)| {
            let r = Complex64::new(l.re, 0.0);
            // (Phi_{1/r_n} * |u|)(tau) = r_n int_0^tau e^{-r_n (tau-s)} |u(s)| ds
            let conv = l.re * abs_u.convolve_exp(r, tau).re;
            (b / l).norm() * conv
        }),
        sys.q,
    ) / theta.cos();
    Ok((lhs, majorant))
}

/// Extrapolation-space norm `(sum_n |b_n|^q / |1 + lambda_n|^{theta q})^{1/q}`.
pub fn xminus_theta_norm(sys: &DiagonalSystem, theta: f64) -> Result<f64, SystemError> {
    if !(theta >= 0.0) || !theta.is_finite() {
        return Err(SystemError::InvalidSystem("theta must be non-negative"));
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(lq_norm(
        sys.lambdas
            .iter()
            .zip(&sys.b)
            .map(|(l, b)| b.norm() / (one + l).norm().powf(theta)),
        sys.q,
    ))
}

/// Partial dyadic ring sum with its geometric tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyadicTailBound {
    pub sum: f64,
    pub tail_estimate: f64,
}

/// The ring-sum upper bound `C sum_n 2^{n q / p'} / (1 + 2^{n theta q})`
/// over the given index range. Finite exactly when `theta > 1/p'`;
/// otherwise the parameters are rejected.
pub fn dyadic_tail_bound(
    geometric_c: f64,
    theta: f64,
    q: f64,
    p_prime: f64,
    n_range: core::ops::RangeInclusive<i32>,
) -> Result<DyadicTailBound, SystemError> {
    if !(geometric_c >= 0.0) {
        return Err(SystemError::InvalidSystem("constant must be non-negative"));
    }
    if !(q > 1.0) || !(p_prime > 1.0) {
        return Err(SystemError::InvalidSystem("exponents must exceed 1"));
    }
    if !(theta > 1.0 / p_prime) {
        return Err(SystemError::DivergentParameters);
    }
    let mut acc = KahanSum::new();
    let mut last_term = 0.0;
    for n in n_range {
        let nf = n as f64;
        let log_num = nf * q / p_prime * core::f64::consts::LN_2;
        // log(1 + 2^{n theta q}) without overflowing the exponential
        let y = nf * theta * q * core::f64::consts::LN_2;
        let log_denom = if y > 0.0 {
            y + (-y).exp().ln_1p()
        } else {
            y.exp().ln_1p()
        };
        let term = (log_num - log_denom).exp();
        acc.add(term);
        last_term = term;
    }
    // terms eventually decay like 2^{n (q/p' - theta q)}
    let ratio = ((q / p_prime - theta * q) * core::f64::consts::LN_2).exp();
    let tail = last_term * ratio / (1.0 - ratio);
    Ok(DyadicTailBound {
        sum: geometric_c * acc.value(),
        tail_estimate: geometric_c * tail,
    })
}

/// Weiss-set sup with its witness resolvent parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeissReport {
    pub sup: f64,
    pub witness_lambda: f64,
}

/// Default log-spaced grid `[min Re lambda / 100, 100 max |lambda|]`.
pub fn default_lambda_grid(sys: &DiagonalSystem, points: usize) -> Result<Vec<f64>, SystemError> {
    if sys.is_empty() {
        return Err(SystemError::EmptySystem);
    }
    let lo = sys
        .lambdas
        .iter()
        .map(|l| l.re)
        .fold(f64::INFINITY, f64::min)
        / 100.0;
    let hi = sys.lambdas.iter().map(|l| l.norm()).fold(0.0, f64::max) * 100.0;
    let n = points.max(2);
    Ok((0..n)
        .map(|i| {
            let f = (i as f64) / ((n - 1) as f64);
            (lo.ln() + f * (hi.ln() - lo.ln())).exp()
        })
        .collect())
}

fn weiss_value(sys: &DiagonalSystem, p: f64, lambda: f64) -> f64 {
    let l0 = Complex64::new(lambda, 0.0);
    lambda.powf(1.0 / p)
        * lq_norm(
            sys.lambdas
                .iter()
                .zip(&sys.b)
                .map(|(l, b)| (b / (l0 + l)).norm()),
            sys.q,
        )
}

/// `sup_{lambda > 0} lambda^{1/p} ||(b_n / (lambda + lambda_n))_n||_{l_q}`
/// over the grid, sharpened by golden-section refinement around the grid
/// argmax (the grid alone cannot hit smooth interior maxima accurately).
pub fn weiss_sup(sys: &DiagonalSystem, p: f64, grid: &[f64]) -> Result<WeissReport, SystemError> {
    if sys.is_empty() {
        return Err(SystemError::EmptySystem);
    }
    if !(p > 1.0) || !p.is_finite() {
        return Err(SystemError::InvalidSystem("p must exceed 1"));
    }
    if grid.len() < 2 || grid.iter().any(|&l| !(l > 0.0)) {
        return Err(SystemError::InvalidInput("need >= 2 positive grid points"));
    }

    let mut best_idx = 0;
    let mut best = f64::NEG_INFINITY;
    for (i, &l) in grid.iter().enumerate() {
        let v = weiss_value(sys, p, l);
        if v > best {
            best = v;
            best_idx = i;
        }
    }

    // Golden-section refinement in log-lambda over the bracketing cell.
    let mut lo = grid[best_idx.saturating_sub(1)].ln();
    let mut hi = grid[(best_idx + 1).min(grid.len() - 1)].ln();
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = weiss_value(sys, p, c.exp());
    let mut fd = weiss_value(sys, p, d.exp());
    for _ in 0..120 {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = weiss_value(sys, p, c.exp());
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = weiss_value(sys, p, d.exp());
        }
    }
    let refined_lambda = (0.5 * (lo + hi)).exp();
    let refined = weiss_value(sys, p, refined_lambda);

    if refined > best {
        Ok(WeissReport {
            sup: refined,
            witness_lambda: refined_lambda,
        })
    } else {
        Ok(WeissReport {
            sup: best,
            witness_lambda: grid[best_idx],
        })
    }
}

/// Square-function norm
/// `(int_0^inf ||((t lambda_n)^{1/2} e^{-t lambda_n} x_n)_n||_{l_q}^p dt/t)^{1/p}`
/// by semi-infinite quadrature with decay hint `p min_n Re lambda_n`.
pub fn square_function_norm(
    sys: &DiagonalSystem,
    x: &[Complex64],
    p: f64,
    spec: &QuadratureSpec,
) -> Result<f64, SystemError> {
    if sys.is_empty() {
        return Err(SystemError::EmptySystem);
    }
    if x.len() != sys.len() {
        return Err(SystemError::ShapeMismatch(
            "state vector length differs from mode count",
        ));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(SystemError::InvalidSystem("p must be >= 1"));
    }
    if x.iter().all(|c| c.norm() == 0.0) {
        return Ok(0.0);
    }
    let decay = p * sys
        .lambdas
        .iter()
        .map(|l| l.re)
        .fold(f64::INFINITY, f64::min);
    let q = sys.q;
    let integrand = |t: f64| -> Complex64 {
        if t <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let norm = lq_norm(
            sys.lambdas
                .iter()
                .zip(x)
                .map(|(l, xn)| (t * l.norm()).sqrt() * (-t * l.re).exp() * xn.norm()),
            q,
        );
        Complex64::new(norm.powf(p) / t, 0.0)
    };
    let integral = integrate_semiinfinite(integrand, decay, spec)?;
    Ok(integral.re().max(0.0).powf(1.0 / p))
}

/// Both routes of the vector-valued extension at time `t`: the exact
/// output norm for the control operator `(B u)_n = <phi_n, u>`, and the
/// Hölder majorant `||( ||phi_n||_{q'} ||(I_nj)_j||_{l_q} )_n||_{l_q}`
/// built from the per-coordinate convolutions `I_nj`. The first component
/// never exceeds the second.
pub fn vector_output_norm(
    sys: &DiagonalSystem,
    functionals: &[Vec<Complex64>],
    u: &[InputSignal],
    t: f64,
) -> Result<(f64, f64), SystemError> {
    if functionals.len() != sys.len() {
        return Err(SystemError::ShapeMismatch(
            "functional row count differs from mode count",
        ));
    }
    if functionals.iter().any(|row| row.len() != u.len()) {
        return Err(SystemError::ShapeMismatch(
            "functional row length differs from input coordinate count",
        ));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(SystemError::InvalidInput("t must be positive"));
    }
    let q = sys.q;
    let q_dual = q / (q - 1.0);

    // I_nj = int_0^t e^{-lambda_n (t-s)} u_j(s) ds
    let mut direct_terms = Vec::with_capacity(sys.len());
    let mut chain_terms = Vec::with_capacity(sys.len());
    for (n, lambda) in sys.lambdas.iter().enumerate() {
        let convs: Vec<Complex64> = u.iter().map(|uj| uj.convolve_exp(*lambda, t)).collect();
        let mut pairing = Complex64::new(0.0, 0.0);
        for (phi, conv) in functionals[n].iter().zip(&convs) {
            pairing += phi * conv;
        }
        direct_terms.push(pairing.norm());
        let phi_norm = lq_norm(functionals[n].iter().map(|c| c.norm()), q_dual);
        let conv_norm = lq_norm(convs.iter().map(|c| c.norm()), q);
        chain_terms.push(phi_norm * conv_norm);
    }
    Ok((
        lq_norm(direct_terms.into_iter(), q),
        lq_norm(chain_terms.into_iter(), q),
    ))
}

/// Discrete Minkowski comparison on a sample matrix (rows = coordinates,
/// columns = time samples with spacing `dt`): the `l_q`-of-`L^p` norm
/// against the `L^p`-of-`l_q` norm. Requires `p <= q`, under which the
/// first never exceeds the second.
pub fn minkowski_check(
    samples: &[Vec<f64>],
    p: f64,
    q: f64,
    dt: f64,
) -> Result<(f64, f64), SystemError> {
    if !(p >= 1.0) || !(q >= 1.0) {
        return Err(SystemError::InvalidSystem("exponents must be >= 1"));
    }
    if p > q {
        return Err(SystemError::ExponentOrder);
    }
    if !(dt > 0.0) {
        return Err(SystemError::InvalidInput("dt must be positive"));
    }
    let cols = samples.first().map_or(0, Vec::len);
    if samples.is_empty() || cols == 0 {
        return Err(SystemError::ShapeMismatch("empty sample matrix"));
    }
    if samples.iter().any(|row| row.len() != cols) {
        return Err(SystemError::ShapeMismatch("ragged sample matrix"));
    }

    // lhs: l_q over rows of the discrete L^p-in-time norms
    let lhs = lq_norm(
        samples.iter().map(|row| {
            let mut acc = KahanSum::new();
            for v in row {
                acc.add(v.abs().powf(p) * dt);
            }
            acc.value().powf(1.0 / p)
        }),
        q,
    );
    // rhs: discrete L^p-in-time of the l_q norms over rows
    let mut acc = KahanSum::new();
    for k in 0..cols {
        let col_norm = lq_norm(samples.iter().map(|row| row[k].abs()), q);
        acc.add(col_norm.powf(p) * dt);
    }
    let rhs = acc.value().powf(1.0 / p);
    Ok((lhs, rhs))
}

/// The measure-comparison sandwich behind the real-part reduction for
/// sectorial systems with half-angle `theta`:
///
/// `mu(T_{omega,r}) <= nu(T_{0, r/cos^2 theta})
///                  <= cos(theta)^{-q} mu(T_{0, (1+tan theta) r/cos^2 theta})`
///
/// for `mu` the reciprocal measure and `nu` the real-part measure. The
/// radius inflations come from comparing an atom `1/lambda_n` (height
/// `r_n/|lambda_n|^2`, reach `(r_n + |Im lambda_n|)/|lambda_n|^2`) with its
/// projection `1/r_n`, using `r_n <= |lambda_n| <= r_n / cos theta` on the
/// sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SandwichCheck {
    pub reciprocal_tent: f64,
    pub realpart_tent: f64,
    pub reciprocal_upper: f64,
}

/// Evaluates the three tent masses of the sandwich for the tent over
/// `(omega - r, omega + r)`.
pub fn reciprocal_sandwich(
    sys: &DiagonalSystem,
    omega: f64,
    r: f64,
) -> Result<SandwichCheck, SystemError> {
    if sys.is_empty() {
        return Err(SystemError::EmptySystem);
    }
    if !(r > 0.0) || !r.is_finite() || !omega.is_finite() {
        return Err(SystemError::InvalidInput("invalid tent parameters"));
    }
    let theta = sys.sector_angle();
    if !(theta < core::f64::consts::FRAC_PI_2) {
        return Err(SystemError::SectorViolation);
    }
    let mu = reciprocal_measure(sys);
    let nu = realpart_measure(sys);
    let cos = theta.cos();
    let mid_radius = r / (cos * cos);
    let outer_radius = (1.0 + theta.tan()) * mid_radius;

    let tent = Interval::new(omega, r).map_err(|_| SystemError::InvalidInput("bad tent"))?;
    let mid = Interval::new(0.0, mid_radius).map_err(|_| SystemError::InvalidInput("bad tent"))?;
    let outer =
        Interval::new(0.0, outer_radius).map_err(|_| SystemError::InvalidInput("bad tent"))?;

    Ok(SandwichCheck {
        reciprocal_tent: crate::measures::tent_measure(&mu, &tent),
        realpart_tent: crate::measures::tent_measure(&nu, &mid),
        reciprocal_upper: crate::measures::tent_measure(&mu, &outer) / cos.powf(sys.q),
    })
}
