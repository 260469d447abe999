//! Discrete measures on the right half-plane, tent geometry, and the
//! geometric alpha-Carleson machinery.
//!
//! A complex point `lambda = t + ix` is stored as boundary coordinate `x`
//! (the imaginary part) and height `t` (the real part). An atom `(x, t)`
//! lies in the closed tent over the interval `[a, b]` exactly when its
//! shadow `[x - t, x + t]` is contained in `[a, b]`; every tent functional
//! below reduces to that containment test.

use alloc::vec::Vec;
use core::fmt;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::quadrature::{integrate_adaptive_real, QuadratureSpec};
use crate::numerics::{poisson_kernel, KahanSum, NumericsError};

mod maximal;

pub use maximal::{maximal_function_at, MaximalFunction};

/// Errors from measure construction and the Carleson functionals.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureError {
    EmptyMeasure,
    InvalidAtom { index: usize, reason: &'static str },
    InvalidInterval,
    InvalidGrid(&'static str),
    InvalidParameters(&'static str),
    Quadrature(NumericsError),
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::EmptyMeasure => write!(f, "measure has no atoms"),
            MeasureError::InvalidAtom { index, reason } => {
                write!(f, "atom {index}: {reason}")
            }
            MeasureError::InvalidInterval => write!(f, "interval radius must be positive"),
            MeasureError::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            MeasureError::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            MeasureError::Quadrature(e) => write!(f, "quadrature failure: {e}"),
        }
    }
}

impl core::error::Error for MeasureError {}

impl From<NumericsError> for MeasureError {
    fn from(e: NumericsError) -> Self {
        MeasureError::Quadrature(e)
    }
}

/// A weighted point mass at height `t` over boundary coordinate `x`.
///
/// When the atom comes from a complex eigenvalue `lambda`, `x = Im lambda`
/// and `t = Re lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlaneAtom {
    pub x: f64,
    pub t: f64,
    pub w: f64,
}

impl HalfPlaneAtom {
    pub fn new(x: f64, t: f64, w: f64) -> Result<Self, MeasureError> {
        let atom = Self { x, t, w };
        atom.validate(0)?;
        Ok(atom)
    }

    fn validate(&self, index: usize) -> Result<(), MeasureError> {
        if !self.x.is_finite() {
            return Err(MeasureError::InvalidAtom {
                index,
                reason: "boundary coordinate must be finite",
            });
        }
        if !(self.t > 0.0) || !self.t.is_finite() {
            return Err(MeasureError::InvalidAtom {
                index,
                reason: "height must be positive and finite",
            });
        }
        if !(self.w > 0.0) || !self.w.is_finite() {
            return Err(MeasureError::InvalidAtom {
                index,
                reason: "mass must be positive and finite",
            });
        }
        Ok(())
    }

    /// Left end of the atom's shadow on the boundary.
    #[inline]
    pub fn shadow_left(&self) -> f64 {
        self.x - self.t
    }

    /// Right end of the atom's shadow on the boundary.
    #[inline]
    pub fn shadow_right(&self) -> f64 {
        self.x + self.t
    }
}

/// A finite non-negative atomic Borel measure on the open half-plane.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiscreteMeasure {
    atoms: Vec<HalfPlaneAtom>,
}

impl DiscreteMeasure {
    pub fn new(atoms: Vec<HalfPlaneAtom>) -> Result<Self, MeasureError> {
        for (i, a) in atoms.iter().enumerate() {
            a.validate(i)?;
        }
        Ok(Self { atoms })
    }

    pub fn empty() -> Self {
        Self { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[HalfPlaneAtom] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    /// Total mass, compensated, in storage order.
    pub fn total_mass(&self) -> f64 {
        let mut acc = KahanSum::new();
        for a in &self.atoms {
            acc.add(a.w);
        }
        acc.value()
    }
}

/// A boundary interval `(omega - r, omega + r)`; the base of a tent.
///
/// Stored by its endpoints so membership tests agree bit-for-bit with the
/// atom-shadow arithmetic used by the extremal enumeration; the center and
/// radius of the centred parametrisation are derived accessors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    left: f64,
    right: f64,
}

impl Interval {
    pub fn new(omega: f64, r: f64) -> Result<Self, MeasureError> {
        if !(r > 0.0) || !r.is_finite() || !omega.is_finite() {
            return Err(MeasureError::InvalidInterval);
        }
        Ok(Self {
            left: omega - r,
            right: omega + r,
        })
    }

    /// Interval with the given endpoints (`a < b`).
    pub fn from_endpoints(a: f64, b: f64) -> Result<Self, MeasureError> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(MeasureError::InvalidInterval);
        }
        Ok(Self { left: a, right: b })
    }

    pub fn omega(&self) -> f64 {
        0.5 * (self.left + self.right)
    }

    pub fn r(&self) -> f64 {
        0.5 * (self.right - self.left)
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    pub fn length(&self) -> f64 {
        self.right - self.left
    }
}

/// How a Carleson constant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarlesonMethod {
    /// Exact extremal-tent enumeration.
    Enumeration,
    /// Brute-force grid sweep (lower bound of the true constant).
    Grid,
}

/// A computed geometric Carleson constant together with its witness tent.
#[derive(Debug, Clone, PartialEq)]
pub struct CarlesonReport {
    pub constant: f64,
    pub witness: Interval,
    pub alpha: f64,
    pub method: CarlesonMethod,
}

/// Closed-tent membership: `(x, t)` lies in the tent over `I` iff
/// `t + |x - omega| <= r`, evaluated as containment of the atom shadow
/// `[x - t, x + t]` in the base interval.
pub fn tent_contains(interval: &Interval, x: f64, t: f64) -> bool {
    debug_assert!(t > 0.0);
    x - t >= interval.left && x + t <= interval.right
}

/// Mass of the closed tent over `interval`; deterministic summation in
/// storage order.
pub fn tent_measure(mu: &DiscreteMeasure, interval: &Interval) -> f64 {
    let mut acc = KahanSum::new();
    for a in &mu.atoms {
        if tent_contains(interval, a.x, a.t) {
            acc.add(a.w);
        }
    }
    acc.value()
}

fn better_witness(ratio: f64, witness: Interval, best_ratio: f64, best_witness: &Interval) -> bool {
    if ratio > best_ratio {
        return true;
    }
    if ratio < best_ratio {
        return false;
    }
    // Ties break towards the lexicographically smallest (omega, r).
    (witness.omega(), witness.r()) < (best_witness.omega(), best_witness.r())
}

/// All minimal covering tents of `mu`: for every ordered atom pair `(i, j)`
/// whose shadows satisfy `l_i <= l_j` and `u_i <= u_j`, the tent with base
/// `[l_i, u_j]`. Single-atom minimal tents are the diagonal pairs. The sup
/// of any tent functional over all intervals is attained on this family.
pub fn candidate_tents(mu: &DiscreteMeasure) -> Vec<Interval> {
    let n = mu.atoms.len();
    let mut out = Vec::new();
    for i in 0..n {
        let ai = &mu.atoms[i];
        for j in 0..n {
            let aj = &mu.atoms[j];
            if ai.shadow_left() <= aj.shadow_left() && ai.shadow_right() <= aj.shadow_right() {
                out.push(Interval {
                    left: ai.shadow_left(),
                    right: aj.shadow_right(),
                });
            }
        }
    }
    out
}

/// Exact geometric alpha-Carleson constant
/// `sup_Q mu(T(Q))^alpha / |Q|`, computed by enumerating minimal covering
/// tents: shrinking any interval to the minimal one covering its captured
/// atoms only increases the ratio, and a minimal tent is pinned by at most
/// two atom shadows. Ties in the witness break lexicographically.
pub fn geometric_constant(
    mu: &DiscreteMeasure,
    alpha: f64,
) -> Result<CarlesonReport, MeasureError> {
    if mu.is_empty() {
        return Err(MeasureError::EmptyMeasure);
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(MeasureError::InvalidParameters("alpha must be positive"));
    }

    let n = mu.atoms.len();
    // Sort atom indices by shadow left end (ascending); iterate left ends
    // from the right so the active set {l_k >= a} grows incrementally.
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by(|&i, &j| {
        mu.atoms[i]
            .shadow_left()
            .total_cmp(&mu.atoms[j].shadow_left())
            .then(i.cmp(&j))
    });

    // Active atoms kept sorted by shadow right end.
    let mut active: Vec<(f64, f64)> = Vec::with_capacity(n); // (u, w)
    let mut best_ratio = f64::NEG_INFINITY;
    let mut best_witness = Interval {
        left: -1.0,
        right: 1.0,
    };

    let mut idx = n;
    while idx > 0 {
        idx -= 1;
        let atom = &mu.atoms[by_left[idx]];
        let a = atom.shadow_left();
        let item = (atom.shadow_right(), atom.w);
        let pos = active.partition_point(|&(u, _)| u < item.0);
        active.insert(pos, item);

        // Process each distinct left end once, after all atoms sharing it
        // have been inserted.
        if idx > 0 && mu.atoms[by_left[idx - 1]].shadow_left() == a {
            continue;
        }

        let mut mass = KahanSum::new();
        let mut k = 0;
        while k < active.len() {
            let b = active[k].0;
            // Add every atom whose shadow right end equals b before
            // evaluating the tent with base [a, b].
            while k < active.len() && active[k].0 == b {
                mass.add(active[k].1);
                k += 1;
            }
            if b > a {
                let ratio = mass.value().powf(alpha) / (b - a);
                let witness = Interval { left: a, right: b };
                if better_witness(ratio, witness, best_ratio, &best_witness) {
                    best_ratio = ratio;
                    best_witness = witness;
                }
            }
        }
    }

    Ok(CarlesonReport {
        constant: best_ratio,
        witness: best_witness,
        alpha,
        method: CarlesonMethod::Enumeration,
    })
}

/// Center and radius ranges for the brute-force oracle grid.
pub type GridRanges = ((f64, f64), (f64, f64));

/// Default grid ranges for the brute-force oracle: the atom hull inflated
/// by the maximal height, and radii up to twice (spread + max height).
pub fn default_grid_ranges(mu: &DiscreteMeasure) -> Result<GridRanges, MeasureError> {
    if mu.is_empty() {
        return Err(MeasureError::EmptyMeasure);
    }
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut t_max: f64 = 0.0;
    for a in &mu.atoms {
        x_min = x_min.min(a.x);
        x_max = x_max.max(a.x);
        t_max = t_max.max(a.t);
    }
    let spread = x_max - x_min;
    Ok((
        (x_min - t_max, x_max + t_max),
        (0.0, 2.0 * (spread + t_max)),
    ))
}

/// Brute-force grid sweep of `mu(T)^alpha / (2r)`: a lower bound of the
/// true geometric constant, used as an independent oracle for
/// [`geometric_constant`]. Radii are the `n_grid` right endpoints of an
/// equipartition of `r_range`, so every probed tent has `r > r_range.0`.
pub fn geometric_constant_grid(
    mu: &DiscreteMeasure,
    alpha: f64,
    omega_range: (f64, f64),
    r_range: (f64, f64),
    n_grid: usize,
) -> Result<CarlesonReport, MeasureError> {
    if mu.is_empty() {
        return Err(MeasureError::EmptyMeasure);
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(MeasureError::InvalidParameters("alpha must be positive"));
    }
    if n_grid < 2 {
        return Err(MeasureError::InvalidGrid("need at least 2 points per axis"));
    }
    if !(omega_range.0 < omega_range.1) {
        return Err(MeasureError::InvalidGrid("empty omega range"));
    }
    if !(r_range.0 < r_range.1) || r_range.1 <= 0.0 || r_range.0 < 0.0 {
        return Err(MeasureError::InvalidGrid("invalid radius range"));
    }

    let mut best_ratio = f64::NEG_INFINITY;
    let mut best_witness = Interval {
        left: -1.0,
        right: 1.0,
    };
    let d_omega = (omega_range.1 - omega_range.0) / ((n_grid - 1) as f64);
    let d_r = (r_range.1 - r_range.0) / (n_grid as f64);
    for i in 0..n_grid {
        let omega = omega_range.0 + d_omega * (i as f64);
        for j in 0..n_grid {
            let r = r_range.0 + d_r * ((j + 1) as f64);
            let interval = Interval {
                left: omega - r,
                right: omega + r,
            };
            let mass = tent_measure(mu, &interval);
            let ratio = mass.powf(alpha) / interval.length();
            if better_witness(ratio, interval, best_ratio, &best_witness) {
                best_ratio = ratio;
                best_witness = interval;
            }
        }
    }

    Ok(CarlesonReport {
        constant: best_ratio,
        witness: best_witness,
        alpha,
        method: CarlesonMethod::Grid,
    })
}

/// `L^beta` norm `(int_a^b f^beta)^{1/beta}` of a non-negative function by
/// adaptive quadrature.
pub fn lbeta_norm<F: Fn(f64) -> f64>(
    f: F,
    beta: f64,
    domain: (f64, f64),
    spec: &QuadratureSpec,
) -> Result<f64, MeasureError> {
    if !(beta > 1.0) || !beta.is_finite() {
        return Err(MeasureError::InvalidParameters("beta must exceed 1"));
    }
    let r = integrate_adaptive_real(|x| f(x).powf(beta), domain.0, domain.1, spec)?;
    Ok(r.re().max(0.0).powf(1.0 / beta))
}

/// Balayée of `mu` at boundary point `y`:
/// `F(y) = sum_n w_n P_{t_n}(x_n - y)` (exact finite sum).
pub fn balayee_at(mu: &DiscreteMeasure, y: f64) -> f64 {
    let mut acc = KahanSum::new();
    for a in &mu.atoms {
        // heights are validated positive, so the kernel cannot fail
        acc.add(a.w * poisson_kernel(a.t, a.x - y).unwrap_or(0.0));
    }
    acc.value()
}

/// Sectorial criterion function `g(r) = mu({Re z < r}) / r`, reading atoms
/// as `z = t + ix`.
pub fn sectorial_g(mu: &DiscreteMeasure, r: f64) -> Result<f64, MeasureError> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(MeasureError::InvalidParameters("r must be positive"));
    }
    let mut acc = KahanSum::new();
    for a in &mu.atoms {
        if a.t < r {
            acc.add(a.w);
        }
    }
    Ok(acc.value() / r)
}

/// Smallest half-angle `theta` with the support of `mu` contained in the
/// sector `S(theta)`, i.e. `max_n arctan(|x_n| / t_n)`.
pub fn sector_half_angle(mu: &DiscreteMeasure) -> Result<f64, MeasureError> {
    if mu.is_empty() {
        return Err(MeasureError::EmptyMeasure);
    }
    let mut theta: f64 = 0.0;
    for a in &mu.atoms {
        theta = theta.max((a.x.abs() / a.t).atan());
    }
    Ok(theta)
}

/// The discrete counterexample family: `2N` atoms at `x = sign(n) |n|^gamma`,
/// `t = 1`, with masses `|n|^{-epsilon}`, for `n = ±1..±N`.
pub fn example_family_measure(
    epsilon: f64,
    gamma: f64,
    n: usize,
) -> Result<DiscreteMeasure, MeasureError> {
    if !(0.0..1.0).contains(&epsilon) {
        return Err(MeasureError::InvalidParameters(
            "epsilon must lie in [0, 1)",
        ));
    }
    if !(gamma >= 1.0) || !gamma.is_finite() {
        return Err(MeasureError::InvalidParameters("gamma must be >= 1"));
    }
    if n == 0 {
        return Err(MeasureError::InvalidParameters("N must be positive"));
    }
    let mut atoms = Vec::with_capacity(2 * n);
    for k in 1..=n {
        let kf = k as f64;
        let pos = kf.powf(gamma);
        let w = kf.powf(-epsilon);
        atoms.push(HalfPlaneAtom { x: -pos, t: 1.0, w });
        atoms.push(HalfPlaneAtom { x: pos, t: 1.0, w });
    }
    DiscreteMeasure::new(atoms)
}
