//! Adaptive Gauss–Kronrod quadrature.
//!
//! A 15-point Kronrod rule with embedded 7-point Gauss rule is applied per
//! panel; the panel with the largest error estimate is bisected until the
//! global estimate meets the tolerance. Integrands may have integrable
//! endpoint singularities of type `s^{-1/2}`; the bisection then clusters
//! panels towards the endpoint.

use alloc::vec::Vec;
use num_complex::Complex64;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use super::{KahanSum, NumericsError};

/// Tolerances and budget for one quadrature request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: u32,
    /// Exponential decay rate hint for semi-infinite domains.
    pub truncation_decay: Option<f64>,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: u32) -> Result<Self, NumericsError> {
        if !(abs_tol > 0.0) {
            return Err(NumericsError::InvalidSpec("abs_tol must be positive"));
        }
        if !(rel_tol > 0.0) {
            return Err(NumericsError::InvalidSpec("rel_tol must be positive"));
        }
        if max_subdivisions == 0 {
            return Err(NumericsError::InvalidSpec("max_subdivisions must be >= 1"));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
            truncation_decay: None,
        })
    }

    pub fn with_decay(mut self, decay: f64) -> Self {
        self.truncation_decay = Some(decay);
        self
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 4000,
            truncation_decay: None,
        }
    }
}

/// Outcome of a quadrature request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub subdivisions_used: u32,
}

impl IntegralResult {
    /// Real part of the value; the full value for real integrands.
    pub fn re(&self) -> f64 {
        self.value.re
    }
}

// 15-point Kronrod nodes on [-1, 1] (symmetric; only the non-negative half),
// Kronrod weights, and the embedded 7-point Gauss weights (QUADPACK qk15),
// kept at the reference precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    alive: bool,
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let fsum = f1 + f2;
        kronrod += fsum * WGK[j];
        if j % 2 == 1 {
            // XGK[1], XGK[3], XGK[5] are the Gauss-7 abscissae.
            gauss += fsum * WG[j / 2];
        }
    }

    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).norm();
    (value, error)
}

fn totals(panels: &[Panel]) -> (Complex64, f64) {
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    let mut err = KahanSum::new();
    for p in panels.iter().filter(|p| p.alive) {
        re.add(p.value.re);
        im.add(p.value.im);
        err.add(p.error);
    }
    (Complex64::new(re.value(), im.value()), err.value())
}

/// Integrates `f` over the finite interval `(a, b)`.
///
/// The result satisfies `|value - integral| <= max(abs_tol, rel_tol*|value|)`
/// for piecewise-smooth integrands; the achieved error estimate is reported.
pub fn integrate_adaptive<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult, NumericsError> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(NumericsError::InvalidSpec("require finite a < b"));
    }
    if !(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) {
        return Err(NumericsError::InvalidSpec("tolerances must be positive"));
    }
    if spec.max_subdivisions == 0 {
        return Err(NumericsError::InvalidSpec("max_subdivisions must be >= 1"));
    }

    let mut panels: Vec<Panel> = Vec::new();
    let (v, e) = gk15(&f, a, b);
    panels.push(Panel {
        a,
        b,
        value: v,
        error: e,
        alive: true,
    });

    let mut subdivisions = 0u32;
    loop {
        let (value, error) = totals(&panels);
        let tol = spec.abs_tol.max(spec.rel_tol * value.norm());
        if error <= tol {
            return Ok(IntegralResult {
                value,
                error_estimate: error,
                subdivisions_used: subdivisions,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(NumericsError::NonConvergence {
                value_re: value.re,
                value_im: value.im,
                error_estimate: error,
                subdivisions,
            });
        }

        // Bisect the worst panel. Ties resolve to the lowest index.
        let mut worst = 0usize;
        let mut worst_err = -1.0;
        for (i, p) in panels.iter().enumerate() {
            if p.alive && p.error > worst_err {
                worst_err = p.error;
                worst = i;
            }
        }
        let Panel { a: pa, b: pb, .. } = panels[worst];
        let mid = 0.5 * (pa + pb);
        if !(pa < mid && mid < pb) {
            // Panel narrower than machine resolution; accept what we have.
            let (value, error) = totals(&panels);
            return Ok(IntegralResult {
                value,
                error_estimate: error,
                subdivisions_used: subdivisions,
            });
        }
        panels[worst].alive = false;
        let (v1, e1) = gk15(&f, pa, mid);
        let (v2, e2) = gk15(&f, mid, pb);
        panels.push(Panel {
            a: pa,
            b: mid,
            value: v1,
            error: e1,
            alive: true,
        });
        panels.push(Panel {
            a: mid,
            b: pb,
            value: v2,
            error: e2,
            alive: true,
        });
        subdivisions += 1;
    }
}

/// Real-integrand convenience wrapper around [`integrate_adaptive`].
pub fn integrate_adaptive_real<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult, NumericsError> {
    integrate_adaptive(|s| Complex64::new(f(s), 0.0), a, b, spec)
}

/// Truncation point for integrands bounded by `C e^{-decay s}`: the tail
/// beyond `(40 + |ln abs_tol|) / decay` is provably below tolerance.
pub fn truncation_point(decay_rate: f64, abs_tol: f64) -> f64 {
    (40.0 + abs_tol.ln().abs()) / decay_rate
}

/// Integrates `f` over `(0, ∞)` assuming `|f(s)| <= C e^{-decay_rate s}`
/// for large `s`. Truncates at [`truncation_point`] and delegates to
/// [`integrate_adaptive`]; the reported error includes the truncation tail
/// estimated from `|f(s_max)|`.
pub fn integrate_semiinfinite<F: Fn(f64) -> Complex64>(
    f: F,
    decay_rate: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult, NumericsError> {
    if !(decay_rate > 0.0) || !decay_rate.is_finite() {
        return Err(NumericsError::InvalidDecay);
    }
    let s_max = truncation_point(decay_rate, spec.abs_tol);
    let tail = f(s_max).norm() / decay_rate;
    let mut result = integrate_adaptive(&f, 0.0, s_max, spec)?;
    result.error_estimate += tail;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(abs: f64) -> QuadratureSpec {
        QuadratureSpec::new(abs, 1e-12, 4000).unwrap()
    }

    #[test]
    fn constant_integrand() {
        let r = integrate_adaptive_real(|_| 1.0, 0.0, 1.0, &spec(1e-12)).unwrap();
        assert!((r.re() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn inverse_sqrt_endpoint_singularity() {
        // antiderivative 2*sqrt(s) on [0,1] -> 2
        let r = integrate_adaptive_real(|s| s.powf(-0.5), 0.0, 1.0, &spec(1e-8)).unwrap();
        assert!((r.re() - 2.0).abs() <= 1e-8, "got {}", r.re());
    }

    #[test]
    fn damped_cosine_closed_form() {
        // int_0^10 e^{-s} cos s ds = (1 - e^{-10}(cos 10 - sin 10)) / 2
        let exact = 0.5 * (1.0 - (-10.0f64).exp() * ((10.0f64).cos() - (10.0f64).sin()));
        let r = integrate_adaptive_real(|s| (-s).exp() * s.cos(), 0.0, 10.0, &spec(1e-12)).unwrap();
        assert!((r.re() - exact).abs() <= 1e-10);
    }

    #[test]
    fn polynomial_exactness_of_panel_rule() {
        // Degree-13 polynomial integrates exactly (up to roundoff) with a
        // single panel: Gauss-7/Kronrod-15 is exact through degree 22.
        let exact = 1.0 / 14.0;
        let r = integrate_adaptive_real(|s| s.powi(13), 0.0, 1.0, &spec(1e-13)).unwrap();
        assert!((r.re() - exact).abs() <= 1e-13);
        assert_eq!(r.subdivisions_used, 0);
    }

    #[test]
    fn semiinfinite_unit_exponential() {
        let r =
            integrate_semiinfinite(|s| Complex64::new((-s).exp(), 0.0), 1.0, &spec(1e-10)).unwrap();
        assert!((r.re() - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn semiinfinite_gamma_two_over_four() {
        // int_0^inf s e^{-2s} ds = Gamma(2)/2^2 = 1/4
        let r = integrate_semiinfinite(
            |s| Complex64::new(s * (-2.0 * s).exp(), 0.0),
            2.0,
            &spec(1e-10),
        )
        .unwrap();
        assert!((r.re() - 0.25).abs() <= 1e-8);
    }

    #[test]
    fn semiinfinite_sqrt_singularity_gamma_half() {
        // int_0^inf (pi s)^{-1/2} e^{-s} ds = Gamma(1/2)/sqrt(pi) = 1
        let r = integrate_semiinfinite(
            |s| Complex64::new((core::f64::consts::PI * s).powf(-0.5) * (-s).exp(), 0.0),
            1.0,
            &spec(1e-9),
        )
        .unwrap();
        assert!((r.re() - 1.0).abs() <= 1e-7, "got {}", r.re());
    }

    #[test]
    fn invalid_decay_rejected() {
        let r = integrate_semiinfinite(|_| Complex64::new(1.0, 0.0), 0.0, &spec(1e-8));
        assert_eq!(r.unwrap_err(), NumericsError::InvalidDecay);
    }

    #[test]
    fn interior_kink_integrand() {
        // int_0^1 |s - 0.3|^{1/2} ds = (2/3)(0.7^{3/2} + 0.3^{3/2})
        let exact = 2.0 / 3.0 * (0.7f64.powf(1.5) + 0.3f64.powf(1.5));
        let r =
            integrate_adaptive_real(|s| (s - 0.3).abs().sqrt(), 0.0, 1.0, &spec(1e-10)).unwrap();
        assert!((r.re() - exact).abs() <= 1e-9);
    }

    #[test]
    fn invalid_spec_construction_rejected() {
        assert!(QuadratureSpec::new(0.0, 1e-10, 100).is_err());
        assert!(QuadratureSpec::new(1e-10, -1.0, 100).is_err());
        assert!(QuadratureSpec::new(1e-10, 1e-10, 0).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_nonconvergence() {
        let tight = QuadratureSpec::new(1e-14, 1e-14, 3).unwrap();
        let r = integrate_adaptive_real(|s| s.powf(-0.5), 0.0, 1.0, &tight);
        assert!(matches!(r, Err(NumericsError::NonConvergence { .. })));
    }

    #[test]
    fn complex_oscillatory_integrand() {
        // int_0^inf e^{-(1+2i)s} ds = 1/(1+2i)
        let lambda = Complex64::new(1.0, 2.0);
        let r = integrate_semiinfinite(|s| (-lambda * s).exp(), 1.0, &spec(1e-11)).unwrap();
        let exact = Complex64::new(1.0, 0.0) / lambda;
        assert!((r.value - exact).norm() <= 1e-9);
    }
}
