//! Bessel functions J1, J_nu (nu > -1) and modified I_nu (nu > -1).
//!
//! Small arguments use the ascending power series with compensated
//! summation; beyond the cancellation threshold x = 15 the Hankel
//! asymptotic expansion takes over. I_nu has no cancellation, so the
//! series is used throughout its floating-point range.

use num_complex::Complex64;
// f64 transcendentals resolve through this trait in no_std builds;
// std test builds shadow it with the inherent methods.
#[allow(unused_imports)]
use num_traits::Float;

use super::quadrature::{integrate_adaptive, QuadratureSpec};
use super::{KahanSum, NumericsError};

/// Series/asymptotic switch point for the oscillatory Bessel functions.
const SERIES_CUTOFF: f64 = 15.0;

/// Largest x for which e^x is representable; beyond this I_nu overflows.
const INU_OVERFLOW: f64 = 709.0;

fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// J1(x) for x >= 0.
///
/// Power series for x <= 15, Hankel asymptotic expansion beyond. Relative
/// accuracy ~1e-10 on [0, 15] and ~1e-8 (against the envelope) beyond.
pub fn bessel_j1(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        return 0.0;
    }
    if x <= SERIES_CUTOFF {
        // sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
        let half = 0.5 * x;
        let z = half * half;
        let mut term = half;
        let mut acc = KahanSum::new();
        acc.add(term);
        for k in 1..80 {
            term *= -z / ((k as f64) * (k as f64 + 1.0));
            acc.add(term);
            if term.abs() <= 1e-18 * acc.value().abs().max(1e-300) {
                break;
            }
        }
        acc.value()
    } else {
        hankel_asymptotic(1.0, x)
    }
}

/// J_nu(x) for nu > -1, x >= 0.
pub fn bessel_jnu(nu: f64, x: f64) -> Result<f64, NumericsError> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(NumericsError::InvalidSpec("require nu > -1"));
    }
    if !(x >= 0.0) {
        return Err(NumericsError::InvalidSpec("require x >= 0"));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x <= SERIES_CUTOFF {
        // sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1))
        let half = 0.5 * x;
        let z = half * half;
        let mut term = half.powf(nu) / gamma(nu + 1.0);
        let mut acc = KahanSum::new();
        acc.add(term);
        for k in 1..120 {
            term *= -z / ((k as f64) * (nu + k as f64));
            acc.add(term);
            if term.abs() <= 1e-18 * acc.value().abs().max(1e-300) {
                break;
            }
        }
        Ok(acc.value())
    } else {
        Ok(hankel_asymptotic(nu, x))
    }
}

// Hankel's expansion: J_nu(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - (nu/2 + 1/4) pi, with P, Q the even/odd asymptotic sums in
// a_m = prod_{j<=m} (4 nu^2 - (2j-1)^2) / (m! 8^m x^m). The sums are
// truncated at the smallest term; for half-integer nu they terminate.
fn hankel_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for m in 1..40 {
        let mf = m as f64;
        let factor = (mu - (2.0 * mf - 1.0) * (2.0 * mf - 1.0)) / (mf * 8.0 * x);
        term *= factor;
        if term == 0.0 || term.abs() >= prev {
            break;
        }
        prev = term.abs();
        // m odd contributes to Q, m even to P, with alternating signs
        // (-1)^{floor(m/2)} built into the factor chain below.
        match m % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
    }
    let chi = x - (0.5 * nu + 0.25) * core::f64::consts::PI;
    (2.0 / (core::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Modified Bessel I_nu(x) for nu > -1, x >= 0.
///
/// All series terms are positive, so the ascending series is accurate over
/// the whole representable range; x beyond the range of e^x overflows.
pub fn bessel_inu(nu: f64, x: f64) -> Result<f64, NumericsError> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(NumericsError::InvalidSpec("require nu > -1"));
    }
    if !(x >= 0.0) {
        return Err(NumericsError::InvalidSpec("require x >= 0"));
    }
    if x > INU_OVERFLOW {
        return Err(NumericsError::Overflow);
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let half = 0.5 * x;
    let z = half * half;
    let mut term = half.powf(nu) / gamma(nu + 1.0);
    let mut acc = KahanSum::new();
    acc.add(term);
    for k in 1..600 {
        term *= z / ((k as f64) * (nu + k as f64));
        acc.add(term);
        if term <= 1e-18 * acc.value() {
            break;
        }
    }
    Ok(acc.value())
}

/// I0 by the integral representation `(1/pi) int_0^pi e^{x cos t} dt`,
/// an independent route used to cross-validate the series.
pub fn bessel_i0_integral(x: f64, spec: &QuadratureSpec) -> Result<f64, NumericsError> {
    if !(x >= 0.0) {
        return Err(NumericsError::InvalidSpec("require x >= 0"));
    }
    if x > INU_OVERFLOW {
        return Err(NumericsError::Overflow);
    }
    let r = integrate_adaptive(
        |theta| Complex64::new((x * theta.cos()).exp(), 0.0),
        0.0,
        core::f64::consts::PI,
        spec,
    )?;
    Ok(r.re() / core::f64::consts::PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: raw truncated series evaluated term by term.
    fn j1_series_oracle(x: f64, terms: usize) -> f64 {
        let mut sum = 0.0f64;
        for k in (0..terms).rev() {
            let mut t = (x / 2.0).powi(2 * k as i32 + 1);
            for j in 1..=k {
                t /= j as f64;
            }
            for j in 1..=(k + 1) {
                t /= j as f64;
            }
            sum += if k % 2 == 0 { t } else { -t };
        }
        sum
    }

    #[test]
    fn j1_at_zero() {
        assert_eq!(bessel_j1(0.0), 0.0);
    }

    #[test]
    fn j1_small_argument_series_value() {
        // oracle value frozen from the truncated series
        let expected = j1_series_oracle(0.1, 12);
        assert!((expected - 0.049937526036242).abs() < 1e-14);
        assert!((bessel_j1(0.1) - expected).abs() <= 1e-10 * expected.abs());
    }

    #[test]
    fn j1_bounded_by_one_on_grid() {
        for i in 0..=2000 {
            let x = 50.0 * (i as f64) / 2000.0;
            assert!(bessel_j1(x).abs() <= 1.0 + 1e-12, "x={x}");
        }
    }

    #[test]
    fn j1_matches_integral_representation() {
        // J1(x) = (1/pi) int_0^pi cos(theta - x sin theta) dtheta
        let spec = QuadratureSpec::default();
        for i in 0..=40 {
            let x = 40.0 * (i as f64) / 40.0;
            let osc = integrate_adaptive(
                |theta| Complex64::new((theta - x * theta.sin()).cos(), 0.0),
                0.0,
                core::f64::consts::PI,
                &spec,
            )
            .unwrap()
            .re()
                / core::f64::consts::PI;
            assert!((bessel_j1(x) - osc).abs() <= 1e-8, "x={x}");
        }
    }

    #[test]
    fn jnu_reduces_to_j1() {
        for &x in &[0.3, 2.0, 9.5, 14.9, 18.0, 33.0, 47.0] {
            let a = bessel_j1(x);
            let b = bessel_jnu(1.0, x).unwrap();
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "x={x}");
        }
    }

    #[test]
    fn jnu_half_closed_form() {
        // J_{1/2}(x) = sqrt(2/(pi x)) sin x
        for &x in &[0.2, 1.0, 3.3, 10.0, 14.0, 16.0, 25.0, 48.0] {
            let exact = (2.0 / (core::f64::consts::PI * x)).sqrt() * x.sin();
            let got = bessel_jnu(0.5, x).unwrap();
            assert!(
                (got - exact).abs() <= 1e-10,
                "x={x} got={got} exact={exact}"
            );
        }
    }

    #[test]
    fn jnu_zero_matches_integral_representation() {
        let spec = QuadratureSpec::default();
        for &x in &[0.0, 0.7, 5.0, 13.0, 21.0, 40.0] {
            let osc = integrate_adaptive(
                |theta| Complex64::new((x * theta.sin()).cos(), 0.0),
                0.0,
                core::f64::consts::PI,
                &spec,
            )
            .unwrap()
            .re()
                / core::f64::consts::PI;
            let got = bessel_jnu(0.0, x).unwrap();
            assert!((got - osc).abs() <= 1e-8, "x={x}");
        }
    }

    #[test]
    fn inu_at_zero_and_one() {
        assert_eq!(bessel_inu(0.0, 0.0).unwrap(), 1.0);
        // oracle: truncated series sum (x/2)^{2k}/(k!)^2 at x=1
        let mut expected = 0.0f64;
        for k in (0..20).rev() {
            let mut t = 0.25f64.powi(k);
            for j in 1..=k {
                t /= (j * j) as f64;
            }
            expected += t;
        }
        assert!((expected - 1.266065877752008).abs() < 1e-14);
        assert!((bessel_inu(0.0, 1.0).unwrap() - expected).abs() <= 1e-10 * expected);
    }

    #[test]
    fn i0_dominated_by_exp_on_grid() {
        for i in 0..=500 {
            let x = 50.0 * (i as f64) / 500.0;
            assert!(bessel_inu(0.0, x).unwrap() <= x.exp(), "x={x}");
        }
    }

    #[test]
    fn i0_series_vs_integral_representation() {
        let spec = QuadratureSpec::default();
        for i in 0..=30 {
            let x = 30.0 * (i as f64) / 30.0;
            let series = bessel_inu(0.0, x).unwrap();
            let integral = bessel_i0_integral(x, &spec).unwrap();
            assert!(
                (series - integral).abs() <= 1e-10 * series,
                "x={x}: {series} vs {integral}"
            );
        }
    }

    #[test]
    fn jnu_satisfies_three_term_recurrence() {
        // J_2(x) = (2/x) J_1(x) - J_0(x)
        for &x in &[0.5, 2.0, 7.0, 13.0, 19.0, 36.0] {
            let j0 = bessel_jnu(0.0, x).unwrap();
            let j1 = bessel_jnu(1.0, x).unwrap();
            let j2 = bessel_jnu(2.0, x).unwrap();
            assert!(
                (j2 - (2.0 / x * j1 - j0)).abs() <= 1e-9,
                "x={x}: {j2} vs {}",
                2.0 / x * j1 - j0
            );
        }
    }

    #[test]
    fn inu_half_closed_form() {
        // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
        for &x in &[0.2, 1.0, 4.0, 11.0, 27.0] {
            let exact = (2.0 / (core::f64::consts::PI * x)).sqrt() * x.sinh();
            let got = bessel_inu(0.5, x).unwrap();
            assert!((got - exact).abs() <= 1e-10 * exact, "x={x}");
        }
    }

    #[test]
    fn inu_overflow_signalled() {
        assert_eq!(bessel_inu(0.0, 710.0).unwrap_err(), NumericsError::Overflow);
    }

    #[test]
    fn inu_invalid_order_rejected() {
        assert!(bessel_inu(-1.0, 1.0).is_err());
        assert!(bessel_jnu(-1.5, 1.0).is_err());
    }
}
