use super::*;
use crate::systems::DiagonalSystem;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::new(1e-9, 1e-9, 4000).unwrap()
}

#[test]
fn inverse_state_values() {
    let sys = DiagonalSystem::new(vec![c(1.0, 0.0)], vec![c(1.0, 0.0)], 2.0).unwrap();
    let v = inverse_state(&sys, 1.0).unwrap();
    assert!((v[0] - c((-1.0f64).exp(), 0.0)).norm() <= 1e-15);

    let at_zero = inverse_state(&sys, 0.0).unwrap();
    assert_eq!(at_zero[0], c(1.0, 0.0));

    // |e^{-t/lambda}| decreasing in t
    let rot = DiagonalSystem::new(vec![c(1.0, 2.0)], vec![c(1.0, 0.0)], 2.0).unwrap();
    let mut prev = f64::INFINITY;
    for k in 0..5 {
        let v = inverse_state(&rot, k as f64).unwrap()[0].norm();
        assert!(v <= prev);
        prev = v;
    }
    assert!(inverse_state(&sys, -1.0).is_err());
}

#[test]
fn zwart_identity_at_zero_time() {
    let r = bessel_identity_residual(c(1.3, 0.7), 0.0, BesselVariant::Zwart, &spec()).unwrap();
    assert_eq!(r.residual, 0.0);
}

#[test]
fn power_identity_elementary_cases() {
    // nu = 0, t = 0, lambda = 2: both sides 1/2
    let r = bessel_identity_residual(c(2.0, 0.0), 0.0, BesselVariant::Power(0.0), &spec()).unwrap();
    assert!((r.lhs - c(0.5, 0.0)).norm() <= 1e-15);
    assert!(r.residual <= 1e-8, "residual {}", r.residual);
}

#[test]
fn half_identity_at_zero_time() {
    // t = 0, lambda = 1: lhs = 1, rhs = Gamma(1/2)/sqrt(pi) = 1
    let r = bessel_identity_residual(c(1.0, 0.0), 0.0, BesselVariant::Half, &spec()).unwrap();
    assert!((r.lhs - c(1.0, 0.0)).norm() <= 1e-15);
    assert!(r.residual <= 1e-7, "residual {}", r.residual);
}

#[test]
fn identities_on_parameter_grid() {
    let lambdas = [c(1.0, 0.0), c(2.0, 1.0), c(0.5, 2.0), c(3.0, -1.0)];
    let times = [0.0, 0.1, 1.0, 5.0];
    let sp = spec();
    for &lambda in &lambdas {
        for &t in &times {
            for variant in [
                BesselVariant::Zwart,
                BesselVariant::Half,
                BesselVariant::Power(0.0),
                BesselVariant::Power(0.5),
                BesselVariant::Power(1.0),
            ] {
                let r = bessel_identity_residual(lambda, t, variant, &sp).unwrap();
                assert!(
                    r.residual < 1e-6,
                    "{:?} lambda={lambda} t={t}: residual {}",
                    variant,
                    r.residual
                );
            }
        }
    }
}

#[test]
fn power_identity_fractional_large_order() {
    let r = bessel_identity_residual(c(2.0, 1.0), 1.0, BesselVariant::Power(2.5), &spec()).unwrap();
    assert!(r.residual <= 1e-6, "residual {}", r.residual);
}

#[test]
fn zwart_and_power_zero_closed_forms_consistent() {
    // |lhs_zwart| = |lambda * lhs_power(0)| exactly (closed forms)
    for &lambda in &[c(1.0, 0.0), c(2.0, 1.0), c(0.5, 2.0)] {
        for &t in &[0.0, 0.3, 2.0] {
            let z = bessel_identity_residual(lambda, t, BesselVariant::Zwart, &spec()).unwrap();
            let p =
                bessel_identity_residual(lambda, t, BesselVariant::Power(0.0), &spec()).unwrap();
            assert!((z.lhs.norm() - (lambda * p.lhs).norm()).abs() <= 1e-14 * z.lhs.norm(),);
        }
    }
}

#[test]
fn invalid_parameters_rejected() {
    assert!(bessel_identity_residual(c(-1.0, 0.0), 1.0, BesselVariant::Zwart, &spec()).is_err());
    assert!(bessel_identity_residual(c(1.0, 0.0), -1.0, BesselVariant::Zwart, &spec()).is_err());
    assert!(
        bessel_identity_residual(c(1.0, 0.0), 1.0, BesselVariant::Power(-1.0), &spec()).is_err()
    );
}

#[test]
fn f_bound_small_parameter_examples() {
    let sp = spec();
    // t=1, p=1, T=1: f = I_1(2) ~ 1.59 <= 2(1 + e*0) = 2
    let r = f_bound_check(1.0, 1.0, 1.0, &sp).unwrap();
    assert!((r.bound - 2.0).abs() <= 1e-12);
    assert!(r.holds, "f={} bound={}", r.f_value, r.bound);

    // p=2, t=0.5, T=2: holds with positive slack
    let r = f_bound_check(0.5, 2.0, 2.0, &sp).unwrap();
    assert!(r.holds && r.f_value < r.bound);

    // t -> 0: f -> T
    for &t_h in &[1.0, 10.0] {
        let r = f_bound_check(1e-4, 2.0, t_h, &sp).unwrap();
        assert!((r.f_value - t_h).abs() <= 0.01 * t_h, "f={}", r.f_value);
    }
}

#[test]
fn f_exceeds_displayed_bound_at_large_arguments() {
    // The e^{p sqrt(tT)} majorant undershoots the true growth
    // e^{2 p sqrt(tT)} of I_0^p once p sqrt(tT) is large: the exact
    // integral of e^{2p sqrt(st)} is
    // (1/(2tp^2))(1 + e^{2p sqrt(tT)}(2p sqrt(tT) - 1)).
    let r = f_bound_check(1.0, 1.0, 10.0, &spec()).unwrap();
    assert!(
        !r.holds,
        "expected violation, f={} bound={}",
        r.f_value, r.bound
    );
    let x = 2.0 * (10.0f64).sqrt();
    let sharp = 0.5 * (1.0 + x.exp() * (x - 1.0));
    assert!(r.f_value <= sharp);
}

#[test]
fn c_t_finite_and_monotone() {
    let sp = spec();
    let c1 = c_t_constant(TimeExponent::Finite(2.0), 0.1, 1.0, &sp).unwrap();
    let c10 = c_t_constant(TimeExponent::Finite(2.0), 0.1, 10.0, &sp).unwrap();
    assert!(c1.is_finite() && c1 > 0.0);
    assert!(c10.is_finite() && c10 > c1, "C_1={c1} C_10={c10}");

    // non-increasing in epsilon
    let tighter = c_t_constant(TimeExponent::Finite(2.0), 0.2, 1.0, &sp).unwrap();
    assert!(tighter <= c1);
}

#[test]
fn c_t_infinity_exponent() {
    let sp = spec();
    // sup_t e^{-t} I_0(2 sqrt t): scan oracle on a fine grid
    let mut oracle: f64 = 0.0;
    for k in 0..=40000 {
        let t = 10.0 * (k as f64) / 40000.0;
        let v = (-t).exp() * bessel_inu(0.0, 2.0 * t.sqrt()).unwrap();
        oracle = oracle.max(v);
    }
    let c = c_t_constant(TimeExponent::Infinity, 1.0, 1.0, &sp).unwrap();
    assert!(c.is_finite());
    assert!((c - oracle).abs() <= 1e-6 * oracle, "{c} vs {oracle}");
}

#[test]
fn c_t_large_t_limit_matches_inner_norm_at_zero() {
    // As eps grows the outer weight concentrates at t = 0 where the inner
    // norm tends to T^{1/p}; scaling: C_T^p ~ f(0)/(p eps) = T/(p eps).
    let sp = spec();
    let p = 2.0;
    let t_h = 1.0;
    for &eps in &[50.0, 200.0] {
        let c = c_t_constant(TimeExponent::Finite(p), eps, t_h, &sp).unwrap();
        let predicted = (t_h / (p * eps)).powf(1.0 / p);
        assert!(
            (c - predicted).abs() <= 0.05 * predicted,
            "eps={eps}: {c} vs {predicted}"
        );
    }
}

#[test]
fn reciprocal_probe_single_real_mode() {
    let sp = spec();
    let sys = DiagonalSystem::new(vec![c(1.0, 0.0)], vec![c(1.0, 0.0)], 2.0).unwrap();
    let u = InputSignal::indicator(1.0).unwrap();
    let report = reciprocal_probe(&sys, &u, 1.0, 2.0, &sp).unwrap();
    // |b| (1 - e^{-1}) / 1
    let expected = 1.0 - (-1.0f64).exp();
    assert!((report.ratio - expected).abs() <= 1e-8);

    // linear homogeneity in b
    let scaled = DiagonalSystem::new(vec![c(1.0, 0.0)], vec![c(0.0, 3.0)], 2.0).unwrap();
    let r2 = reciprocal_probe(&scaled, &u, 1.0, 2.0, &sp).unwrap();
    assert!((r2.ratio - 3.0 * expected).abs() <= 1e-7);

    // u = 0 gives ratio 0
    let zero = InputSignal::step(vec![0.0, 1.0], vec![c(0.0, 0.0)]).unwrap();
    let r0 = reciprocal_probe(&sys, &zero, 1.0, 2.0, &sp).unwrap();
    assert_eq!(r0.ratio, 0.0);
}
