use super::*;
use crate::measures::{geometric_constant, tent_measure, DiscreteMeasure, HalfPlaneAtom};
use crate::numerics::quadrature::integrate_adaptive_real;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn measure(atoms: &[(f64, f64, f64)]) -> DiscreteMeasure {
    DiscreteMeasure::new(
        atoms
            .iter()
            .map(|&(x, t, w)| HalfPlaneAtom::new(x, t, w).unwrap())
            .collect(),
    )
    .unwrap()
}

// Independent oracle: boundary integral (int_R |k_z(iy)|^p dy)^{1/p} with
// |k_z(iy)|^2 = 1/((Re z)^2 + (y - Im z)^2), split into a finite window
// plus algebraic tails handled by the substitution v = L/u.
fn hp_norm_boundary_oracle(z: HalfPlanePoint, p: f64) -> f64 {
    let spec = QuadratureSpec::default();
    let body_halfwidth = 60.0 * z.re.max(1.0);
    let kernel_pow = |v: f64| (z.re * z.re + v * v).powf(-p / 2.0);
    let body = integrate_adaptive_real(kernel_pow, -body_halfwidth, body_halfwidth, &spec)
        .unwrap()
        .re();
    let tails = 2.0
        * integrate_adaptive_real(
            |u| kernel_pow(body_halfwidth / u) * body_halfwidth / (u * u),
            0.0,
            1.0,
            &spec,
        )
        .unwrap()
        .re();
    (body + tails).powf(1.0 / p)
}

#[test]
fn cp_constant_known_values() {
    let spec = QuadratureSpec::default();
    // int (1+t^2)^{-1} dt = pi
    let c2 = cp_constant(2.0, &spec).unwrap();
    assert!((c2 - core::f64::consts::PI.sqrt()).abs() <= 1e-10);
    // int (1+t^2)^{-3/2} dt = 2
    let c3 = cp_constant(3.0, &spec).unwrap();
    assert!((c3 - 2.0f64.powf(1.0 / 3.0)).abs() <= 1e-8);
    // closed form sqrt(pi) Gamma((p-1)/2) / Gamma(p/2), cross-checked
    for &p in &[1.5, 2.5, 4.0] {
        let exact = (core::f64::consts::PI.sqrt() * libm::tgamma((p - 1.0) / 2.0)
            / libm::tgamma(p / 2.0))
        .powf(1.0 / p);
        assert!(
            (cp_constant(p, &spec).unwrap() - exact).abs() <= 1e-8,
            "p={p}"
        );
    }
}

#[test]
fn cp_decreasing_in_p() {
    let spec = QuadratureSpec::default();
    let mut prev = f64::INFINITY;
    for i in 0..10 {
        let p = 1.5 + 0.5 * i as f64;
        let c = cp_constant(p, &spec).unwrap();
        assert!(c < prev);
        prev = c;
    }
}

#[test]
fn hp_norm_formula_values() {
    let spec = QuadratureSpec::default();
    let z1 = HalfPlanePoint::new(1.0, 0.0).unwrap();
    let n = repkernel_hp_norm(z1, 2.0, &spec).unwrap();
    assert!((n - core::f64::consts::PI.sqrt()).abs() <= 1e-10);
    // only Re z enters: 4^{-1/2} scaling
    let z47 = HalfPlanePoint::new(4.0, 7.0).unwrap();
    let n47 = repkernel_hp_norm(z47, 2.0, &spec).unwrap();
    assert!((n47 - core::f64::consts::PI.sqrt() / 2.0).abs() <= 1e-10);
}

#[test]
fn hp_norm_matches_boundary_quadrature() {
    let spec = QuadratureSpec::default();
    for &p in &[1.5, 2.0, 3.0] {
        for &(re, im) in &[(1.0, 0.0), (4.0, 7.0), (0.3, -2.0)] {
            let z = HalfPlanePoint::new(re, im).unwrap();
            let formula = repkernel_hp_norm(z, p, &spec).unwrap();
            let oracle = hp_norm_boundary_oracle(z, p);
            assert!(
                (formula - oracle).abs() <= 1e-6 * oracle,
                "p={p} z=({re},{im}): {formula} vs {oracle}"
            );
        }
    }
}

#[test]
fn lq_mu_norm_examples() {
    let z = HalfPlanePoint::new(1.0, 0.0).unwrap();
    let m = measure(&[(0.0, 1.0, 1.0)]); // delta at lambda = 1
    let n = repkernel_lq_mu_norm(z, 2.0, &m).unwrap();
    assert!((n - 0.5).abs() <= 1e-15);

    assert_eq!(
        repkernel_lq_mu_norm(z, 2.0, &DiscreteMeasure::empty()).unwrap(),
        0.0
    );

    let heavy = measure(&[(0.0, 1.0, 16.0)]);
    let n16 = repkernel_lq_mu_norm(z, 2.0, &heavy).unwrap();
    assert!((n16 - 2.0).abs() <= 1e-15);
}

#[test]
fn epsilon_d_half_with_quadrature_cross_check() {
    assert_eq!(epsilon_d_constant(), 0.5);
    let spec = QuadratureSpec::default();
    let quad = integrate_adaptive_real(
        |y| crate::numerics::poisson_kernel(1.0, y).unwrap(),
        -1.0,
        1.0,
        &spec,
    )
    .unwrap()
    .re();
    assert!((quad - 0.5).abs() <= 1e-12);
    assert!(epsilon_d_constant() < 1.0);
}

#[test]
fn rkt_sup_single_atom_ratio() {
    let spec = QuadratureSpec::default();
    let m = measure(&[(0.0, 1.0, 1.0)]);
    let grid = ZGridSpec::for_measure(&m, 40, 21).unwrap();
    let report = rkt_sup(&m, 2.0, 2.0, &grid, &spec).unwrap();
    // ratio at z = 1 is (1/2)/sqrt(pi); the sup over all z is attained at
    // the single candidate apex z = 1 for this measure
    let at_one = 0.5 / core::f64::consts::PI.sqrt();
    assert!(report.sup_ratio >= at_one - 1e-12);
    assert!(!report.grid_too_small);
    assert!(report.sup_ratio.is_finite());
    assert_eq!(
        rkt_sup(&DiscreteMeasure::empty(), 2.0, 2.0, &grid, &spec).unwrap_err(),
        KernelError::EmptyMeasure
    );
}

#[test]
fn rkt_boundary_guard_flags_clipped_window() {
    let spec = QuadratureSpec::default();
    let m = measure(&[(0.0, 1.0, 1.0)]);
    // a window ending right at the ratio's maximiser clips the sup
    let clipped = ZGridSpec {
        re_min: 0.5,
        re_max: 1.0,
        n_re: 9,
        im_max: 0.2,
        n_im: 5,
        include_tent_apexes: false,
    };
    let report = rkt_sup(&m, 2.0, 2.0, &clipped, &spec).unwrap();
    assert!(report.grid_too_small);
}

#[test]
fn rkt_sup_nondecreasing_under_grid_refinement() {
    let spec = QuadratureSpec::default();
    let m = measure(&[(0.0, 1.0, 1.0), (3.0, 0.5, 2.0), (-2.0, 2.0, 0.7)]);
    let coarse_spec = ZGridSpec {
        include_tent_apexes: false,
        ..ZGridSpec::for_measure(&m, 11, 11).unwrap()
    };
    let fine_spec = ZGridSpec {
        n_re: 21,
        n_im: 21,
        include_tent_apexes: false,
        ..coarse_spec.clone()
    };
    let coarse = rkt_sup(&m, 2.0, 2.0, &coarse_spec, &spec).unwrap();
    let fine = rkt_sup(&m, 2.0, 2.0, &fine_spec, &spec).unwrap();
    // 21 log-spaced points over the same range contain the 11-point set
    assert!(fine.sup_ratio >= coarse.sup_ratio - 1e-15);
}

#[test]
fn lemma_chain_bound_on_candidate_tents() {
    // mu(T(omega, r)) <= (2r)^q M^q ||k_{r+i omega}||_{H^p}^q  for
    // M = rkt_sup: |k_{r+i omega}| >= 1/(2r) on the tent.
    let spec = QuadratureSpec::default();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10 {
        let n = rng.gen_range(1..8);
        let atoms: Vec<(f64, f64, f64)> = (0..n)
            .map(|_| {
                (
                    rng.gen_range(-5.0..5.0),
                    rng.gen_range(0.1..3.0),
                    rng.gen_range(0.1..2.0),
                )
            })
            .collect();
        let m = measure(&atoms);
        let (p, q) = (2.0, 2.0);
        let grid = ZGridSpec::for_measure(&m, 30, 15).unwrap();
        let report = rkt_sup(&m, p, q, &grid, &spec).unwrap();
        for tent in crate::measures::candidate_tents(&m) {
            let z = HalfPlanePoint::new(tent.r(), tent.omega()).unwrap();
            let hp = repkernel_hp_norm(z, p, &spec).unwrap();
            let bound = tent.length().powf(q) * report.sup_ratio.powf(q) * hp.powf(q);
            let mass = tent_measure(&m, &tent);
            assert!(mass <= bound + 1e-9, "mass {mass} > bound {bound}");
        }
    }
}

#[test]
fn geometric_constant_dominated_by_rkt_algebra() {
    // constant(mu, p/q) <= 2^{p-1} M^p C_p^p
    let spec = QuadratureSpec::default();
    let m = measure(&[(0.5, 1.0, 1.0), (-1.0, 0.4, 0.3), (2.0, 2.0, 1.4)]);
    let (p, q) = (2.0, 2.0);
    let grid = ZGridSpec::for_measure(&m, 30, 15).unwrap();
    let report = rkt_sup(&m, p, q, &grid, &spec).unwrap();
    let cp = cp_constant(p, &spec).unwrap();
    let constant = geometric_constant(&m, p / q).unwrap().constant;
    let bound = 2.0f64.powf(p - 1.0) * report.sup_ratio.powf(p) * cp.powf(p);
    assert!(constant <= bound * (1.0 + 1e-9));
}
