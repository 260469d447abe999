//! One-dimensional Poisson kernel on the upper half-plane.

use super::NumericsError;

/// `P_t(x) = (1/pi) t / (t^2 + x^2)`, normalised so that the kernel has
/// unit mass for every height `t > 0`.
pub fn poisson_kernel(t: f64, x: f64) -> Result<f64, NumericsError> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(NumericsError::InvalidHeight);
    }
    Ok(t / (core::f64::consts::PI * (t * t + x * x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::quadrature::{integrate_adaptive_real, QuadratureSpec};
    use proptest::prelude::*;

    #[test]
    fn unit_height_at_origin() {
        // c_1 = 1/pi is forced by unit mass
        let v = poisson_kernel(1.0, 0.0).unwrap();
        assert!((v - 1.0 / core::f64::consts::PI).abs() <= 1e-15);
    }

    #[test]
    fn unit_mass_at_height_two() {
        // arctan antiderivative: int_{-Y}^{Y} P_2 = (2/pi) atan(Y/2)
        let spec = QuadratureSpec::default();
        let y = 1e8;
        let body = integrate_adaptive_real(|x| poisson_kernel(2.0, x).unwrap(), -y, y, &spec)
            .unwrap()
            .re();
        let tail = 1.0 - 2.0 / core::f64::consts::PI * (y / 2.0).atan();
        assert!((body + tail - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn invalid_height_rejected() {
        assert_eq!(
            poisson_kernel(0.0, 1.0).unwrap_err(),
            NumericsError::InvalidHeight
        );
        assert_eq!(
            poisson_kernel(-1.0, 1.0).unwrap_err(),
            NumericsError::InvalidHeight
        );
    }

    proptest! {
        #[test]
        fn even_positive_and_decreasing(t in 1e-3f64..1e3, x in -1e3f64..1e3) {
            let v = poisson_kernel(t, x).unwrap();
            let w = poisson_kernel(t, -x).unwrap();
            prop_assert!(v > 0.0);
            prop_assert_eq!(v, w);
            let further = poisson_kernel(t, 2.0 * x.abs() + 1.0).unwrap();
            prop_assert!(further <= v);
        }
    }
}
