//! Complex-double evaluation of the special functions.
//!
//! All fugacity powers are computed as exponentials of the underlying
//! half-plane variables (q^{s} := e^{2πiτs}, y^{s} := e^{2πizs}), so no
//! square-root or logarithm branch is ever taken. θ₁ uses the truncated
//! product formula; the tail bound is estimated from the first dropped
//! factor.

use num_complex::Complex64;
use thiserror::Error;

use super::arith::divisors;

pub const TWO_PI: f64 = std::f64::consts::TAU;

#[derive(Debug, Error)]
pub enum NumericError {
    #[error("tau must lie in the upper half-plane (Im tau = {im})")]
    TauNotInUpperHalfPlane { im: f64 },
}

/// Value of a truncated evaluation plus a crude bound on the dropped tail.
#[derive(Clone, Copy, Debug)]
pub struct NumericValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

impl NumericValue {
    /// Tail larger than 10⁻¹² means the truncation order was too small for
    /// the requested point.
    pub fn converged(&self) -> bool {
        self.tail_bound <= 1e-12
    }
}

fn check_tau(tau: Complex64) -> Result<(), NumericError> {
    if tau.im <= 0.0 {
        Err(NumericError::TauNotInUpperHalfPlane { im: tau.im })
    } else {
        Ok(())
    }
}

/// e^{2πi·x}: the one exponential everything else is phrased through.
pub fn cis(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, TWO_PI) * x).exp()
}

/// θ₁(τ, z) by the truncated triple product, factors through q^{q_order}.
pub fn theta1_numeric(
    tau: Complex64,
    z: Complex64,
    q_order: i64,
) -> Result<NumericValue, NumericError> {
    check_tau(tau)?;
    let q = cis(tau);
    let y = cis(z);
    // i·q^{1/8}·y^{−1/2} with the half powers taken as exponentials.
    let mut value = Complex64::new(0.0, 1.0) * cis(tau / 8.0) * cis(-z / 2.0);
    let y_inv = 1.0 / y;
    let mut qk = Complex64::new(1.0, 0.0); // q^{k-1}
    for _k in 1..=q_order {
        let qk_next = qk * q;
        value *= (1.0 - qk_next) * (1.0 - y * qk) * (1.0 - y_inv * qk_next);
        qk = qk_next;
    }
    let qn = q.norm().powi(q_order as i32);
    let tail = qn * (2.0 + y.norm() + y_inv.norm()) * value.norm().max(1.0);
    Ok(NumericValue {
        value,
        tail_bound: tail,
    })
}

/// η(τ) = q^{1/24}·Π(1 − q^k), factors through q^{q_order}.
pub fn eta_numeric(tau: Complex64, q_order: i64) -> Result<NumericValue, NumericError> {
    check_tau(tau)?;
    let q = cis(tau);
    let mut value = cis(tau / 24.0);
    let mut qk = Complex64::new(1.0, 0.0);
    for _k in 1..=q_order {
        qk *= q;
        value *= 1.0 - qk;
    }
    let tail = q.norm().powi(q_order as i32 + 1) * value.norm().max(1.0);
    Ok(NumericValue {
        value,
        tail_bound: tail,
    })
}

/// E_{2k}(τ) from the divisor-sum expansion through q^{q_order}.
pub fn eisenstein_numeric(
    k: u32,
    tau: Complex64,
    q_order: i64,
) -> Result<NumericValue, NumericError> {
    check_tau(tau)?;
    let series = super::eisenstein::eisenstein(k, q_order);
    let q24 = cis(tau / 24.0);
    let value = series.eval(q24);
    let tail = cis(tau).norm().powi(q_order as i32 + 1) * value.norm().max(1.0);
    Ok(NumericValue {
        value,
        tail_bound: tail,
    })
}

/// P̂(τ, z) = ℘/(2πi)² from the y-form q-expansion through q^{q_order}.
pub fn p_hat_numeric(
    tau: Complex64,
    z: Complex64,
    q_order: i64,
) -> Result<NumericValue, NumericError> {
    check_tau(tau)?;
    let q = cis(tau);
    let y = cis(z);
    let mut value = Complex64::new(1.0 / 12.0, 0.0) + y / ((1.0 - y) * (1.0 - y));
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 1..=q_order {
        qn *= q;
        let mut inner = Complex64::new(0.0, 0.0);
        for d in divisors(n as u64) {
            let di = d as i64;
            let yd = cis(z * di as f64);
            inner += (yd + 1.0 / yd - 2.0) * d as f64;
        }
        value += qn * inner;
    }
    // Tail coefficients grow like σ₁(n)·|y|^{±n}; fold that into the bound.
    let growth = (1.0 + y.norm().max(1.0 / y.norm())).powi(2);
    let tail = q.norm().powi(q_order as i32 + 1) * growth * (q_order as f64 + 1.0);
    Ok(NumericValue {
        value,
        tail_bound: tail,
    })
}

/// ℘(τ, z) = (2πi)²·P̂(τ, z).
pub fn weierstrass_p_numeric(
    tau: Complex64,
    z: Complex64,
    q_order: i64,
) -> Result<NumericValue, NumericError> {
    let p = p_hat_numeric(tau, z, q_order)?;
    let factor = Complex64::new(0.0, TWO_PI) * Complex64::new(0.0, TWO_PI);
    Ok(NumericValue {
        value: factor * p.value,
        tail_bound: factor.norm() * p.tail_bound,
    })
}

/// Distance from x to the lattice ℤτ + ℤ.
pub fn lattice_distance(x: Complex64, tau: Complex64) -> f64 {
    let alpha = x.im / tau.im;
    let beta = x.re - alpha * tau.re;
    let nearest = alpha.round() * tau + Complex64::new(beta.round(), 0.0);
    (x - nearest).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const Q_ORDER: i64 = 32;

    #[test]
    fn theta_vanishes_at_zero() {
        let tau = c(0.21, 1.1);
        let v = theta1_numeric(tau, c(0.0, 0.0), Q_ORDER).unwrap();
        assert!(v.value.norm() < 1e-14);
        assert!(v.converged());
    }

    #[test]
    fn theta_quasi_periodicity() {
        // θ₁(τ, z+τ) = −e^{−2πiz−πiτ}·θ₁(τ, z)
        let tau = c(-0.13, 0.93);
        let z = c(0.17, 0.21);
        let lhs = theta1_numeric(tau, z + tau, Q_ORDER).unwrap().value;
        let factor = -(c(0.0, -TWO_PI) * z + c(0.0, -TWO_PI / 2.0) * tau).exp();
        let rhs = factor * theta1_numeric(tau, z, Q_ORDER).unwrap().value;
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-11);
    }

    #[test]
    fn theta_s_transformation() {
        // θ₁(−1/τ, z/τ) = −i·√(τ/i)·e^{πiz²/τ}·θ₁(τ, z)
        let tau = c(0.31, 1.24);
        let z = c(0.11, -0.08);
        let lhs = theta1_numeric(-1.0 / tau, z / tau, Q_ORDER).unwrap().value;
        let root = (tau / c(0.0, 1.0)).sqrt();
        let factor = c(0.0, -1.0) * root * (c(0.0, TWO_PI / 2.0) * z * z / tau).exp();
        let rhs = factor * theta1_numeric(tau, z, Q_ORDER).unwrap().value;
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-10);
    }

    #[test]
    fn eta_cube_matches_theta_derivative_scale() {
        // θ₁'(τ, 0) = 2π·η³: check via a central difference.
        let tau = c(0.07, 1.02);
        let h = 1e-5;
        let d = (theta1_numeric(tau, c(h, 0.0), Q_ORDER).unwrap().value
            - theta1_numeric(tau, c(-h, 0.0), Q_ORDER).unwrap().value)
            / (2.0 * h);
        let eta = eta_numeric(tau, Q_ORDER).unwrap().value;
        let rhs = TWO_PI * eta * eta * eta;
        assert!((d - rhs).norm() / rhs.norm() < 1e-8);
    }

    #[test]
    fn p_hat_representations_agree() {
        // w-series route vs y-form route at a sample point.
        let tau = c(0.3, 1.1);
        let z = c(0.23, 0.11);
        let yform = p_hat_numeric(tau, z, Q_ORDER).unwrap().value;
        let cache = crate::special::eisenstein::EisensteinCache::new();
        let wexp = crate::special::weierstrass::p_hat_wseries(&cache, Q_ORDER, 40);
        let w = c(0.0, TWO_PI) * z;
        let q24 = cis(tau / 24.0);
        let mut wseries = 1.0 / (w * w);
        for (e, qs) in &wexp.regular {
            wseries += qs.eval(q24) * w.powi(*e as i32);
        }
        assert!((yform - wseries).norm() < 1e-9, "{yform} vs {wseries}");
        // Lattice distance sanity.
        assert!(lattice_distance(tau + c(3.0, 0.0), tau) < 1e-12);
        assert!(lattice_distance(z, tau) > 0.1);
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(theta1_numeric(c(0.3, -1.0), c(0.1, 0.0), 8).is_err());
        assert!(eta_numeric(c(0.3, 0.0), 8).is_err());
    }

    #[test]
    fn all_four_theta_laws_at_sampled_points() {
        // z+1, z+τ, τ+1, and S at 20 seeded points, deviation < 1e-9.
        let mut gen = crate::verify::SampleGenerator::new(42);
        let mut max_dev: f64 = 0.0;
        for _ in 0..20 {
            let tau = gen.tau();
            let z = gen.z(tau);
            let th = |tau, z| theta1_numeric(tau, z, Q_ORDER).unwrap().value;
            let base = th(tau, z);
            let checks = [
                (th(tau, z + 1.0), -base),
                (th(tau, z + tau), -cis(-z - tau / 2.0) * base),
                (th(tau + 1.0, z), cis(Complex64::new(0.125, 0.0)) * base),
                (
                    th(-1.0 / tau, z / tau),
                    c(0.0, -1.0) * (tau / c(0.0, 1.0)).sqrt() * cis(z * z / (2.0 * tau)) * base,
                ),
            ];
            for (lhs, rhs) in checks {
                max_dev = max_dev.max((lhs - rhs).norm() / rhs.norm().max(1.0));
            }
        }
        assert!(max_dev < 1e-9, "max deviation {max_dev:e}");
    }

    #[test]
    fn deviation_decreases_with_q_order() {
        // Truncation error dominates at tiny q_order and must shrink as the
        // order grows, down to roundoff level.
        let tau = c(0.23, 0.82);
        let z = c(0.19, 0.14);
        let dev = |q_order: i64| -> f64 {
            let lhs = theta1_numeric(-1.0 / tau, z / tau, q_order).unwrap().value;
            let rhs = c(0.0, -1.0)
                * (tau / c(0.0, 1.0)).sqrt()
                * cis(z * z / (2.0 * tau))
                * theta1_numeric(tau, z, q_order).unwrap().value;
            (lhs - rhs).norm() / rhs.norm()
        };
        let coarse = dev(2);
        let medium = dev(4);
        let fine = dev(12);
        assert!(coarse > 10.0 * medium, "{coarse:e} vs {medium:e}");
        assert!(medium > 10.0 * fine || fine < 1e-13, "{medium:e} vs {fine:e}");
    }
}
