//! Numeric checks: the eight transformation laws of the two-parameter
//! genus, the Weierstrass difference identity, ellipticity and weights of
//! the expansion coefficients, and Jacobi-index measurement.

use num_complex::Complex64;

use crate::genus::{equivariant_genus_numeric, fixed_point_data, FixedPointData};
use crate::special::numeric::{cis, eta_numeric, theta1_numeric, weierstrass_p_numeric, TWO_PI};
use crate::special::{eisenstein_numeric, lattice_distance};

use super::report::{Tolerances, VerificationReport};
use super::samples::SampleGenerator;

#[derive(Clone, Copy, Debug)]
struct Sample {
    tau: Complex64,
    z: Complex64,
    t1: Complex64,
    t2: Complex64,
}

fn relative_deviation(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / rhs.norm().max(1.0)
}

fn genus_value(
    fp: &FixedPointData,
    s: &Sample,
    q_order: i64,
) -> Option<Complex64> {
    let g = equivariant_genus_numeric(fp, s.tau, s.z, s.t1, s.t2, q_order).ok()?;
    if g.is_clean() {
        Some(g.value)
    } else {
        None
    }
}

/// The eight transformation laws of Z_{X_r}(τ, z; t₁, t₂), each verified at
/// `n_samples` points. The z ↦ z+τ law is checked against the prefactor
/// derived from the θ₁ quasi-periodicity laws,
/// e^{2πi(t₁+t₂)}·(−e^{−2πiz−πiτ})², and the alternate printed factor
/// e^{−πi(t₁+t₂)}·(−e^{−2πiz−πiτ})² is measured and flagged.
pub fn check_modular_laws(
    r: usize,
    n_samples: usize,
    q_order: i64,
    tol: &Tolerances,
    seed: u64,
) -> Vec<VerificationReport> {
    let fp = fixed_point_data(r).expect("r >= 1");
    let mut gen = SampleGenerator::new(seed);

    type Transform = fn(&Sample) -> Sample;
    type Factor = fn(&Sample) -> Complex64;
    let laws: [(&str, Transform, Factor); 8] = [
        ("z-plus-1", |s| Sample { z: s.z + 1.0, ..*s }, |_| Complex64::new(1.0, 0.0)),
        (
            "z-plus-tau",
            |s| Sample { z: s.z + s.tau, ..*s },
            |s| cis(s.t1 + s.t2 - 2.0 * s.z - s.tau),
        ),
        ("t1-plus-1", |s| Sample { t1: s.t1 + 1.0, ..*s }, |_| Complex64::new(1.0, 0.0)),
        ("t1-plus-tau", |s| Sample { t1: s.t1 + s.tau, ..*s }, |s| cis(s.z)),
        ("t2-plus-1", |s| Sample { t2: s.t2 + 1.0, ..*s }, |_| Complex64::new(1.0, 0.0)),
        ("t2-plus-tau", |s| Sample { t2: s.t2 + s.tau, ..*s }, |s| cis(s.z)),
        ("tau-plus-1", |s| Sample { tau: s.tau + 1.0, ..*s }, |_| Complex64::new(1.0, 0.0)),
        (
            "s-transformation",
            |s| Sample {
                tau: -1.0 / s.tau,
                z: s.z / s.tau,
                t1: s.t1 / s.tau,
                t2: s.t2 / s.tau,
            },
            |s| cis((s.z * s.z - s.z * (s.t1 + s.t2)) / s.tau),
        ),
    ];

    let mut reports = Vec::new();
    for (name, transform, factor) in laws {
        let mut max_dev: f64 = 0.0;
        let mut max_variant_dev: f64 = 0.0;
        for _ in 0..n_samples {
            let (s, base, transformed) = gen.draw_until(
                |g| {
                    let tau = g.tau();
                    let s = Sample {
                        tau,
                        z: g.z(tau),
                        t1: g.t(tau),
                        t2: g.t(tau),
                    };
                    let base = genus_value(&fp, &s, q_order);
                    let transformed = genus_value(&fp, &transform(&s), q_order);
                    (s, base, transformed)
                },
                |(_, base, transformed)| base.is_some() && transformed.is_some(),
            );
            let base = base.unwrap();
            let lhs = transformed.unwrap();
            max_dev = max_dev.max(relative_deviation(lhs, factor(&s) * base));
            if name == "z-plus-tau" {
                let variant = cis(-(s.t1 + s.t2) / 2.0 - 2.0 * s.z - s.tau);
                max_variant_dev = max_variant_dev.max(relative_deviation(lhs, variant * base));
            }
        }
        let mut report = VerificationReport::numeric(format!("modular-law-{name}"), max_dev, tol.theta_identity)
            .with_param("r", r.to_string())
            .with_param("samples", n_samples.to_string())
            .with_param("seed", seed.to_string());
        if name == "z-plus-tau" && max_variant_dev > tol.theta_identity {
            report = report.flag(format!(
                "variant prefactor exp(-pi*i*(t1+t2))*(-exp(-2pi*i*z-pi*i*tau))^2 deviates by {max_variant_dev:.3e}; \
                 the theta-derived prefactor exp(2pi*i*(t1+t2))*(-exp(-2pi*i*z-pi*i*tau))^2 holds; \
                 measured correction factor exp(3pi*i*(t1+t2))"
            ));
        }
        reports.push(report);
    }
    reports
}

/// ℘(τ,t) − ℘(τ,z) = (2π)²·(θ₁(z)/η³)^{−2}·θ₁(z+t)·θ₁(z−t)/θ₁(t)².
/// The variant with denominator θ₁(t)·θ₁(−t) = −θ₁(t)² flips the sign and
/// is flagged with the measured sign.
pub fn check_p_difference(
    n_samples: usize,
    q_order: i64,
    tol: &Tolerances,
    seed: u64,
) -> VerificationReport {
    let mut gen = SampleGenerator::new(seed);
    let mut max_dev: f64 = 0.0;
    let mut max_variant_dev: f64 = 0.0;
    for _ in 0..n_samples {
        let (tau, z, t) = gen.draw_until(
            |g| {
                let tau = g.tau();
                (tau, g.z(tau), g.cell_point(tau, 0.21))
            },
            |&(tau, z, t)| {
                [z, t, z + t, z - t]
                    .into_iter()
                    .all(|x| lattice_distance(x, tau) > 0.02)
                    && lattice_distance(z - t, tau) > 0.02
            },
        );
        let lhs = weierstrass_p_numeric(tau, t, q_order).unwrap().value
            - weierstrass_p_numeric(tau, z, q_order).unwrap().value;
        let th = |x: Complex64| theta1_numeric(tau, x, q_order).unwrap().value;
        let eta = eta_numeric(tau, q_order).unwrap().value;
        let eta3 = eta * eta * eta;
        let quotient = eta3 / th(z);
        let rhs = TWO_PI * TWO_PI * quotient * quotient * th(z + t) * th(z - t) / (th(t) * th(t));
        max_dev = max_dev.max(relative_deviation(lhs, rhs));
        max_variant_dev = max_variant_dev.max(relative_deviation(lhs, -rhs));
    }
    let mut report = VerificationReport::numeric("weierstrass-difference", max_dev, tol.theta_identity)
        .with_param("samples", n_samples.to_string())
        .with_param("seed", seed.to_string());
    if max_variant_dev > tol.theta_identity {
        report = report.flag(format!(
            "variant denominator theta1(t)*theta1(-t) measures sign -1 (deviation {max_variant_dev:.3e}); \
             the identity holds with +theta1(t)^2"
        ));
    }
    report
}

/// Ellipticity and modular weight of b_{2g} = α̂_{2g}/α̂₀ via the closed
/// forms b₂ = −r²·℘(τ,z) and b_{2g} = r^{2g}(2n−1)G_{2g}(τ) for g ≥ 2.
pub fn check_b2g_ellipticity(
    r: usize,
    g_max: usize,
    n_samples: usize,
    q_order: i64,
    tol: &Tolerances,
    seed: u64,
) -> VerificationReport {
    let mut gen = SampleGenerator::new(seed);
    let mut max_dev: f64 = 0.0;
    let r2 = (r * r) as f64;
    // The ℘ Fourier expansion converges on |Im z| < Im τ and needs margin
    // to reach the tolerance; z + τ must sit inside that strip too.
    let p_order = q_order.max(80);

    for _ in 0..n_samples {
        let (tau, z) = gen.draw_until(
            |g| {
                let tau = g.tau();
                (tau, g.lower_annulus_point(tau, 0.3))
            },
            |&(tau, z)| {
                let s_tau = -1.0 / tau;
                let s_z = z / tau;
                z.im < -0.1 * tau.im
                    && (z + tau).im < 0.88 * tau.im
                    && s_z.im.abs() < 0.7 * s_tau.im
                    && lattice_distance(z, tau) > 0.05
            },
        );
        let b2 = |tau: Complex64, z: Complex64| -> Complex64 {
            -r2 * weierstrass_p_numeric(tau, z, p_order).unwrap().value
        };
        let base = b2(tau, z);
        // Double periodicity in z and invariance under τ ↦ τ+1.
        max_dev = max_dev.max(relative_deviation(b2(tau, z + 1.0), base));
        max_dev = max_dev.max(relative_deviation(b2(tau, z + tau), base));
        max_dev = max_dev.max(relative_deviation(b2(tau + 1.0, z), base));
        // Weight 2 under S.
        max_dev = max_dev.max(relative_deviation(b2(-1.0 / tau, z / tau), tau * tau * base));

        for g in 2..=g_max {
            let k = g as u32;
            let factor = {
                // G_{2g} = −(2πi)^{2g}·B_{2g}/(2g)!·E_{2g}; the constant in
                // front cancels in every ratio below, so work with E alone.
                let scale = (r as f64).powi(2 * g as i32) * (2.0 * g as f64 - 1.0);
                move |tau: Complex64| -> Complex64 {
                    scale * eisenstein_numeric(k, tau, q_order).unwrap().value
                }
            };
            let base = factor(tau);
            max_dev = max_dev.max(relative_deviation(factor(tau + 1.0), base));
            let s_cov = tau.powi(2 * g as i32) * base;
            max_dev = max_dev.max(relative_deviation(factor(-1.0 / tau), s_cov));
        }
    }
    VerificationReport::numeric("b2g-ellipticity", max_dev, tol.expansion_coeff)
        .with_param("r", r.to_string())
        .with_param("g_max", g_max.to_string())
        .with_param("samples", n_samples.to_string())
        .with_param("seed", seed.to_string())
        .with_note("b_{2g} for g >= 2 carries no z argument; z-independence is structural")
}

/// Measured Jacobi index of a form φ from φ(τ, z+τ) = e^{−2πim(2z+τ)}·φ(τ,z).
///
/// The magnitude of the ratio determines m branch-free by least squares
/// over the samples; the full complex ratio is then checked against the
/// measured index and the residual reported as the deviation.
pub fn measure_jacobi_index(
    name: &str,
    form: &dyn Fn(Complex64, Complex64) -> Complex64,
    n_samples: usize,
    tol: &Tolerances,
    seed: u64,
) -> (f64, VerificationReport) {
    let mut gen = SampleGenerator::new(seed);
    let mut samples = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let (tau, z, rho) = gen.draw_until(
            |g| {
                let tau = g.tau();
                let z = g.z(tau);
                let base = form(tau, z);
                let shifted = form(tau, z + tau);
                (tau, z, shifted / base)
            },
            |&(_, _, rho)| rho.is_finite() && rho.norm() > 1e-12,
        );
        samples.push((tau, z, rho));
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for &(tau, z, rho) in &samples {
        let x = TWO_PI * (2.0 * z + tau).im;
        num += rho.norm().ln() * x;
        den += x * x;
    }
    let index = num / den;
    let mut max_dev: f64 = 0.0;
    for &(tau, z, rho) in &samples {
        let predicted = cis(-index * (2.0 * z + tau));
        max_dev = max_dev.max((rho / predicted - 1.0).norm());
    }
    let report = VerificationReport::numeric(format!("jacobi-index-{name}"), max_dev, tol.expansion_coeff)
        .with_param("measured_index", format!("{index:.9}"))
        .with_param("samples", n_samples.to_string())
        .with_param("seed", seed.to_string());
    (index, report)
}

/// Measured modular weight of a form of known index m, from the S-law
/// φ(−1/τ, z/τ) = τ^w·e^{2πi·m·z²/τ}·φ(τ, z).
pub fn measure_weight(
    form: &dyn Fn(Complex64, Complex64) -> Complex64,
    index: f64,
    n_samples: usize,
    seed: u64,
) -> f64 {
    let mut gen = SampleGenerator::new(seed);
    let mut acc = 0.0;
    for _ in 0..n_samples {
        let (tau, z) = gen.draw_until(
            |g| {
                let tau = g.tau();
                (tau, g.z(tau))
            },
            |&(tau, _)| tau.norm().ln().abs() > 0.15,
        );
        let ratio = form(-1.0 / tau, z / tau) / (form(tau, z) * cis(index * z * z / tau));
        acc += ratio.norm().ln() / tau.norm().ln();
    }
    acc / n_samples as f64
}

/// Numeric evaluator for an exact series with y-Laurent coefficients.
pub fn eval_y_series(
    series: &crate::series::QSeries<crate::series::YLaurent>,
    tau: Complex64,
    z: Complex64,
) -> Complex64 {
    let q24 = cis(tau / 24.0);
    let mu = cis(z / 2.0);
    series.eval_with(q24, |p| p.eval_halfpow(mu))
}

/// (θ₁(τ,z)/η(τ)³)² evaluated numerically.
pub fn theta_eta3_squared_numeric(tau: Complex64, z: Complex64, q_order: i64) -> Complex64 {
    let theta = theta1_numeric(tau, z, q_order).unwrap().value;
    let eta = eta_numeric(tau, q_order).unwrap().value;
    let q = theta / (eta * eta * eta);
    q * q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::k3_elliptic_genus;

    #[test]
    fn theta_eta_quotient_has_weight_minus_2_index_1() {
        let tol = Tolerances::default();
        let form = |tau: Complex64, z: Complex64| theta_eta3_squared_numeric(tau, z, 24);
        let (index, report) = measure_jacobi_index("theta-eta3-sq", &form, 8, &tol, 11);
        assert!(report.passed(), "{report:?}");
        assert!((index - 1.0).abs() < 1e-7, "index {index}");
        let weight = measure_weight(&form, index, 8, 12);
        assert!((weight + 2.0).abs() < 1e-6, "weight {weight}");
    }

    #[test]
    fn k3_index_is_one() {
        let tol = Tolerances::default();
        let k3 = k3_elliptic_genus(20);
        let form = move |tau: Complex64, z: Complex64| eval_y_series(&k3, tau, z);
        let (index, report) = measure_jacobi_index("k3", &form, 8, &tol, 5);
        assert!(report.passed(), "{report:?}");
        assert!((index - 1.0).abs() < 1e-6, "index {index}");
    }

    #[test]
    fn p_difference_holds_with_derived_sign() {
        let tol = Tolerances::default();
        let report = check_p_difference(6, 28, &tol, 9);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.status, crate::verify::report::CheckStatus::Flagged);
    }
}
