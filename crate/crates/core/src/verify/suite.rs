//! The aggregated verification suite: every identity, transformation law
//! and singularity claim the engine rests on, as one deterministic list of
//! reports.

use num_complex::Complex64;
use num_traits::Zero;

use crate::genus::{
    genus_circle_exact, k3_elliptic_genus, regularized_genus, theta_over_eta3_squared, v_expand,
};
use crate::series::{rat, rational_string, trunc_for_q_order, LaurentPoly, Rational};
use crate::special::eisenstein::{eisenstein, eisenstein_lambert};
use crate::special::numeric::cis;
use crate::special::{binomial, eulerian, log_one_minus_exp, p_hat_numeric};

use super::exact::{check_beta_recursion, check_hi_identity};
use super::laws::{
    check_b2g_ellipticity, check_modular_laws, check_p_difference, eval_y_series,
    measure_jacobi_index, measure_weight, theta_eta3_squared_numeric,
};
use super::poles::{scan_poles_stable, PoleVerdict};
use super::report::{Tolerances, VerificationReport};
use super::samples::SampleGenerator;

/// Knobs for a full suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub r: usize,
    pub q_order: i64,
    pub v_order: i64,
    pub n_samples: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            r: 2,
            q_order: 12,
            v_order: 12,
            n_samples: 20,
            seed: 1,
            tolerances: Tolerances::default(),
        }
    }
}

/// Frozen Eisenstein leading coefficients, the two independent Eisenstein
/// routes, the Eulerian power-sum identity, and the log(1−e^v) expansion.
pub fn check_special_function_identities(q_order: i64) -> VerificationReport {
    let mut mismatches = Vec::new();

    let e2 = eisenstein(1, 3);
    for (n, want) in [(0, 1i64), (1, -24), (2, -72), (3, -96)] {
        if e2.coeff_q(n) != rat(want, 1) {
            mismatches.push(format!("E2 q^{n}: {}", rational_string(&e2.coeff_q(n))));
        }
    }
    let e4 = eisenstein(2, 2);
    for (n, want) in [(0, 1i64), (1, 240), (2, 2160)] {
        if e4.coeff_q(n) != rat(want, 1) {
            mismatches.push(format!("E4 q^{n}: {}", rational_string(&e4.coeff_q(n))));
        }
    }

    for k in 1..=6u32 {
        let a = eisenstein(k, q_order);
        let b = eisenstein_lambert(k, q_order);
        if let Some((e, x, y)) = a.first_mismatch(&b, trunc_for_q_order(q_order)) {
            mismatches.push(format!(
                "E{} routes differ at q^{}/24: {} vs {}",
                2 * k,
                e,
                rational_string(&x),
                rational_string(&y)
            ));
        }
    }

    // Σ_{m≥1} mⁿ xᵐ = Σ_j A(n,j) x^{j+1} / (1−x)^{n+1} through x^10.
    const M: usize = 10;
    for n in 1..=6u32 {
        let row = eulerian(n);
        let mut closed = vec![<Rational as Zero>::zero(); M + 1];
        for (j, a) in row.iter().enumerate() {
            // x^{j+1}·(1−x)^{−(n+1)}: coefficient of x^{j+1+k} is C(n+k, n).
            for k in 0..=M.saturating_sub(j + 1) {
                closed[j + 1 + k] +=
                    Rational::from_integer(a * binomial(n + k as u32, n));
            }
        }
        for m in 1..=M {
            let direct = Rational::from_integer(num_bigint::BigInt::from(m).pow(n));
            if closed[m] != direct {
                mismatches.push(format!(
                    "Eulerian identity n={n} at x^{m}: {} vs {}",
                    rational_string(&closed[m]),
                    rational_string(&direct)
                ));
            }
        }
    }

    let log = log_one_minus_exp(10);
    if log.coeff(2) != rat(1, 24) {
        mismatches.push(format!("log(1-e^v) v^2: {}", rational_string(&log.coeff(2))));
    }
    for k in [3usize, 5, 7, 9] {
        if !Zero::is_zero(&log.coeff(k)) {
            mismatches.push(format!("log(1-e^v) v^{k} nonzero"));
        }
    }
    let sum = log.add(&log.substitute_neg_v());
    if !sum.pi_i_cancels() || !Zero::is_zero(&sum.coeff(1)) || sum.coeff(2) != rat(1, 12) {
        mismatches.push("log(1-e^v)+log(1-e^{-v}) structure".into());
    }

    VerificationReport::exact("special-function-identities", mismatches)
        .with_param("q_order", q_order.to_string())
}

/// Numeric agreement of the two P̂ representations on sampled points.
pub fn check_weierstrass_representations(
    n_samples: usize,
    q_order: i64,
    tol: &Tolerances,
    seed: u64,
) -> VerificationReport {
    let cache = crate::special::EisensteinCache::new();
    let wexp = crate::special::p_hat_wseries(&cache, q_order, 30);
    let mut gen = SampleGenerator::new(seed);
    let mut max_dev: f64 = 0.0;
    for _ in 0..n_samples {
        let tau = gen.tau();
        let z = gen.cell_point(tau, 0.15);
        let yform = p_hat_numeric(tau, z, q_order).unwrap().value;
        let w = Complex64::new(0.0, crate::special::numeric::TWO_PI) * z;
        let q24 = cis(tau / 24.0);
        let mut wseries = 1.0 / (w * w);
        for e in (2..=30).step_by(2) {
            wseries += wexp.regular_coeff(e).eval(q24) * w.powi(e as i32);
        }
        max_dev = max_dev.max((yform - wseries).norm() / yform.norm().max(1.0));
    }
    VerificationReport::numeric("weierstrass-representations", max_dev, tol.theta_identity)
        .with_param("samples", n_samples.to_string())
        .with_param("seed", seed.to_string())
}

/// The exact circle series against the numeric two-parameter genus at
/// t₁ = −t₂ = t. This pins the θ₁(τ, rt) denominators of the restriction.
pub fn check_circle_consistency(
    r: usize,
    n_samples: usize,
    q_order: i64,
    tol: &Tolerances,
    seed: u64,
) -> VerificationReport {
    let circle = genus_circle_exact(r, q_order).expect("r >= 1");
    let fp = crate::genus::fixed_point_data(r).expect("r >= 1");
    let mut gen = SampleGenerator::new(seed);
    let mut max_dev: f64 = 0.0;
    for _ in 0..n_samples {
        let (tau, z, t, exact) = gen.draw_until(
            |g| {
                let tau = g.tau();
                let z = g.z(tau);
                let t = g.t(tau);
                let exact = circle.eval_numeric(tau, z, t);
                (tau, z, t, exact)
            },
            |&(_, _, _, exact)| exact.is_some(),
        );
        let numeric = crate::genus::equivariant_genus_numeric(&fp, tau, z, t, -t, q_order)
            .expect("upper half-plane");
        if !numeric.is_clean() {
            continue;
        }
        max_dev = max_dev.max((exact.unwrap() - numeric.value).norm() / numeric.value.norm().max(1.0));
    }
    VerificationReport::numeric("circle-restriction-consistency", max_dev, tol.theta_identity)
        .with_param("r", r.to_string())
        .with_param("samples", n_samples.to_string())
        .with_param("seed", seed.to_string())
        .with_note(
            "restriction denominators are theta1(tau, r*t)^2 via theta1(-a) = -theta1(a); \
             a displayed theta1(tau, r*n*t) denominator is not what the substitution yields",
        )
}

/// α̂₀ = (1/r)·(θ₁/η³)², exactly; the variant power (θ₁/η)² is tested too
/// and flagged with its first mismatch.
pub fn check_alpha0_prefactor(r: usize, q_order: i64) -> VerificationReport {
    let expansion = v_expand(r, q_order, 4).expect("small expansion");
    let alpha0 = expansion.alpha_hat(0).expect("order in range");
    let derived = theta_over_eta3_squared(q_order).scale(&rat(1, r as i64));
    let bound = alpha0.truncation().min(derived.truncation());
    let mut mismatches = Vec::new();
    if let Some((e, _, _)) = alpha0.first_mismatch(&derived, bound) {
        mismatches.push(format!("alpha_hat_0 vs (theta1/eta^3)^2/r at q^{e}/24"));
    }

    let mut report = VerificationReport::exact("alpha0-prefactor", mismatches)
        .with_param("r", r.to_string())
        .with_param("q_order", q_order.to_string());

    // Variant: eta power 2 instead of 6 in the square.
    let t = crate::special::theta1_qexp::<crate::series::YLaurent>(
        &crate::special::ThetaArgument::z(),
        q_order,
    )
    .expect("plain z argument");
    let eta = crate::special::dedekind_eta_qexp(q_order);
    let eta2_inv = eta
        .mul(&eta)
        .invert()
        .expect("unit leading")
        .map_coeffs(|c| LaurentPoly::constant(c.clone()));
    let variant = t
        .series
        .mul(&t.series)
        .mul(&eta2_inv)
        .neg()
        .scale(&rat(1, r as i64));
    let vbound = alpha0.truncation().min(variant.truncation());
    if let Some((e, a, b)) = alpha0.first_mismatch(&variant, vbound) {
        report = report.flag(format!(
            "variant prefactor (theta1/eta)^2/r first differs at q^{e}/24 ({a:?} vs {b:?}); \
             the eta^3 power is forced by the leading-order expansion"
        ));
    }
    report
}

/// Z^reg_{X_r} = (r/24)·Z_{K3}, coefficient for coefficient.
pub fn check_k3_proportionality(r: usize, q_order: i64) -> VerificationReport {
    let zreg = regularized_genus(r, q_order).expect("regularized genus");
    let k3 = k3_elliptic_genus(q_order);
    let lhs = zreg.scale(&rat(24, 1));
    let rhs = k3.scale(&rat(r as i64, 1));
    let bound = lhs.truncation().min(rhs.truncation());
    let mut mismatches = Vec::new();
    if let Some((e, a, b)) = lhs.first_mismatch(&rhs, bound) {
        mismatches.push(format!("24*Zreg vs r*Z_K3 at q^{e}/24: {a:?} vs {b:?}"));
    }
    VerificationReport::exact("regularized-k3-proportionality", mismatches)
        .with_param("r", r.to_string())
        .with_param("q_order", q_order.to_string())
        .with_param("ratio", format!("{r}/24"))
        .with_note("the proportionality constant Zreg/Z_K3 is exactly r/24")
}

/// Pole pattern for one rank: j < r candidates cancel, j = r candidates are
/// genuine first-order poles.
pub fn check_pole_structure(
    r: usize,
    lattice_range: i64,
    epsilon: f64,
    q_order: i64,
    tol: &Tolerances,
    seed: u64,
) -> VerificationReport {
    let mut gen = SampleGenerator::new(seed);
    let tau = gen.tau();
    let z = gen.z(tau);
    let t2 = gen.t(tau);
    let scans = scan_poles_stable(r, tau, z, t2, lattice_range, epsilon, q_order, tol);
    let mut max_cancel_residue: f64 = 0.0;
    let mut min_genuine_residue = f64::INFINITY;
    let mut failures = Vec::new();
    let mut skipped = 0usize;
    for scan in &scans {
        match scan.verdict {
            PoleVerdict::Skipped => skipped += 1,
            verdict => {
                let magnitude = scan.residue.map(|x| x.norm()).unwrap_or(f64::NAN);
                if scan.candidate.j == r {
                    min_genuine_residue = min_genuine_residue.min(magnitude);
                    if verdict != PoleVerdict::GenuinePole {
                        failures.push(format!(
                            "expected genuine pole at j={} m={} n={}, got {verdict:?} (|res| = {magnitude:.3e})",
                            scan.candidate.j, scan.candidate.m, scan.candidate.n
                        ));
                    }
                } else {
                    max_cancel_residue = max_cancel_residue.max(magnitude);
                    if verdict != PoleVerdict::Cancels {
                        failures.push(format!(
                            "expected cancellation at j={} m={} n={}, got {verdict:?} (|res| = {magnitude:.3e})",
                            scan.candidate.j, scan.candidate.m, scan.candidate.n
                        ));
                    }
                }
            }
        }
    }
    let mut report = VerificationReport::exact(format!("pole-structure-r{r}"), failures)
        .with_param("r", r.to_string())
        .with_param("lattice_range", lattice_range.to_string())
        .with_param("epsilon", format!("{epsilon:e}"))
        .with_param("seed", seed.to_string())
        .with_param("max_cancelled_residue", format!("{max_cancel_residue:.3e}"))
        .with_param("min_genuine_residue", format!("{min_genuine_residue:.3e}"));
    if skipped > 0 {
        report = report.with_note(format!("{skipped} candidates skipped for collisions"));
    }
    report
}

/// Measured Jacobi indices of Z_K3, Z^reg and (θ₁/η³)², with the weight of
/// the latter; the Z^reg index is reported as data and checked for
/// consistency with the K3 proportionality.
pub fn check_jacobi_indices(
    r: usize,
    n_samples: usize,
    tol: &Tolerances,
    seed: u64,
) -> Vec<VerificationReport> {
    let eval_q_order = 20;
    let mut out = Vec::new();

    let k3 = k3_elliptic_genus(eval_q_order);
    let k3_form = move |tau: Complex64, z: Complex64| eval_y_series(&k3, tau, z);
    let (k3_index, k3_report) = measure_jacobi_index("k3", &k3_form, n_samples, tol, seed);
    out.push(
        k3_report.with_note(format!("measured index {k3_index:.9}, expected 1")),
    );

    let zreg = regularized_genus(r, eval_q_order).expect("regularized genus");
    let zreg_form = move |tau: Complex64, z: Complex64| eval_y_series(&zreg, tau, z);
    let (zreg_index, zreg_report) =
        measure_jacobi_index(&format!("zreg-r{r}"), &zreg_form, n_samples, tol, seed + 1);
    let mut zreg_report = zreg_report
        .with_param("r", r.to_string())
        .with_note(format!(
            "measured index {zreg_index:.9}; proportionality to Z_K3 forces index 1"
        ));
    if (zreg_index - 2.0).abs() > 0.5 {
        zreg_report = zreg_report.flag(
            "a stated index of 2 is inconsistent with the measurement; the measured index is \
             reported as data",
        );
    }
    out.push(zreg_report);

    let te_form = |tau: Complex64, z: Complex64| theta_eta3_squared_numeric(tau, z, 24);
    let (te_index, te_report) =
        measure_jacobi_index("theta-eta3-sq", &te_form, n_samples, tol, seed + 2);
    let weight = measure_weight(&te_form, te_index, n_samples, seed + 3);
    out.push(te_report.with_note(format!(
        "measured index {te_index:.9} (expected 1), measured weight {weight:.9} (expected -2)"
    )));

    out
}

/// Runs every check and returns the reports sorted by name.
pub fn run_all(config: &SuiteConfig) -> Vec<VerificationReport> {
    let tol = &config.tolerances;
    let mut reports = Vec::new();
    reports.push(check_hi_identity(config.q_order, config.v_order));
    reports.push(check_beta_recursion(config.q_order, config.v_order / 2));
    reports.push(check_special_function_identities(config.q_order.max(12)));
    reports.push(check_weierstrass_representations(
        config.n_samples,
        24,
        tol,
        config.seed,
    ));
    reports.push(check_p_difference(config.n_samples, 28, tol, config.seed));
    reports.extend(check_modular_laws(
        config.r,
        config.n_samples,
        24,
        tol,
        config.seed,
    ));
    reports.push(check_b2g_ellipticity(
        config.r,
        3,
        config.n_samples,
        24,
        tol,
        config.seed,
    ));
    reports.push(check_pole_structure(
        config.r,
        1,
        4e-3,
        24,
        tol,
        config.seed,
    ));
    reports.push(check_circle_consistency(
        config.r,
        config.n_samples,
        config.q_order.max(16),
        tol,
        config.seed,
    ));
    reports.push(check_alpha0_prefactor(config.r, config.q_order));
    reports.push(check_k3_proportionality(config.r, config.q_order.min(10)));
    reports.extend(check_jacobi_indices(config.r, config.n_samples, tol, config.seed));
    reports.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    reports
}
