//! Command implementations: each builds a report document and says whether
//! any hard failure occurred.

use num_complex::Complex64;
use serde_json::{json, Value};

use ale_genus::genus::{
    equivariant_genus_numeric, fixed_point_data, k3_elliptic_genus, regularized_genus, v_expand,
};
use ale_genus::series::rat;
use ale_genus::verify::{
    self, CheckStatus, SuiteConfig, VerificationReport,
};

use crate::config::Resolved;
use crate::report::{complex_value, y_series_table, DocumentBuilder};

pub struct Outcome {
    pub document: Value,
    pub any_failure: bool,
}

fn track(builder: &mut DocumentBuilder, failed: &mut bool, report: &VerificationReport) {
    if report.status == CheckStatus::Fail {
        *failed = true;
    }
    builder.push_check(report);
}

pub fn genus(config: &Resolved) -> Outcome {
    let mut builder = DocumentBuilder::new("genus", config, "numeric");
    builder.echo_complex("tau", config.tau);
    builder.echo_complex("z", config.z);
    builder.echo_complex("t1", config.t1);
    builder.echo_complex("t2", config.t2);
    let fp = fixed_point_data(config.r).expect("validated r");
    let mut failed = false;
    match equivariant_genus_numeric(&fp, config.tau, config.z, config.t1, config.t2, config.q_order)
    {
        Ok(value) => {
            let near_poles: Vec<Value> = value
                .near_poles
                .iter()
                .map(|p| {
                    json!({
                        "fixed_point": p.fixed_point,
                        "weight": p.weight,
                        "distance": p.distance,
                    })
                })
                .collect();
            builder.push_result(json!({
                "kind": "complex_value",
                "name": "equivariant_genus",
                "value": complex_value(value.value),
                "near_poles": near_poles,
            }));
        }
        Err(e) => {
            failed = true;
            builder.push_result(json!({
                "kind": "error",
                "name": "equivariant_genus",
                "message": e.to_string(),
            }));
        }
    }
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}

pub fn expand(config: &Resolved) -> Outcome {
    let mut builder = DocumentBuilder::new("expand", config, "exact");
    let mut failed = false;
    match v_expand(config.r, config.q_order, config.v_order) {
        Ok(expansion) => {
            for g in 0..=(config.v_order as usize + 2) / 2 {
                let alpha = match expansion.alpha_hat(g) {
                    Ok(a) => a,
                    Err(_) => break,
                };
                let mut table = y_series_table(&format!("alpha_hat_{}", 2 * g), &alpha);
                // Hatted coefficients are exact rationals; the conversion to
                // the transcendental normalization multiplies by
                // (2πi)^{2g−2}, rendered only here.
                let power = 2 * g as i32 - 2;
                let factor = Complex64::new(0.0, ale_genus::special::numeric::TWO_PI).powi(power);
                table.as_object_mut().unwrap().insert(
                    "unhatted_transcendental_rendering".into(),
                    json!({
                        "factor": format!("(2*pi*i)^{power}"),
                        "factor_value": complex_value(factor),
                        "applies_to": "multiply every table entry by factor_value",
                    }),
                );
                builder.push_result(table);
            }
        }
        Err(e) => {
            failed = true;
            builder.push_result(json!({
                "kind": "error",
                "name": "expand",
                "message": e.to_string(),
            }));
        }
    }
    track(
        &mut builder,
        &mut failed,
        &verify::suite::check_alpha0_prefactor(config.r, config.q_order),
    );
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}

pub fn regularized(config: &Resolved, k3_compare: bool) -> Outcome {
    let mut builder = DocumentBuilder::new("regularized", config, "exact");
    let mut failed = false;
    match regularized_genus(config.r, config.q_order) {
        Ok(series) => {
            builder.push_result(y_series_table("regularized_genus", &series));
            let at_one = series.coeff_q(0).eval_at_one();
            builder.push_result(json!({
                "kind": "rational_value",
                "name": "value_at_y_equals_1",
                "value": ale_genus::series::rational_string(&at_one),
            }));
        }
        Err(e) => {
            failed = true;
            builder.push_result(json!({
                "kind": "error",
                "name": "regularized_genus",
                "message": e.to_string(),
            }));
        }
    }
    if k3_compare {
        builder.push_result(json!({
            "kind": "rational_value",
            "name": "k3_proportionality_constant",
            "value": format!("{}/24", config.r),
        }));
        track(
            &mut builder,
            &mut failed,
            &verify::suite::check_k3_proportionality(config.r, config.q_order),
        );
    }
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}

pub fn k3_compare(config: &Resolved) -> Outcome {
    let mut builder = DocumentBuilder::new("k3-compare", config, "exact");
    let mut failed = false;
    let k3 = k3_elliptic_genus(config.q_order);
    builder.push_result(y_series_table("k3_elliptic_genus", &k3));
    builder.push_result(json!({
        "kind": "rational_value",
        "name": "k3_value_at_y_equals_1",
        "value": ale_genus::series::rational_string(&k3.coeff_q(0).eval_at_one()),
    }));
    if let Ok(zreg) = regularized_genus(config.r, config.q_order) {
        builder.push_result(y_series_table("regularized_genus", &zreg));
        builder.push_result(y_series_table(
            "regularized_genus_times_24_over_r",
            &zreg.scale(&rat(24, config.r as i64)),
        ));
    }
    track(
        &mut builder,
        &mut failed,
        &verify::suite::check_k3_proportionality(config.r, config.q_order),
    );
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}

fn suite_config(config: &Resolved) -> SuiteConfig {
    SuiteConfig {
        r: config.r,
        q_order: config.q_order,
        v_order: config.v_order,
        n_samples: config.samples,
        seed: config.seed,
        tolerances: config.tolerances,
    }
}

pub fn verify_all(config: &Resolved) -> Outcome {
    let mut builder = DocumentBuilder::new("verify-all", config, "mixed");
    let mut failed = false;
    for report in verify::run_all(&suite_config(config)) {
        track(&mut builder, &mut failed, &report);
    }
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}

pub fn verify_named(config: &Resolved, name: &str) -> Result<Outcome, String> {
    let sc = suite_config(config);
    let tol = &sc.tolerances;
    let reports: Vec<VerificationReport> = match name {
        "hi-identity" => vec![verify::check_hi_identity(sc.q_order, sc.v_order)],
        "beta-recursion" => vec![verify::check_beta_recursion(sc.q_order, sc.v_order / 2)],
        "special-function-identities" => {
            vec![verify::suite::check_special_function_identities(sc.q_order.max(12))]
        }
        "weierstrass-representations" => vec![verify::suite::check_weierstrass_representations(
            sc.n_samples,
            24,
            tol,
            sc.seed,
        )],
        "weierstrass-difference" => {
            vec![verify::check_p_difference(sc.n_samples, 28, tol, sc.seed)]
        }
        "modular-laws" => verify::check_modular_laws(sc.r, sc.n_samples, 24, tol, sc.seed),
        "b2g-ellipticity" => vec![verify::check_b2g_ellipticity(
            sc.r,
            3,
            sc.n_samples,
            24,
            tol,
            sc.seed,
        )],
        "pole-structure" => vec![verify::suite::check_pole_structure(
            sc.r,
            config.lattice_range,
            config.epsilon,
            24,
            tol,
            sc.seed,
        )],
        "circle-restriction-consistency" => vec![verify::suite::check_circle_consistency(
            sc.r,
            sc.n_samples,
            sc.q_order.max(16),
            tol,
            sc.seed,
        )],
        "alpha0-prefactor" => vec![verify::suite::check_alpha0_prefactor(sc.r, sc.q_order)],
        "regularized-k3-proportionality" => {
            vec![verify::suite::check_k3_proportionality(sc.r, sc.q_order.min(10))]
        }
        "jacobi-indices" => verify::suite::check_jacobi_indices(sc.r, sc.n_samples, tol, sc.seed),
        other => {
            return Err(format!(
                "unknown check '{other}'; known checks: hi-identity, beta-recursion, \
                 special-function-identities, weierstrass-representations, weierstrass-difference, \
                 modular-laws, b2g-ellipticity, pole-structure, circle-restriction-consistency, \
                 alpha0-prefactor, regularized-k3-proportionality, jacobi-indices"
            ))
        }
    };
    let mut builder = DocumentBuilder::new("verify", config, "mixed");
    let mut failed = false;
    for report in &reports {
        track(&mut builder, &mut failed, report);
    }
    Ok(Outcome {
        document: builder.finish(),
        any_failure: failed,
    })
}

pub fn scan_poles(config: &Resolved) -> Outcome {
    let mut builder = DocumentBuilder::new("scan-poles", config, "numeric");
    builder.echo_complex("tau", config.tau);
    builder.echo_complex("z", config.z);
    builder.echo_complex("t2", config.t2);
    let scans = verify::scan_poles_stable(
        config.r,
        config.tau,
        config.z,
        config.t2,
        config.lattice_range,
        config.epsilon,
        24,
        &config.tolerances,
    );
    let mut failed = false;
    for scan in &scans {
        let verdict = match scan.verdict {
            verify::PoleVerdict::Cancels => "cancels",
            verify::PoleVerdict::GenuinePole => "genuine pole",
            verify::PoleVerdict::Inconclusive => "inconclusive",
            verify::PoleVerdict::Skipped => "skipped",
        };
        let expected_genuine = scan.candidate.j == config.r;
        match scan.verdict {
            verify::PoleVerdict::Cancels if expected_genuine => failed = true,
            verify::PoleVerdict::GenuinePole if !expected_genuine => failed = true,
            _ => {}
        }
        builder.push_result(json!({
            "kind": "pole_candidate",
            "j": scan.candidate.j,
            "m": scan.candidate.m,
            "n": scan.candidate.n,
            "location": complex_value(scan.candidate.location),
            "residue": scan.residue.map(complex_value),
            "verdict": verdict,
            "note": scan.note,
        }));
    }
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}

pub fn modular_check(config: &Resolved) -> Outcome {
    let mut builder = DocumentBuilder::new("modular-check", config, "numeric");
    let mut failed = false;
    for report in verify::check_modular_laws(
        config.r,
        config.samples,
        24,
        &config.tolerances,
        config.seed,
    ) {
        track(&mut builder, &mut failed, &report);
    }
    Outcome {
        document: builder.finish(),
        any_failure: failed,
    }
}
