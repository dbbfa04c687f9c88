//! Canonical JSON report assembly.
//!
//! Documents are emitted with sorted keys, exact rationals as decimal-free
//! `p/q` strings, complex values as `[re, im]` pairs, and a trailing
//! newline, so identical configurations produce byte-identical reports.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use ale_genus::series::{rational_string, LaurentPoly, QSeries, Rational, YLaurent, Q_GRID};
use ale_genus::verify::{CheckStatus, Deviation, VerificationReport};

pub fn complex_value(c: Complex64) -> Value {
    json!([c.re, c.im])
}

/// Exponent label for a grid exponent e (units of 1/24): `q^n` on the
/// integer grid, reduced `q^p/q` otherwise.
pub fn q_label(e: i64) -> String {
    if e % Q_GRID == 0 {
        format!("q^{}", e / Q_GRID)
    } else {
        let g = gcd(e.unsigned_abs(), Q_GRID as u64) as i64;
        format!("q^{}/{}", e / g, Q_GRID / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn y_label(half: i64) -> String {
    if half % 2 == 0 {
        format!("y^{}", half / 2)
    } else {
        format!("y^{half}/2")
    }
}

pub fn y_polynomial(poly: &LaurentPoly<Rational>) -> Value {
    let mut map = Map::new();
    for (e, c) in poly.terms() {
        map.insert(y_label(e), Value::String(rational_string(c)));
    }
    Value::Object(map)
}

/// Coefficient table of a q-series with y-Laurent coefficients.
pub fn y_series_table(name: &str, series: &QSeries<YLaurent>) -> Value {
    let mut coeffs = Map::new();
    for (e, poly) in series.iter_terms() {
        if poly.num_terms() == 0 {
            continue;
        }
        coeffs.insert(q_label(e), y_polynomial(poly));
    }
    json!({
        "kind": "coefficient_table",
        "name": name,
        "coefficients": Value::Object(coeffs),
        "truncation_q_order": series.truncation() / Q_GRID - 1,
    })
}

pub fn check_value(report: &VerificationReport) -> Value {
    let status = match report.status {
        CheckStatus::Pass => "pass",
        CheckStatus::Flagged => "flagged",
        CheckStatus::Fail => "fail",
    };
    let deviation = match &report.deviation {
        Deviation::Numeric(x) => json!({ "max_deviation": x }),
        Deviation::ExactMismatches(list) => json!({ "mismatches": list }),
    };
    json!({
        "check_name": report.check_name,
        "parameters": report.parameters,
        "status": status,
        "deviation": deviation,
        "notes": report.notes,
    })
}

pub struct DocumentBuilder {
    config_echo: Map<String, Value>,
    results: Vec<Value>,
    checks: Vec<Value>,
    flags: Vec<String>,
    timestamp: String,
}

impl DocumentBuilder {
    pub fn new(command: &str, config: &crate::config::Resolved, backend: &str) -> Self {
        let mut config_echo = Map::new();
        config_echo.insert("command".into(), json!(command));
        config_echo.insert("backend".into(), json!(backend));
        config_echo.insert("r".into(), json!(config.r));
        config_echo.insert("q_order".into(), json!(config.q_order));
        config_echo.insert("v_order".into(), json!(config.v_order));
        config_echo.insert("seed".into(), json!(config.seed));
        config_echo.insert("samples".into(), json!(config.samples));
        config_echo.insert(
            "tolerances".into(),
            json!({
                "theta_identity": config.tolerances.theta_identity,
                "expansion_coeff": config.tolerances.expansion_coeff,
                "residue_cancel": config.tolerances.residue_cancel,
                "residue_genuine": config.tolerances.residue_genuine,
            }),
        );
        let timestamp = config
            .timestamp
            .clone()
            .unwrap_or_else(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
        DocumentBuilder {
            config_echo,
            results: Vec::new(),
            checks: Vec::new(),
            flags: Vec::new(),
            timestamp,
        }
    }

    pub fn echo_complex(&mut self, key: &str, value: Complex64) {
        self.config_echo.insert(key.to_string(), complex_value(value));
    }

    pub fn push_result(&mut self, value: Value) {
        self.results.push(value);
    }

    pub fn push_check(&mut self, report: &VerificationReport) {
        if report.status == CheckStatus::Flagged {
            for note in &report.notes {
                self.flags.push(format!("{}: {note}", report.check_name));
            }
        }
        self.checks.push(check_value(report));
    }

    pub fn finish(self) -> Value {
        json!({
            "tool": { "name": "ale-genus", "version": env!("CARGO_PKG_VERSION") },
            "timestamp": self.timestamp,
            "config": Value::Object(self.config_echo),
            "results": self.results,
            "checks": self.checks,
            "flags": self.flags,
        })
    }
}

/// Canonical rendering: pretty JSON (sorted keys from the BTreeMap-backed
/// map) plus a trailing newline.
pub fn render(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}
