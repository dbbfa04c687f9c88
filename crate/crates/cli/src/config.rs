//! Configuration resolution: command-line flags override environment
//! variables (prefix `ALE_GENUS_`), which override the config file, which
//! overrides built-in defaults.

use std::path::PathBuf;

use num_complex::Complex64;

use ale_genus::verify::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Numeric,
}

#[derive(Clone, Debug)]
pub struct UsageError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "field '{}': {}", self.field, self.message)
    }
}

fn usage(field: &str, message: impl Into<String>) -> UsageError {
    UsageError {
        field: field.to_string(),
        message: message.into(),
    }
}

/// Raw optional settings from one source (file, env, or flags).
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub r: Option<usize>,
    pub q_order: Option<i64>,
    pub v_order: Option<i64>,
    pub backend: Option<String>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub tau: Option<String>,
    pub z: Option<String>,
    pub t1: Option<String>,
    pub t2: Option<String>,
    pub epsilon: Option<f64>,
    pub lattice_range: Option<i64>,
    pub tol_theta_identity: Option<f64>,
    pub tol_expansion_coeff: Option<f64>,
    pub tol_residue_cancel: Option<f64>,
    pub tol_residue_genuine: Option<f64>,
    pub out: Option<PathBuf>,
    pub timestamp: Option<String>,
}

impl Settings {
    /// Later sources win; `self` is the weaker source.
    pub fn overridden_by(self, stronger: Settings) -> Settings {
        Settings {
            r: stronger.r.or(self.r),
            q_order: stronger.q_order.or(self.q_order),
            v_order: stronger.v_order.or(self.v_order),
            backend: stronger.backend.or(self.backend),
            seed: stronger.seed.or(self.seed),
            samples: stronger.samples.or(self.samples),
            tau: stronger.tau.or(self.tau),
            z: stronger.z.or(self.z),
            t1: stronger.t1.or(self.t1),
            t2: stronger.t2.or(self.t2),
            epsilon: stronger.epsilon.or(self.epsilon),
            lattice_range: stronger.lattice_range.or(self.lattice_range),
            tol_theta_identity: stronger.tol_theta_identity.or(self.tol_theta_identity),
            tol_expansion_coeff: stronger.tol_expansion_coeff.or(self.tol_expansion_coeff),
            tol_residue_cancel: stronger.tol_residue_cancel.or(self.tol_residue_cancel),
            tol_residue_genuine: stronger.tol_residue_genuine.or(self.tol_residue_genuine),
            out: stronger.out.or(self.out),
            timestamp: stronger.timestamp.or(self.timestamp),
        }
    }

    pub fn from_file(path: &PathBuf) -> Result<Settings, UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage("config", format!("cannot read {}: {e}", path.display())))?;
        let table: toml::Table = text
            .parse()
            .map_err(|e| usage("config", format!("parse error in {}: {e}", path.display())))?;
        let mut s = Settings::default();
        for (key, value) in table {
            match key.as_str() {
                "r" => s.r = Some(int_value(&key, &value)? as usize),
                "q_order" => s.q_order = Some(int_value(&key, &value)?),
                "v_order" => s.v_order = Some(int_value(&key, &value)?),
                "backend" => s.backend = Some(str_value(&key, &value)?),
                "seed" => s.seed = Some(int_value(&key, &value)? as u64),
                "samples" => s.samples = Some(int_value(&key, &value)? as usize),
                "tau" => s.tau = Some(str_value(&key, &value)?),
                "z" => s.z = Some(str_value(&key, &value)?),
                "t1" => s.t1 = Some(str_value(&key, &value)?),
                "t2" => s.t2 = Some(str_value(&key, &value)?),
                "epsilon" => s.epsilon = Some(float_value(&key, &value)?),
                "lattice_range" => s.lattice_range = Some(int_value(&key, &value)?),
                "tol_theta_identity" => s.tol_theta_identity = Some(float_value(&key, &value)?),
                "tol_expansion_coeff" => s.tol_expansion_coeff = Some(float_value(&key, &value)?),
                "tol_residue_cancel" => s.tol_residue_cancel = Some(float_value(&key, &value)?),
                "tol_residue_genuine" => s.tol_residue_genuine = Some(float_value(&key, &value)?),
                "out" => s.out = Some(PathBuf::from(str_value(&key, &value)?)),
                "timestamp" => s.timestamp = Some(str_value(&key, &value)?),
                other => return Err(usage(other, "unknown config key")),
            }
        }
        Ok(s)
    }

    pub fn from_env() -> Result<Settings, UsageError> {
        let mut s = Settings::default();
        let get = |name: &str| std::env::var(format!("ALE_GENUS_{name}")).ok();
        if let Some(v) = get("R") {
            s.r = Some(parse_num(&v, "ALE_GENUS_R")?);
        }
        if let Some(v) = get("Q_ORDER") {
            s.q_order = Some(parse_num(&v, "ALE_GENUS_Q_ORDER")?);
        }
        if let Some(v) = get("V_ORDER") {
            s.v_order = Some(parse_num(&v, "ALE_GENUS_V_ORDER")?);
        }
        if let Some(v) = get("BACKEND") {
            s.backend = Some(v);
        }
        if let Some(v) = get("SEED") {
            s.seed = Some(parse_num(&v, "ALE_GENUS_SEED")?);
        }
        if let Some(v) = get("SAMPLES") {
            s.samples = Some(parse_num(&v, "ALE_GENUS_SAMPLES")?);
        }
        if let Some(v) = get("TIMESTAMP") {
            s.timestamp = Some(v);
        }
        if let Some(v) = get("OUT") {
            s.out = Some(PathBuf::from(v));
        }
        Ok(s)
    }
}

fn parse_num<T: std::str::FromStr>(v: &str, field: &str) -> Result<T, UsageError> {
    v.parse()
        .map_err(|_| usage(field, format!("cannot parse '{v}'")))
}

fn int_value(key: &str, value: &toml::Value) -> Result<i64, UsageError> {
    value
        .as_integer()
        .ok_or_else(|| usage(key, "expected an integer"))
}

fn float_value(key: &str, value: &toml::Value) -> Result<f64, UsageError> {
    value
        .as_float()
        .or_else(|| value.as_integer().map(|x| x as f64))
        .ok_or_else(|| usage(key, "expected a number"))
}

fn str_value(key: &str, value: &toml::Value) -> Result<String, UsageError> {
    value
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| usage(key, "expected a string"))
}

/// Parses "re,im" into a complex number.
pub fn parse_complex(text: &str, field: &str) -> Result<Complex64, UsageError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(usage(field, format!("expected 're,im', got '{text}'")));
    }
    let re = parts[0]
        .trim()
        .parse()
        .map_err(|_| usage(field, format!("bad real part '{}'", parts[0])))?;
    let im = parts[1]
        .trim()
        .parse()
        .map_err(|_| usage(field, format!("bad imaginary part '{}'", parts[1])))?;
    Ok(Complex64::new(re, im))
}

/// Fully resolved run configuration. `backend` stays optional: each
/// command has exactly one valid backend when the flag is omitted.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub r: usize,
    pub q_order: i64,
    pub v_order: i64,
    pub backend: Option<Backend>,
    pub seed: u64,
    pub samples: usize,
    pub tau: Complex64,
    pub z: Complex64,
    pub t1: Complex64,
    pub t2: Complex64,
    pub epsilon: f64,
    pub lattice_range: i64,
    pub tolerances: Tolerances,
    pub out: Option<PathBuf>,
    pub timestamp: Option<String>,
}

pub fn resolve(merged: Settings) -> Result<Resolved, UsageError> {
    let defaults = Tolerances::default();
    let backend = match merged.backend.as_deref() {
        None => None,
        Some("exact") => Some(Backend::Exact),
        Some("numeric") => Some(Backend::Numeric),
        Some(other) => {
            return Err(usage(
                "backend",
                format!("expected 'exact' or 'numeric', got '{other}'"),
            ))
        }
    };
    let resolved = Resolved {
        r: merged.r.unwrap_or(2),
        q_order: merged.q_order.unwrap_or(12),
        v_order: merged.v_order.unwrap_or(12),
        backend,
        seed: merged.seed.unwrap_or(1),
        samples: merged.samples.unwrap_or(20),
        tau: parse_complex(merged.tau.as_deref().unwrap_or("0.1,1.1"), "tau")?,
        z: parse_complex(merged.z.as_deref().unwrap_or("0.13,0.17"), "z")?,
        t1: parse_complex(merged.t1.as_deref().unwrap_or("0.11,0.05"), "t1")?,
        t2: parse_complex(merged.t2.as_deref().unwrap_or("-0.07,0.09"), "t2")?,
        epsilon: merged.epsilon.unwrap_or(4e-3),
        lattice_range: merged.lattice_range.unwrap_or(1),
        tolerances: Tolerances {
            theta_identity: merged.tol_theta_identity.unwrap_or(defaults.theta_identity),
            expansion_coeff: merged
                .tol_expansion_coeff
                .unwrap_or(defaults.expansion_coeff),
            residue_cancel: merged.tol_residue_cancel.unwrap_or(defaults.residue_cancel),
            residue_genuine: merged
                .tol_residue_genuine
                .unwrap_or(defaults.residue_genuine),
        },
        out: merged.out,
        timestamp: merged.timestamp,
    };
    if resolved.r == 0 {
        return Err(usage("r", "must be at least 1"));
    }
    if resolved.q_order < 1 {
        return Err(usage("q_order", "must be at least 1"));
    }
    if resolved.v_order < 2 || resolved.v_order % 2 != 0 {
        return Err(usage("v_order", "must be even and at least 2"));
    }
    if resolved.tau.im <= 0.0 {
        return Err(usage("tau", "must lie in the upper half-plane"));
    }
    Ok(resolved)
}

/// Marks each command as exact-only, numeric-only, or mixed; an explicit
/// backend must agree. Returns the backend the command actually runs with.
pub fn effective_backend(command: &str, backend: Option<Backend>) -> Result<Backend, UsageError> {
    let numeric_only = ["genus", "scan-poles", "modular-check"];
    let exact_only = ["expand", "regularized", "k3-compare"];
    if numeric_only.contains(&command) {
        if backend == Some(Backend::Exact) {
            return Err(usage(
                "backend",
                format!("command '{command}' is numeric-only; pass --backend numeric or omit it"),
            ));
        }
        return Ok(Backend::Numeric);
    }
    if exact_only.contains(&command) {
        if backend == Some(Backend::Numeric) {
            return Err(usage(
                "backend",
                format!("command '{command}' is exact-only; pass --backend exact or omit it"),
            ));
        }
        return Ok(Backend::Exact);
    }
    // Verification suites mix exact and numeric checks.
    Ok(backend.unwrap_or(Backend::Numeric))
}
