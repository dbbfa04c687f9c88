//! Structured results of identity, modularity and singularity checks.

use std::collections::BTreeMap;

/// Outcome of one check.
///
/// `Flagged` is reserved for checks where a literal printed formula fails
/// but the derived corrected form passes; the note must state the corrected
/// form. Flagged checks are not failures of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Flagged,
    Fail,
}

/// Measured deviation: a maximum over samples for numeric checks, the list
/// of mismatching coefficients for exact checks.
#[derive(Clone, Debug)]
pub enum Deviation {
    Numeric(f64),
    ExactMismatches(Vec<String>),
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub deviation: Deviation,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn numeric(
        name: impl Into<String>,
        max_deviation: f64,
        tolerance: f64,
    ) -> VerificationReport {
        let mut report = VerificationReport {
            check_name: name.into(),
            parameters: BTreeMap::new(),
            status: if max_deviation <= tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            deviation: Deviation::Numeric(max_deviation),
            notes: Vec::new(),
        };
        report.insert_param("tolerance", format!("{tolerance:e}"));
        report
    }

    pub fn exact(name: impl Into<String>, mismatches: Vec<String>) -> VerificationReport {
        VerificationReport {
            check_name: name.into(),
            parameters: BTreeMap::new(),
            status: if mismatches.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            deviation: Deviation::ExactMismatches(mismatches),
            notes: Vec::new(),
        }
    }

    pub fn insert_param(&mut self, key: &str, value: impl Into<String>) {
        self.parameters.insert(key.to_string(), value.into());
    }

    pub fn with_param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.insert_param(key, value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Downgrades a passing check to `Flagged` (a variant form failed while
    /// this, the derived form, holds). No-op on failures.
    pub fn flag(mut self, note: impl Into<String>) -> Self {
        if self.status == CheckStatus::Pass {
            self.status = CheckStatus::Flagged;
        }
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Pass | CheckStatus::Flagged)
    }
}

/// Default numeric tolerances; each is overridable from the CLI.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Theta-level identities evaluated pointwise.
    pub theta_identity: f64,
    /// Expansion-coefficient identities (one extra roundoff layer).
    pub expansion_coeff: f64,
    /// Residues below this magnitude cancelled.
    pub residue_cancel: f64,
    /// Residues above this magnitude are genuine poles.
    pub residue_genuine: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            theta_identity: 1e-9,
            expansion_coeff: 1e-8,
            residue_cancel: 1e-6,
            residue_genuine: 1e-3,
        }
    }
}
