//! Machine verification: identity checkers, transformation-law checks,
//! residue scans and index measurements, each producing a
//! [`VerificationReport`].

pub mod exact;
pub mod laws;
pub mod poles;
pub mod report;
pub mod samples;
pub mod suite;

pub use exact::{check_beta_recursion, check_hi_identity};
pub use laws::{
    check_b2g_ellipticity, check_modular_laws, check_p_difference, eval_y_series,
    measure_jacobi_index, measure_weight,
};
pub use poles::{scan_poles, scan_poles_stable, PoleCandidate, PoleScan, PoleVerdict};
pub use report::{CheckStatus, Deviation, Tolerances, VerificationReport};
pub use samples::SampleGenerator;
pub use suite::{run_all, SuiteConfig};
