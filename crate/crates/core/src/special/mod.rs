//! q-expansions and numeric evaluations of the special functions the genus
//! is built from: θ₁, η, Eisenstein series, the normalized Weierstrass
//! function, Bernoulli/Eulerian numbers and divisor sums.

pub mod arith;
pub mod eisenstein;
pub mod logexp;
pub mod numeric;
pub mod theta;
pub mod weierstrass;

pub use arith::{bernoulli, binomial, divisor_sigma, divisors, eulerian, factorial};
pub use eisenstein::{eisenstein, eisenstein_lambert, g_hat, EisensteinCache};
pub use logexp::{log_one_minus_exp, LogSeriesParts};
pub use numeric::{
    cis, eisenstein_numeric, eta_numeric, lattice_distance, p_hat_numeric, theta1_numeric,
    weierstrass_p_numeric, NumericError, NumericValue,
};
pub use theta::{
    dedekind_eta_qexp, theta1_qexp, FugacityRing, FugacityShift, ThetaArgument, ThetaSeries,
};
pub use weierstrass::{p_hat_wseries, p_hat_yform, WExpansion, WLaurent};
