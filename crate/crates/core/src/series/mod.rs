//! Exact and numeric truncated series arithmetic: the algebraic substrate
//! for everything else in the crate.
//!
//! The coefficient tower, bottom to top:
//!
//! * [`Rational`]: exact scalars;
//! * [`LaurentPoly`]: sparse Laurent polynomials in one fugacity
//!   (half-unit exponent grid where half powers occur);
//! * [`RationalFunction`]: reduced quotients of Laurent polynomials;
//! * [`QSeries`]: truncated q-series over any of the above, on a global
//!   1/24 exponent grid;
//! * [`FormalLaurentSeries`]: truncated Laurent series in v̂ = 2πi·t with
//!   q-series coefficients.
//!
//! All values are immutable after construction; operations are pure.

pub mod error;
pub mod laurent;
pub mod qseries;
pub mod ratfunc;
pub mod rational;
pub mod vlaurent;

pub use error::SeriesError;
pub use laurent::LaurentPoly;
pub use qseries::{trunc_for_q_order, QSeries, Q_GRID, TRUNC_EXACT};
pub use ratfunc::RationalFunction;
pub use rational::{rat, rat_int, rational_string, CoefficientRing, Rational};
pub use vlaurent::FormalLaurentSeries;

/// Laurent polynomials in the elliptic fugacity y = e^{2πiz}, half-unit
/// exponent grid (y^{k/2} under key k).
pub type YLaurent = LaurentPoly<Rational>;

/// Laurent polynomials in y (outer, half-units) and the circle fugacity
/// power u = σ^r = e^{2πirt} (inner, half-units).
pub type YULaurent = LaurentPoly<LaurentPoly<Rational>>;

/// Laurent polynomials in y whose coefficients are rational functions of u.
pub type YOverURational = LaurentPoly<RationalFunction>;

#[cfg(test)]
mod sharing {
    use super::*;

    fn require_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable_across_threads() {
        require_send_sync::<QSeries<Rational>>();
        require_send_sync::<QSeries<YLaurent>>();
        require_send_sync::<QSeries<YOverURational>>();
        require_send_sync::<FormalLaurentSeries<YLaurent>>();
        require_send_sync::<crate::special::EisensteinCache>();
    }
}
