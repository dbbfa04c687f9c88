//! The equivariant elliptic genus of X_r: numeric two-parameter evaluation,
//! exact circle restriction, Laurent expansion in v̂, regularization and the
//! K3 comparison.

pub mod circle;
pub mod expansion;
pub mod fixed_points;
pub mod k3;
pub mod numeric;
pub mod regularized;

use thiserror::Error;

pub use circle::{circle_factors, genus_circle_exact, CircleFactors, CircleGenus};
pub use expansion::{theta_over_eta3_squared, v_expand, GenusExpansion};
pub use fixed_points::{fixed_point_data, FixedPointData};
pub use k3::k3_elliptic_genus;
pub use numeric::{equivariant_genus_numeric, GenusValue, NearPole, NEAR_POLE_DISTANCE};
pub use regularized::{regularized_genus, regularized_genus_closed_form};

#[derive(Debug, Error)]
pub enum GenusError {
    #[error("the rank r must be at least 1")]
    ZeroRank,

    #[error("v_order {v_order} must be even and at least 2")]
    BadVOrder { v_order: i64 },

    #[error("coefficient of order {requested_order} needs v_order > {v_order}")]
    InsufficientVOrder { requested_order: i64, v_order: i64 },

    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),

    #[error(transparent)]
    Numeric(#[from] crate::special::NumericError),

    /// Two supposedly identical computation routes disagreed: an engine bug.
    #[error("{what}: routes disagree at exponent {exponent}/24: {lhs} vs {rhs}")]
    RouteMismatch {
        what: &'static str,
        exponent: i64,
        lhs: String,
        rhs: String,
    },
}
