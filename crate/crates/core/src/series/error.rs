//! Error type shared by the series layer.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeriesError {
    /// Inversion pivot is not a unit of the coefficient ring.
    #[error("leading coefficient is not invertible: {coeff}")]
    NonInvertibleLeading { coeff: String },

    /// Inverse/exp/log of a series without a finite truncation would have
    /// infinite support.
    #[error("operation on an untruncated series would not terminate")]
    UnboundedInverse,

    /// exp requires strictly positive valuation (zero constant term).
    #[error("exp requires zero constant term and no negative exponents (base {base})")]
    ExpNeedsPositiveValuation { base: i64 },

    /// log requires leading coefficient exactly 1 at exponent 0.
    #[error("log requires leading coefficient 1 at exponent 0")]
    LogNeedsUnitLeadingOne,

    /// Laurent coefficient extraction outside the represented window.
    #[error("order {order} outside the represented window [{lowest}, {trunc})")]
    ExtractOutOfRange { order: i64, lowest: i64, trunc: i64 },

    /// A theta argument asked for a fugacity monomial the chosen ring
    /// cannot carry.
    #[error("fugacity monomial y^{y_half}/2 u^{u_half}/2 not representable in this ring")]
    UnrepresentableMonomial { y_half: i64, u_half: i64 },

    /// A quotient that must cancel a pole exactly failed to do so; this
    /// signals an implementation bug, not bad input.
    #[error("pole cancellation failed: residual denominator {denominator}")]
    CancellationFailure { denominator: String },
}
