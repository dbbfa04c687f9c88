//! Structured expansion of log(1 − e^v).
//!
//! log(1 − e^v) = log v + πi + v/2 + Σ_{k≥1} B_{2k}/((2k)!·2k)·v^{2k}.
//!
//! The log v and πi parts are symbolic flags: the engine never assigns the
//! branch constant a value, it only verifies combinations in which the πi
//! multiplicity is even, where the constant is invisible once exponentiated.
//! The power
//! series part is exact.

use num_bigint::BigInt;

use super::arith::{bernoulli, factorial};
use crate::series::Rational;

/// log(1 − e^{±v}) and sums thereof, as (log v)·multiplicity + (πi)·
/// multiplicity + exact power series in v.
#[derive(Clone, Debug, PartialEq)]
pub struct LogSeriesParts {
    pub log_v_mult: i64,
    pub pi_i_mult: i64,
    /// coeffs[k] is the coefficient of v^{k+1}.
    pub series: Vec<Rational>,
}

impl LogSeriesParts {
    /// Coefficient of v^k, k ≥ 1.
    pub fn coeff(&self, k: usize) -> Rational {
        assert!(k >= 1 && k <= self.series.len());
        self.series[k - 1].clone()
    }

    pub fn v_order(&self) -> usize {
        self.series.len()
    }

    /// Formal substitution v ↦ −v: odd coefficients flip; the symbolic
    /// log v and πi flags are untouched (log(−v) is re-expressed as
    /// log v + πi only modulo the branch the flags already absorb).
    pub fn substitute_neg_v(&self) -> Self {
        let series = self
            .series
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
            .collect();
        LogSeriesParts {
            log_v_mult: self.log_v_mult,
            pi_i_mult: self.pi_i_mult,
            series,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.series.len().min(rhs.series.len());
        let series = (0..n).map(|i| &self.series[i] + &rhs.series[i]).collect();
        LogSeriesParts {
            log_v_mult: self.log_v_mult + rhs.log_v_mult,
            pi_i_mult: self.pi_i_mult + rhs.pi_i_mult,
            series,
        }
    }

    /// The branch constant cancels once exponentiated iff its multiplicity
    /// is even.
    pub fn pi_i_cancels(&self) -> bool {
        self.pi_i_mult % 2 == 0
    }
}

/// The expansion of log(1 − e^v) through v^{v_order}.
pub fn log_one_minus_exp(v_order: usize) -> LogSeriesParts {
    let mut series = vec![Rational::from_integer(BigInt::from(0)); v_order];
    if v_order >= 1 {
        series[0] = crate::series::rat(1, 2);
    }
    let mut k = 1u32;
    while (2 * k as usize) <= v_order {
        let denom = Rational::from_integer(factorial(2 * k) * BigInt::from(2 * k));
        series[2 * k as usize - 1] = bernoulli(2 * k) / denom;
        k += 1;
    }
    LogSeriesParts {
        log_v_mult: 1,
        pi_i_mult: 1,
        series,
    }
}
