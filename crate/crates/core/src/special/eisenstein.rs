//! Normalized Eisenstein series E_{2k} and the rational-normalized
//! Ĝ_{2k} = −B_{2k}/(2k)!·E_{2k}.
//!
//! All transcendental prefactors (2πi)^{2k} are scaled out: the engine works
//! with Ĝ so every coefficient stays in ℚ. Conversion back to the classical
//! weight-2k G_{2k} = (2πi)^{2k}·Ĝ_{2k} happens only in numeric checks and
//! report rendering.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;

use super::arith::{bernoulli, divisor_sigma, factorial};
use crate::series::{trunc_for_q_order, QSeries, Rational};

/// E_{2k}(τ) = 1 − (4k/B_{2k})·Σ_{n≥1} σ_{2k−1}(n) qⁿ through q^{q_order}.
pub fn eisenstein(k: u32, q_order: i64) -> QSeries<Rational> {
    assert!(k >= 1, "Eisenstein weight must be positive");
    let factor = -Rational::from_integer(BigInt::from(4 * k as i64)) / bernoulli(2 * k);
    let mut terms = vec![(0, Rational::from_integer(BigInt::from(1)))];
    for n in 1..=q_order.max(0) {
        terms.push((
            n,
            &factor * Rational::from_integer(divisor_sigma(2 * k - 1, n as u64)),
        ));
    }
    QSeries::from_integer_terms(terms, trunc_for_q_order(q_order))
}

/// Independent route to E_{2k}: the double Lambert sum
/// Σ_{m,n≥1} m^{2k−1} q^{mn} in place of the divisor sums.
pub fn eisenstein_lambert(k: u32, q_order: i64) -> QSeries<Rational> {
    assert!(k >= 1);
    let factor = -Rational::from_integer(BigInt::from(4 * k as i64)) / bernoulli(2 * k);
    let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut m: i64 = 1;
    while m <= q_order {
        let mut mn = m;
        let power = BigInt::from(m).pow(2 * k - 1);
        while mn <= q_order {
            *coeffs.entry(mn).or_default() += &power;
            mn += m;
        }
        m += 1;
    }
    let mut terms = vec![(0, Rational::from_integer(BigInt::from(1)))];
    for (n, c) in coeffs {
        terms.push((n, &factor * Rational::from_integer(c)));
    }
    QSeries::from_integer_terms(terms, trunc_for_q_order(q_order))
}

/// Ĝ_{2k}(τ) = −B_{2k}/(2k)!·E_{2k}(τ).
pub fn g_hat(k: u32, q_order: i64) -> QSeries<Rational> {
    let scale = -bernoulli(2 * k) / Rational::from_integer(factorial(2 * k));
    eisenstein(k, q_order).scale(&scale)
}

/// Append-only cache of Eisenstein expansions, safely shareable across
/// threads; concurrent population is idempotent because entries are pure
/// recomputations.
#[derive(Debug, Default)]
pub struct EisensteinCache {
    entries: Mutex<BTreeMap<(u32, i64), QSeries<Rational>>>,
}

impl EisensteinCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: u32, q_order: i64) -> QSeries<Rational> {
        let mut map = self.entries.lock().unwrap();
        map.entry((k, q_order))
            .or_insert_with(|| {
                let e = eisenstein(k, q_order);
                debug_assert_eq!(e.coeff_q(0), Rational::from_integer(BigInt::from(1)));
                e
            })
            .clone()
    }

    pub fn g_hat(&self, k: u32, q_order: i64) -> QSeries<Rational> {
        let scale = -bernoulli(2 * k) / Rational::from_integer(factorial(2 * k));
        self.get(k, q_order).scale(&scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn e2_expansion() {
        let e2 = eisenstein(1, 6);
        assert_eq!(e2.coeff_q(0), rat(1, 1));
        assert_eq!(e2.coeff_q(1), rat(-24, 1));
        assert_eq!(e2.coeff_q(2), rat(-72, 1));
        assert_eq!(e2.coeff_q(3), rat(-96, 1));
        assert_eq!(e2.coeff_q(4), rat(-168, 1));
    }

    #[test]
    fn e4_e6_expansion() {
        let e4 = eisenstein(2, 4);
        assert_eq!(e4.coeff_q(0), rat(1, 1));
        assert_eq!(e4.coeff_q(1), rat(240, 1));
        assert_eq!(e4.coeff_q(2), rat(2160, 1));
        assert_eq!(e4.coeff_q(3), rat(6720, 1));
        let e6 = eisenstein(3, 2);
        assert_eq!(e6.coeff_q(1), rat(-504, 1));
        assert_eq!(e6.coeff_q(2), rat(-16632, 1));
    }

    #[test]
    fn divisor_and_lambert_routes_agree() {
        for k in 1..=6 {
            let a = eisenstein(k, 24);
            let b = eisenstein_lambert(k, 24);
            assert!(a.eq_through(&b, trunc_for_q_order(24)), "weight {}", 2 * k);
        }
    }

    #[test]
    fn g_hat_normalization() {
        // Ĝ₄ = (1/720)·E₄, so 3Ĝ₄ has constant term 1/240.
        let g4 = g_hat(2, 2);
        assert_eq!(g4.coeff_q(0) * rat(3, 1), rat(1, 240));
    }

    #[test]
    fn cache_constant_term_is_one() {
        let cache = EisensteinCache::new();
        for k in 1..=5 {
            assert_eq!(cache.get(k, 3).coeff_q(0), rat(1, 1));
        }
    }
}
