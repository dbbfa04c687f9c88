//! The normalized Weierstrass function P̂ = ℘/(2πi)² in two exact
//! representations.
//!
//! As a power series in w = 2πi·z:
//!
//!   P̂ = 1/w² + Σ_{m≥2} (2m−1)·Ĝ_{2m}(τ)·w^{2m−2},
//!
//! with the double pole carried as an explicit flagged part. As a q-series
//! with rational-function coefficients in y = e^{2πiz}:
//!
//!   P̂ = 1/12 + y/(1−y)² + Σ_{n≥1} qⁿ Σ_{d|n} d·(y^d − 2 + y^{−d}),
//!
//! whose q⁰ coefficient carries the pole at y = 1. The two forms are
//! cross-checked numerically in the verification suite.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::arith::divisors;
use super::eisenstein::EisensteinCache;
use crate::series::{
    trunc_for_q_order, LaurentPoly, QSeries, Rational, RationalFunction, CoefficientRing,
};

/// Laurent polynomials in w on a unit grid (integer exponents only).
pub type WLaurent = LaurentPoly<Rational>;

/// P̂ (or one of its even-order w-derivatives) as a w-expansion: one flagged
/// singular monomial plus regular coefficients, each a q-series.
#[derive(Clone, Debug)]
pub struct WExpansion {
    /// Singular part c·w^{−p}, or `None` for a regular expansion.
    pub pole: Option<(i64, Rational)>,
    /// Regular coefficients, keyed by w-exponent ≥ 0. Complete through
    /// `w_order`.
    pub regular: BTreeMap<i64, QSeries<Rational>>,
    pub w_order: i64,
    pub q_order: i64,
}

impl WExpansion {
    /// Regular coefficient of w^e (known-zero entries are not stored).
    pub fn regular_coeff(&self, e: i64) -> QSeries<Rational> {
        assert!(
            (0..=self.w_order).contains(&e),
            "w-exponent {e} outside the computed window 0..={}",
            self.w_order
        );
        self.regular
            .get(&e)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(trunc_for_q_order(self.q_order)))
    }

    /// Term-by-term k-th w-derivative. The regular window shrinks by k.
    pub fn derivative(&self, k: u32) -> WExpansion {
        let pole = self.pole.clone().map(|(p, c)| {
            let mut coeff = c;
            for i in 0..k as i64 {
                coeff *= Rational::from_integer(BigInt::from(-p - i));
            }
            (p + k as i64, coeff)
        });
        let mut regular = BTreeMap::new();
        for (&e, qs) in &self.regular {
            if e < k as i64 {
                continue;
            }
            let mut factor = Rational::from_integer(BigInt::from(1));
            for i in 0..k as i64 {
                factor *= Rational::from_integer(BigInt::from(e - i));
            }
            let scaled = qs.scale(&factor);
            if !scaled.is_zero() {
                regular.insert(e - k as i64, scaled);
            }
        }
        WExpansion {
            pole,
            regular,
            w_order: self.w_order - k as i64,
            q_order: self.q_order,
        }
    }

    /// The full expansion (pole included) transposed to a q-major series
    /// with w-Laurent coefficients.
    pub fn to_qmajor(&self) -> QSeries<WLaurent> {
        let trunc = trunc_for_q_order(self.q_order);
        let mut terms: Vec<(i64, WLaurent)> = Vec::new();
        if let Some((p, c)) = &self.pole {
            terms.push((0, LaurentPoly::monomial(-p, c.clone())));
        }
        for (&e, qs) in &self.regular {
            for (qe, c) in qs.iter_terms() {
                terms.push((qe, LaurentPoly::monomial(e, c.clone())));
            }
        }
        QSeries::from_grid_terms(terms, trunc)
    }

    /// Same transpose restricted to the regular part.
    pub fn to_qmajor_regular(&self) -> QSeries<WLaurent> {
        let trunc = trunc_for_q_order(self.q_order);
        let mut terms: Vec<(i64, WLaurent)> = Vec::new();
        for (&e, qs) in &self.regular {
            for (qe, c) in qs.iter_terms() {
                terms.push((qe, LaurentPoly::monomial(e, c.clone())));
            }
        }
        QSeries::from_grid_terms(terms, trunc)
    }
}

/// P̂ as a w-expansion: pole 1/w², regular coefficients (2m−1)Ĝ_{2m} at
/// w^{2m−2} for 2m−2 ≤ w_order. Odd and w⁰ coefficients vanish.
pub fn p_hat_wseries(cache: &EisensteinCache, q_order: i64, w_order: i64) -> WExpansion {
    assert!(w_order % 2 == 0, "w_order must be even");
    let mut regular = BTreeMap::new();
    let mut m = 2u32;
    while 2 * (m as i64) - 2 <= w_order {
        let coeff = cache
            .g_hat(m, q_order)
            .scale(&Rational::from_integer(BigInt::from(2 * m as i64 - 1)));
        regular.insert(2 * m as i64 - 2, coeff);
        m += 1;
    }
    WExpansion {
        pole: Some((2, Rational::from_integer(BigInt::from(1)))),
        regular,
        w_order,
        q_order,
    }
}

/// P̂ as a q-series with y-rational coefficients (half-unit y grid).
pub fn p_hat_yform(q_order: i64) -> QSeries<RationalFunction> {
    let trunc = trunc_for_q_order(q_order);
    let one = <Rational as CoefficientRing>::one();
    // q⁰: 1/12 + y/(1−y)²
    let num = LaurentPoly::from_terms([
        (0, crate::series::rat(1, 12)),
        (2, crate::series::rat(5, 6)),
        (4, crate::series::rat(1, 12)),
    ]);
    let den = LaurentPoly::from_terms([(0, one.clone()), (2, crate::series::rat(-2, 1)), (4, one.clone())]);
    let mut terms = vec![(0i64, RationalFunction::new(num, den))];
    for n in 1..=q_order {
        let mut poly = LaurentPoly::new();
        for d in divisors(n as u64) {
            let d = d as i64;
            poly.add_term(2 * d, Rational::from_integer(BigInt::from(d)));
            poly.add_term(0, Rational::from_integer(BigInt::from(-2 * d)));
            poly.add_term(-2 * d, Rational::from_integer(BigInt::from(d)));
        }
        terms.push((n, RationalFunction::from_poly(poly)));
    }
    QSeries::from_integer_terms(terms, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn w_square_coefficient_is_three_ghat4() {
        let cache = EisensteinCache::new();
        let p = p_hat_wseries(&cache, 4, 6);
        // First regular coefficient: 3Ĝ₄ = (1/240)E₄.
        let c = p.regular_coeff(2);
        assert_eq!(c.coeff_q(0), rat(1, 240));
        assert_eq!(c.coeff_q(1), rat(1, 1)); // 240/240
        // No constant term, odd coefficients vanish.
        assert!(p.regular_coeff(0).is_zero());
        assert!(p.regular_coeff(1).is_zero());
        assert!(p.regular_coeff(3).is_zero());
        // w⁴ coefficient: 5Ĝ₆ = −(5/30240)E₆ = −E₆/6048.
        assert_eq!(p.regular_coeff(4).coeff_q(0), rat(-1, 6048));
    }

    #[test]
    fn second_derivative_shifts_pole() {
        let cache = EisensteinCache::new();
        let p = p_hat_wseries(&cache, 2, 8);
        let d2 = p.derivative(2);
        // ∂²(w⁻²) = 6 w⁻⁴
        assert_eq!(d2.pole, Some((4, rat(6, 1))));
        // ∂²(3Ĝ₄w²) = 6Ĝ₄
        assert_eq!(d2.regular_coeff(0).coeff_q(0), rat(6, 720));
    }

    #[test]
    fn yform_low_coefficients() {
        let p = p_hat_yform(3);
        // q¹ coefficient: y − 2 + y⁻¹.
        let q1 = p.coeff_q(1);
        let poly = q1.as_laurent().unwrap();
        assert_eq!(poly.coeff(2), rat(1, 1));
        assert_eq!(poly.coeff(0), rat(-2, 1));
        assert_eq!(poly.coeff(-2), rat(1, 1));
        // q⁰ at y = −1 (half-grid value i ↦ y = −1): 1/12 − 1/4 = −1/6.
        let q0 = p.coeff_q(0);
        let v = q0
            .eval_halfpow(num_complex::Complex64::new(0.0, 1.0))
            .unwrap();
        assert!((v.re - (-1.0 / 6.0)).abs() < 1e-12 && v.im.abs() < 1e-12);
    }
}
