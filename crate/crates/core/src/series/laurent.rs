//! Sparse Laurent polynomials in one formal variable.
//!
//! Exponents are stored as `i64` grid counts; the grid meaning belongs to the
//! caller. Fugacities that occur with half-integer powers (y^{±1/2} in theta
//! prefactors) use a half-unit grid, so `y^{k/2}` is stored under key `k`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::rational::{CoefficientRing, Rational};

/// Sparse Laurent polynomial over `R`, keyed by exponent. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: CoefficientRing> LaurentPoly<R> {
    pub fn new() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: i64, coeff: R) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn constant(coeff: R) -> Self {
        Self::monomial(0, coeff)
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut p = Self::new();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                let s = c.add(&coeff);
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Remaps every exponent. The map must be injective on the support.
    pub fn map_exponents(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut out = Self::new();
        for (e, c) in self.terms() {
            out.add_term(f(e), c.clone());
        }
        assert_eq!(out.terms.len(), self.terms.len(), "exponent map collision");
        out
    }

    /// Substitutes the variable by its inverse (exponent sign flip).
    pub fn invert_variable(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    pub fn map_coeffs<S: CoefficientRing>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        let mut out = LaurentPoly::new();
        for (e, c) in self.terms() {
            out.add_term(e, f(c));
        }
        out
    }

    /// Sum of all coefficients, i.e. evaluation at variable = 1.
    pub fn eval_at_one(&self) -> R {
        let mut acc = R::zero();
        for (_, c) in self.terms() {
            acc = acc.add(c);
        }
        acc
    }

    /// True when every exponent is a multiple of `d` (integer powers on a
    /// half-unit grid correspond to `d = 2`).
    pub fn exponents_divisible_by(&self, d: i64) -> bool {
        self.terms.keys().all(|e| e % d == 0)
    }
}

impl<R: CoefficientRing> Default for LaurentPoly<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: CoefficientRing> CoefficientRing for LaurentPoly<R> {
    fn zero() -> Self {
        Self::new()
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = Self::new();
        for (e, c) in self.terms() {
            out.terms.insert(e, c.neg());
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    fn scale(&self, k: &Rational) -> Self {
        if k == &Rational::zero() {
            return Self::new();
        }
        let mut out = Self::new();
        for (e, c) in self.terms() {
            out.add_term(e, c.scale(k));
        }
        out
    }

    /// Laurent polynomials are units exactly when they are a single term
    /// with a unit coefficient.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        c.inverse().map(|ci| Self::monomial(-e, ci))
    }
}

impl LaurentPoly<Rational> {
    /// Evaluates with `half` = the value of the variable raised to one grid
    /// unit (for a half-unit grid, pass x^{1/2}). Branch choices stay with
    /// the caller.
    pub fn eval_halfpow(&self, half: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.terms() {
            acc += half.powi(e as i32) * super::rational::rational_to_f64(c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::rat;

    fn y(e: i64, n: i64, d: i64) -> LaurentPoly<Rational> {
        LaurentPoly::monomial(e, rat(n, d))
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = y(3, 1, 2);
        let b = y(3, -1, 2);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.add(&b).num_terms(), 0);
    }

    #[test]
    fn mul_difference_of_squares() {
        // (1 + x)(1 - x) = 1 - x^2
        let one_plus = LaurentPoly::from_terms([(0, rat(1, 1)), (2, rat(1, 1))]);
        let one_minus = LaurentPoly::from_terms([(0, rat(1, 1)), (2, rat(-1, 1))]);
        let prod = one_plus.mul(&one_minus);
        assert_eq!(
            prod,
            LaurentPoly::from_terms([(0, rat(1, 1)), (4, rat(-1, 1))])
        );
    }

    #[test]
    fn monomial_inverse() {
        let m = y(-2, 3, 4);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), LaurentPoly::one());
        let not_unit = LaurentPoly::from_terms([(0, rat(1, 1)), (1, rat(1, 1))]);
        assert!(not_unit.inverse().is_none());
    }

    #[test]
    fn nested_ring() {
        // Bivariate: outer variable y, inner variable u.
        type Biv = LaurentPoly<LaurentPoly<Rational>>;
        let a: Biv = LaurentPoly::monomial(1, LaurentPoly::monomial(2, rat(1, 1)));
        let b: Biv = LaurentPoly::monomial(-1, LaurentPoly::monomial(-2, rat(1, 1)));
        assert_eq!(a.mul(&b), Biv::one());
    }
}
