//! Exact rational scalars and the coefficient-ring abstraction.
//!
//! Every series in this crate is generic over a [`CoefficientRing`]: exact
//! rationals for modular forms, Laurent polynomials for fugacity-graded
//! objects, rational functions where poles in a fugacity must be carried
//! symbolically, and complex doubles for the numeric backend.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational.
///
/// Backed by `num_rational::BigRational`, which keeps every value in
/// canonical form: positive denominator, gcd(|numerator|, denominator) = 1.
pub type Rational = BigRational;

/// Small-integer rational constructor, `rat(n, d) = n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Render a rational as a decimal-free `p/q` string (`p` for integers).
pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Commutative ring with a ℚ-action, the common interface of all series
/// coefficients.
///
/// Operands of different rings are rejected at compile time by the type
/// system; there is no runtime mixed-ring error path.
pub trait CoefficientRing: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Action of ℚ on the ring (all rings here are ℚ-algebras).
    fn scale(&self, k: &Rational) -> Self;
    /// Multiplicative inverse when the element is a unit, `None` otherwise.
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

impl CoefficientRing for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scale(&self, k: &Rational) -> Self {
        self * k
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Convert a rational to the nearest double (numeric backend only).
pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a sign-preserving ratio of leading digits.
        let n = x.numer().to_f64().unwrap_or(if x.numer().is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl CoefficientRing for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scale(&self, k: &Rational) -> Self {
        self * rational_to_f64(k)
    }

    fn inverse(&self) -> Option<Self> {
        if CoefficientRing::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert!(x.denom().is_positive());
        assert_eq!(rational_string(&x), "-3/2");
        assert_eq!(rational_string(&rat(8, 4)), "2");
    }

    #[test]
    fn rational_ring_ops() {
        let a = rat(1, 3);
        let b = rat(1, 6);
        assert_eq!(a.add(&b), rat(1, 2));
        assert_eq!(a.mul(&b), rat(1, 18));
        assert_eq!(a.inverse().unwrap(), rat(3, 1));
        assert!(CoefficientRing::inverse(&<Rational as Zero>::zero()).is_none());
    }
}
