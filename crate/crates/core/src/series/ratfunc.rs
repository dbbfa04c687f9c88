//! Univariate rational functions over the exact rationals.
//!
//! Quotients of Laurent polynomials in one fugacity, kept in a canonical
//! reduced form so structural equality is mathematical equality:
//!
//! * numerator and denominator share no polynomial factor (Euclidean gcd);
//! * the denominator is an ordinary polynomial with constant term 1 (all
//!   monomial content is pushed into the numerator);
//! * zero is `0/1`.

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::rational::{CoefficientRing, Rational};

/// Reduced quotient of Laurent polynomials in one variable.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: LaurentPoly<Rational>,
    den: LaurentPoly<Rational>,
}

// --- dense polynomial helpers (ascending coefficients, no trailing zeros) ---

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map_or(false, |c| Zero::is_zero(c)) {
        v.pop();
    }
    v
}

fn to_dense(p: &LaurentPoly<Rational>) -> (i64, Vec<Rational>) {
    let shift = p.min_exp().unwrap_or(0);
    let deg = p.max_exp().unwrap_or(0) - shift;
    let mut v = vec![<Rational as Zero>::zero(); (deg + 1) as usize];
    for (e, c) in p.terms() {
        v[(e - shift) as usize] = c.clone();
    }
    (shift, v)
}

fn from_dense(shift: i64, v: &[Rational]) -> LaurentPoly<Rational> {
    LaurentPoly::from_terms(
        v.iter()
            .enumerate()
            .map(|(i, c)| (shift + i as i64, c.clone())),
    )
}

/// Remainder of `a` by `b` (`b` nonzero), with the quotient discarded.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[dr - db + i] -= t;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Quotient and remainder of `a` by `b`.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if a.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![<Rational as Zero>::zero(); a.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        q[dr - db] = factor.clone();
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[dr - db + i] -= t;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    (trim(q), r)
}

/// Monic gcd by the Euclidean algorithm.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    x
}

impl RationalFunction {
    /// Builds `num/den` and reduces to canonical form. Panics on a zero
    /// denominator.
    pub fn new(num: LaurentPoly<Rational>, den: LaurentPoly<Rational>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.canonicalize();
        rf
    }

    pub fn from_poly(p: LaurentPoly<Rational>) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn numerator(&self) -> &LaurentPoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly<Rational> {
        &self.den
    }

    /// The underlying Laurent polynomial, if the denominator reduced to 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly<Rational>> {
        if self.den == LaurentPoly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.as_laurent().is_some()
    }

    /// Substitutes the variable by its inverse.
    pub fn invert_variable(&self) -> Self {
        Self::new(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Rescales every exponent by `k` (substitution x ↦ x^k), k ≥ 1.
    pub fn dilate_exponents(&self, k: i64) -> Self {
        assert!(k >= 1);
        RationalFunction {
            num: self.num.map_exponents(|e| e * k),
            den: self.den.map_exponents(|e| e * k),
        }
    }

    /// Evaluates at a point, given the value of one grid unit of the
    /// variable. `None` when the denominator vanishes to double precision.
    pub fn eval_halfpow(&self, half: Complex64) -> Option<Complex64> {
        let d = self.den.eval_halfpow(half);
        if d.norm() < 1e-300 {
            return None;
        }
        Some(self.num.eval_halfpow(half) / d)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Push all monomial content into the numerator.
        let dshift = self.den.min_exp().unwrap();
        let (nshift, ndense) = to_dense(&self.num);
        let (_, ddense) = to_dense(&self.den);
        let g = poly_gcd(&ndense, &ddense);
        let (nred, dred) = if g.len() > 1 {
            let (nq, nr) = poly_divmod(&ndense, &g);
            let (dq, dr) = poly_divmod(&ddense, &g);
            debug_assert!(nr.is_empty() && dr.is_empty());
            (nq, dq)
        } else {
            (ndense, ddense)
        };
        // Normalize: denominator constant term 1.
        let c = dred[0].clone();
        debug_assert!(!Zero::is_zero(&c));
        let num = from_dense(nshift - dshift, &nred).scale(&c.recip());
        let den = from_dense(0, &dred).scale(&c.recip());
        self.num = num;
        self.den = den;
    }
}

impl CoefficientRing for RationalFunction {
    fn zero() -> Self {
        Self::constant(<Rational as Zero>::zero())
    }

    fn one() -> Self {
        Self::constant(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::new(num, den)
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn scale(&self, k: &Rational) -> Self {
        if Zero::is_zero(k) {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }
}
