//! Truncated power series in the nome q on a 1/24-integer exponent grid.
//!
//! One global grid of 1/24 powers accommodates every object in play:
//! q^{1/8} (theta prefactors, 3 units), q^{1/24} (eta, 1 unit) and plain
//! integer powers (24 units). A series knows its coefficients strictly below
//! `trunc` grid units and nothing at or above it; every operation propagates
//! that bound conservatively, so higher-order garbage is never exposed.

use num_complex::Complex64;

use super::error::SeriesError;
use super::rational::{CoefficientRing, Rational};

/// Grid units per integer power of q.
pub const Q_GRID: i64 = 24;

/// Sentinel truncation for exactly-known (polynomial) series. Large enough
/// to dominate every real truncation, small enough that sums cannot
/// overflow `i64`.
pub const TRUNC_EXACT: i64 = i64::MAX / 4;

/// Truncation bound, in grid units, that knows everything through q^{q_order}.
pub fn trunc_for_q_order(q_order: i64) -> i64 {
    Q_GRID * (q_order + 1)
}

/// Truncated q-series with coefficients in `R`.
///
/// Coefficient of exponent `base + i` (grid units) is `coeffs[i]`; exponents
/// below `base` or beyond the stored range but below `trunc` are known to be
/// zero; exponents at or above `trunc` are unknown.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<R> {
    base: i64,
    coeffs: Vec<R>,
    trunc: i64,
}

impl<R: CoefficientRing> QSeries<R> {
    /// Builds a series from raw parts and normalizes (strips zero fringes,
    /// drops anything at or beyond `trunc`).
    pub fn from_raw(base: i64, coeffs: Vec<R>, trunc: i64) -> Self {
        let mut s = QSeries {
            base,
            coeffs,
            trunc,
        };
        s.normalize();
        s
    }

    pub fn zero(trunc: i64) -> Self {
        QSeries {
            base: trunc,
            coeffs: Vec::new(),
            trunc,
        }
    }

    pub fn constant(c: R, trunc: i64) -> Self {
        Self::from_raw(0, vec![c], trunc)
    }

    pub fn one(trunc: i64) -> Self {
        Self::constant(R::one(), trunc)
    }

    /// The monomial c·q^{exp/24}.
    pub fn monomial(exp: i64, c: R, trunc: i64) -> Self {
        Self::from_raw(exp, vec![c], trunc)
    }

    /// Series from integer-power terms `(n, c)` meaning c·q^n.
    pub fn from_integer_terms(terms: impl IntoIterator<Item = (i64, R)>, trunc: i64) -> Self {
        Self::from_grid_terms(terms.into_iter().map(|(n, c)| (Q_GRID * n, c)), trunc)
    }

    /// Series from scattered grid-unit terms `(e, c)` meaning c·q^{e/24}.
    /// Repeated exponents are summed.
    pub fn from_grid_terms(terms: impl IntoIterator<Item = (i64, R)>, trunc: i64) -> Self {
        let mut map: std::collections::BTreeMap<i64, R> = std::collections::BTreeMap::new();
        for (e, c) in terms {
            if e >= trunc {
                continue;
            }
            match map.get_mut(&e) {
                Some(acc) => *acc = acc.add(&c),
                None => {
                    map.insert(e, c);
                }
            }
        }
        let base = match map.keys().next() {
            Some(&b) => b,
            None => return Self::zero(trunc),
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![R::zero(); (hi - base + 1) as usize];
        for (e, c) in map {
            coeffs[(e - base) as usize] = c;
        }
        Self::from_raw(base, coeffs, trunc)
    }

    fn normalize(&mut self) {
        if self.trunc < self.base + self.coeffs.len() as i64 {
            let keep = (self.trunc - self.base).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.base += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.base = self.trunc;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the first stored coefficient, grid units.
    pub fn base_exponent(&self) -> i64 {
        self.base
    }

    /// First unknown exponent, grid units.
    pub fn truncation(&self) -> i64 {
        self.trunc
    }

    /// Leading coefficient, if the series is nonzero.
    pub fn leading(&self) -> Option<(i64, &R)> {
        self.coeffs.first().map(|c| (self.base, c))
    }

    /// Coefficient at exponent `e` grid units. Panics when `e` is at or
    /// beyond the truncation: that read would be undefined, not zero.
    pub fn coeff(&self, e: i64) -> R {
        assert!(
            e < self.trunc,
            "coefficient read at exponent {e} beyond truncation {}",
            self.trunc
        );
        let i = e - self.base;
        if i < 0 || i >= self.coeffs.len() as i64 {
            R::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficient of the integer power q^n.
    pub fn coeff_q(&self, n: i64) -> R {
        self.coeff(Q_GRID * n)
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.base + i as i64, c))
    }

    /// Every nonzero coefficient sits at an integer power of q.
    pub fn is_integer_grid(&self) -> bool {
        self.iter_terms()
            .all(|(e, c)| c.is_zero() || e % Q_GRID == 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        if self.is_zero() {
            let mut out = rhs.clone();
            out.trunc = trunc;
            out.normalize();
            return out;
        }
        if rhs.is_zero() {
            let mut out = self.clone();
            out.trunc = trunc;
            out.normalize();
            return out;
        }
        let base = self.base.min(rhs.base);
        let hi = (self.base + self.coeffs.len() as i64)
            .max(rhs.base + rhs.coeffs.len() as i64)
            .min(trunc);
        let mut coeffs = Vec::with_capacity((hi - base).max(0) as usize);
        for e in base..hi {
            let a = self.get_or_zero(e);
            let b = rhs.get_or_zero(e);
            coeffs.push(a.add(&b));
        }
        Self::from_raw(base, coeffs, trunc)
    }

    fn get_or_zero(&self, e: i64) -> R {
        let i = e - self.base;
        if i < 0 || i >= self.coeffs.len() as i64 {
            R::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Product truncation: min(t₁ + base₂, t₂ + base₁). Anything the factors
    /// cannot determine is discarded.
    pub fn mul(&self, rhs: &Self) -> Self {
        let trunc = self
            .trunc
            .saturating_add(rhs.base)
            .min(rhs.trunc.saturating_add(self.base))
            .min(TRUNC_EXACT);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(trunc);
        }
        let base = self.base + rhs.base;
        let len = (trunc - base).max(0).min(
            (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1) as i64,
        ) as usize;
        let mut coeffs = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_raw(base, coeffs, trunc)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = QSeries {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
            trunc: self.trunc,
        };
        out.normalize();
        out
    }

    pub fn scale_ring(&self, k: &R) -> Self {
        let mut out = QSeries {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
            trunc: self.trunc,
        };
        out.normalize();
        out
    }

    /// Multiplies by the monomial c·q^{exp/24}.
    pub fn mul_monomial(&self, exp: i64, c: &R) -> Self {
        let mut out = QSeries {
            base: self.base + exp,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
            trunc: self.trunc.saturating_add(exp).min(TRUNC_EXACT),
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse. Requires an invertible leading coefficient
    /// and (except for monomials) a finite truncation.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let (base, lead) = match self.leading() {
            Some(x) => x,
            None => {
                return Err(SeriesError::NonInvertibleLeading {
                    coeff: "0 (zero series)".into(),
                })
            }
        };
        let lead_inv = lead
            .inverse()
            .ok_or_else(|| SeriesError::NonInvertibleLeading {
                coeff: format!("{lead:?}"),
            })?;
        if self.trunc >= TRUNC_EXACT {
            if self.coeffs.len() == 1 {
                return Ok(Self::monomial(-base, lead_inv, TRUNC_EXACT));
            }
            return Err(SeriesError::UnboundedInverse);
        }
        // Relative orders known: trunc - base. Result knows the same
        // relative range from its base -base.
        let rel = (self.trunc - base) as usize;
        let mut g = Vec::with_capacity(rel);
        g.push(lead_inv.clone());
        for n in 1..rel {
            let mut acc = R::zero();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                if self.coeffs[k].is_zero() || g[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&g[n - k]));
            }
            g.push(acc.mul(&lead_inv).neg());
        }
        Ok(Self::from_raw(-base, g, self.trunc - 2 * base))
    }

    /// exp of a series with zero constant term and no negative exponents.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.base <= 0 && !self.is_zero() {
            return Err(SeriesError::ExpNeedsPositiveValuation {
                base: self.base,
            });
        }
        if self.trunc >= TRUNC_EXACT && !self.is_zero() {
            return Err(SeriesError::UnboundedInverse);
        }
        let t = self.trunc.min(TRUNC_EXACT);
        if self.is_zero() {
            return Ok(Self::one(t));
        }
        let rel = t as usize;
        let mut f = Vec::with_capacity(rel);
        f.push(R::one());
        for n in 1..rel {
            let mut acc = R::zero();
            for k in 1..=n {
                let a = self.get_or_zero(k as i64);
                if a.is_zero() || f[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&a.scale(&Rational::from_integer(num_bigint::BigInt::from(k))).mul(&f[n - k]));
            }
            f.push(acc.scale(&super::rational::rat(1, n as i64)));
        }
        Ok(Self::from_raw(0, f, t))
    }

    /// log of a series with leading coefficient exactly 1 at exponent 0.
    pub fn log(&self) -> Result<Self, SeriesError> {
        let ok = matches!(self.leading(), Some((0, c)) if *c == R::one());
        if !ok {
            return Err(SeriesError::LogNeedsUnitLeadingOne);
        }
        if self.trunc >= TRUNC_EXACT {
            if self.coeffs.len() == 1 {
                return Ok(Self::zero(TRUNC_EXACT));
            }
            return Err(SeriesError::UnboundedInverse);
        }
        let rel = self.trunc as usize;
        let mut g: Vec<R> = Vec::with_capacity(rel);
        g.push(R::zero());
        for n in 1..rel {
            let mut acc = R::zero();
            for k in 1..n {
                let a = self.get_or_zero((n - k) as i64);
                if a.is_zero() || g[k].is_zero() {
                    continue;
                }
                acc = acc.add(&g[k].scale(&Rational::from_integer(num_bigint::BigInt::from(k))).mul(&a));
            }
            let an = self.get_or_zero(n as i64);
            g.push(an.sub(&acc.scale(&super::rational::rat(1, n as i64))));
        }
        Ok(Self::from_raw(0, g, self.trunc))
    }

    /// Drops knowledge beyond `t` grid units.
    pub fn truncate(&self, t: i64) -> Self {
        let mut out = self.clone();
        out.trunc = out.trunc.min(t);
        out.normalize();
        out
    }

    /// Coefficient-for-coefficient equality through exponent `bound`
    /// (exclusive, grid units). Panics if either side is not known that far:
    /// such a comparison would be vacuous, not true.
    pub fn eq_through(&self, rhs: &Self, bound: i64) -> bool {
        assert!(
            bound <= self.trunc && bound <= rhs.trunc,
            "comparison through {bound} exceeds truncation ({}, {})",
            self.trunc,
            rhs.trunc
        );
        let lo = self.base.min(rhs.base).min(bound);
        (lo..bound).all(|e| self.get_or_zero(e) == rhs.get_or_zero(e))
    }

    /// First exponent (grid units) where the two series disagree, through
    /// `bound`. `None` means equal on the whole window.
    pub fn first_mismatch(&self, rhs: &Self, bound: i64) -> Option<(i64, R, R)> {
        let lo = self.base.min(rhs.base).min(bound);
        (lo..bound).find_map(|e| {
            let a = self.get_or_zero(e);
            let b = rhs.get_or_zero(e);
            if a == b {
                None
            } else {
                Some((e, a, b))
            }
        })
    }

    pub fn map_coeffs<S: CoefficientRing>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries::from_raw(
            self.base,
            self.coeffs.iter().map(|c| f(c)).collect(),
            self.trunc,
        )
    }

    /// Evaluates numerically given q24 = q^{1/24} and a coefficient
    /// evaluator. The caller fixes all branches by supplying q24 directly.
    pub fn eval_with(&self, q24: Complex64, f: impl Fn(&R) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.iter_terms() {
            acc += f(c) * q24.powi(e as i32);
        }
        acc
    }
}

impl QSeries<Rational> {
    pub fn eval(&self, q24: Complex64) -> Complex64 {
        self.eval_with(q24, |c| {
            Complex64::new(super::rational::rational_to_f64(c), 0.0)
        })
    }
}
