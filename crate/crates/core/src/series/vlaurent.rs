//! Truncated Laurent series in the normalized expansion variable v̂ = 2πi·t,
//! with truncated q-series coefficients.
//!
//! This is the carrier for genus expansions around t = 0: a finite pole part
//! (order ≥ -2 in every genus use), even structure, and per-coefficient
//! q-knowledge. The v̂-coefficient of order `lowest + i` is `coeffs[i]`;
//! orders at or beyond `v_trunc` are unknown; orders below `lowest` are zero.

use super::error::SeriesError;
use super::qseries::{QSeries, TRUNC_EXACT};
use super::rational::{CoefficientRing, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct FormalLaurentSeries<R> {
    lowest: i64,
    coeffs: Vec<QSeries<R>>,
    v_trunc: i64,
}

impl<R: CoefficientRing> FormalLaurentSeries<R> {
    pub fn from_coeffs(lowest: i64, coeffs: Vec<QSeries<R>>, v_trunc: i64) -> Self {
        let mut s = FormalLaurentSeries {
            lowest,
            coeffs,
            v_trunc,
        };
        s.normalize();
        s
    }

    pub fn zero(v_trunc: i64) -> Self {
        FormalLaurentSeries {
            lowest: v_trunc,
            coeffs: Vec::new(),
            v_trunc,
        }
    }

    /// The single term series · v̂^order.
    pub fn monomial(order: i64, series: QSeries<R>, v_trunc: i64) -> Self {
        Self::from_coeffs(order, vec![series], v_trunc)
    }

    pub fn constant(series: QSeries<R>, v_trunc: i64) -> Self {
        Self::monomial(0, series, v_trunc)
    }

    fn normalize(&mut self) {
        if self.v_trunc < self.lowest + self.coeffs.len() as i64 {
            let keep = (self.v_trunc - self.lowest).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lowest += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lowest = self.v_trunc;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_order(&self) -> i64 {
        self.lowest
    }

    pub fn v_truncation(&self) -> i64 {
        self.v_trunc
    }

    /// Smallest q-truncation among stored coefficients (`TRUNC_EXACT` when
    /// there are none).
    pub fn min_q_truncation(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|c| c.truncation())
            .min()
            .unwrap_or(TRUNC_EXACT)
    }

    fn get_or_zero(&self, order: i64) -> QSeries<R> {
        let i = order - self.lowest;
        if i < 0 || i >= self.coeffs.len() as i64 {
            QSeries::zero(TRUNC_EXACT)
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Exact coefficient series of v̂^order. Orders outside
    /// [lowest, v_trunc) are rejected.
    pub fn extract(&self, order: i64) -> Result<QSeries<R>, SeriesError> {
        if order < self.lowest || order >= self.v_trunc {
            return Err(SeriesError::ExtractOutOfRange {
                order,
                lowest: self.lowest,
                trunc: self.v_trunc,
            });
        }
        Ok(self.get_or_zero(order))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let v_trunc = self.v_trunc.min(rhs.v_trunc);
        let lowest = self.lowest.min(rhs.lowest);
        let hi = (self.lowest + self.coeffs.len() as i64)
            .max(rhs.lowest + rhs.coeffs.len() as i64)
            .min(v_trunc);
        let mut coeffs = Vec::new();
        for o in lowest..hi {
            coeffs.push(self.get_or_zero(o).add(&rhs.get_or_zero(o)));
        }
        Self::from_coeffs(lowest, coeffs, v_trunc)
    }

    pub fn neg(&self) -> Self {
        FormalLaurentSeries {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            v_trunc: self.v_trunc,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let v_trunc = self
            .v_trunc
            .saturating_add(rhs.lowest)
            .min(rhs.v_trunc.saturating_add(self.lowest))
            .min(TRUNC_EXACT);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(v_trunc);
        }
        let lowest = self.lowest + rhs.lowest;
        let len = (v_trunc - lowest)
            .max(0)
            .min((self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1) as i64)
            as usize;
        let mut coeffs: Vec<Option<QSeries<R>>> = vec![None; len];
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
                let p = a.mul(b);
                coeffs[i + j] = Some(match coeffs[i + j].take() {
                    Some(acc) => acc.add(&p),
                    None => p,
                });
            }
        }
        let q_default = self.min_q_truncation().min(rhs.min_q_truncation());
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.unwrap_or_else(|| QSeries::zero(q_default)))
            .collect();
        Self::from_coeffs(lowest, coeffs, v_trunc)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = FormalLaurentSeries {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
            v_trunc: self.v_trunc,
        };
        out.normalize();
        out
    }

    pub fn mul_qseries(&self, s: &QSeries<R>) -> Self {
        let mut out = FormalLaurentSeries {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
            v_trunc: self.v_trunc,
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse, pivoting on the first coefficient that is not
    /// known to vanish. Leading known-zero coefficients are sound to skip
    /// because every downstream q-claim stays below their q-truncation;
    /// the pivot requires them to be at least as well resolved as itself.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let pivot_idx = match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => {
                return Err(SeriesError::NonInvertibleLeading {
                    coeff: "0 (zero Laurent series)".into(),
                })
            }
        };
        let m = self.lowest + pivot_idx as i64;
        let pivot = &self.coeffs[pivot_idx];
        for c in &self.coeffs[..pivot_idx] {
            assert!(
                c.truncation() >= pivot.truncation(),
                "skipped zero coefficient less resolved than the pivot"
            );
        }
        if self.v_trunc >= TRUNC_EXACT && self.coeffs.len() > pivot_idx + 1 {
            return Err(SeriesError::UnboundedInverse);
        }
        let pivot_inv = pivot.invert()?;
        let rel = if self.v_trunc >= TRUNC_EXACT {
            1
        } else {
            (self.v_trunc - m) as usize
        };
        let mut g: Vec<QSeries<R>> = Vec::with_capacity(rel);
        g.push(pivot_inv.clone());
        for n in 1..rel {
            let mut acc: Option<QSeries<R>> = None;
            for k in 1..=n.min(self.coeffs.len() - 1 - pivot_idx) {
                let a = &self.coeffs[pivot_idx + k];
                if a.is_zero() || g[n - k].is_zero() {
                    continue;
                }
                let p = a.mul(&g[n - k]);
                acc = Some(match acc.take() {
                    Some(s) => s.add(&p),
                    None => p,
                });
            }
            match acc {
                Some(s) => g.push(s.mul(&pivot_inv).neg()),
                None => g.push(QSeries::zero(
                    g[0].truncation().min(self.min_q_truncation()),
                )),
            }
        }
        let v_trunc = if self.v_trunc >= TRUNC_EXACT {
            TRUNC_EXACT
        } else {
            self.v_trunc - 2 * m
        };
        Ok(Self::from_coeffs(-m, g, v_trunc))
    }

    /// exp of a series supported in strictly positive orders.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Ok(Self::constant(
                QSeries::one(self.min_q_truncation()),
                self.v_trunc,
            ));
        }
        if self.lowest <= 0 {
            return Err(SeriesError::ExpNeedsPositiveValuation { base: self.lowest });
        }
        let one = Self::constant(QSeries::one(self.min_q_truncation()), self.v_trunc);
        let mut acc = one.clone();
        let mut pow = one;
        let mut k: i64 = 1;
        while k * self.lowest < self.v_trunc {
            pow = pow.mul(self);
            acc = acc.add(&pow.scale(&factorial_recip(k)));
            k += 1;
        }
        Ok(acc)
    }

    /// log of a series of the form 1 + (positive orders).
    pub fn log(&self) -> Result<Self, SeriesError> {
        let lead_ok = self.lowest == 0
            && self
                .coeffs
                .first()
                .map_or(false, |c| c.eq_through(&QSeries::one(c.truncation()), c.truncation()));
        if !lead_ok {
            return Err(SeriesError::LogNeedsUnitLeadingOne);
        }
        let u = self.sub(&Self::constant(
            QSeries::one(self.coeffs[0].truncation()),
            self.v_trunc,
        ));
        if u.is_zero() {
            return Ok(Self::zero(self.v_trunc));
        }
        let mut acc = Self::zero(self.v_trunc);
        let mut pow = Self::constant(QSeries::one(u.min_q_truncation()), self.v_trunc);
        let mut k: i64 = 1;
        while (k - 1) * u.lowest < self.v_trunc {
            pow = pow.mul(&u);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&pow.scale(&super::rational::rat(sign, k)));
            k += 1;
        }
        Ok(acc)
    }

    pub fn truncate_v(&self, t: i64) -> Self {
        let mut out = self.clone();
        out.v_trunc = out.v_trunc.min(t);
        out.normalize();
        out
    }

    /// Applies a q-truncation to every coefficient.
    pub fn truncate_q(&self, t: i64) -> Self {
        let mut out = FormalLaurentSeries {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c.truncate(t)).collect(),
            v_trunc: self.v_trunc,
        };
        out.normalize();
        out
    }

    pub fn map_coeffs<S: CoefficientRing>(
        &self,
        f: impl Fn(&QSeries<R>) -> QSeries<S>,
    ) -> FormalLaurentSeries<S> {
        FormalLaurentSeries::from_coeffs(
            self.lowest,
            self.coeffs.iter().map(|c| f(c)).collect(),
            self.v_trunc,
        )
    }

    /// Orders in [lo, hi) whose coefficient is not known-zero.
    pub fn nonzero_orders(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, _)| self.lowest + i as i64)
    }
}

fn factorial_recip(k: i64) -> Rational {
    let mut f = num_bigint::BigInt::from(1);
    for i in 2..=k {
        f *= i;
    }
    Rational::new(num_bigint::BigInt::from(1), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qseries::trunc_for_q_order;
    use crate::series::rational::rat;

    type Fls = FormalLaurentSeries<Rational>;

    fn qone(q: i64) -> QSeries<Rational> {
        QSeries::one(trunc_for_q_order(q))
    }

    #[test]
    fn exp_of_v_matches_exponential_coefficients() {
        // exp(v) truncated at order 3: 1 + v + v^2/2 + v^3/6
        let v = Fls::monomial(1, qone(2), 4);
        let e = v.exp().unwrap();
        assert_eq!(e.extract(0).unwrap().coeff_q(0), rat(1, 1));
        assert_eq!(e.extract(1).unwrap().coeff_q(0), rat(1, 1));
        assert_eq!(e.extract(2).unwrap().coeff_q(0), rat(1, 2));
        assert_eq!(e.extract(3).unwrap().coeff_q(0), rat(1, 6));
    }

    #[test]
    fn log_exp_round_trip() {
        let a = Fls::monomial(2, qone(3), 9).add(&Fls::monomial(3, qone(3).scale(&rat(1, 5)), 9));
        let round = a.exp().unwrap().log().unwrap();
        assert_eq!(round.extract(2).unwrap().coeff_q(0), rat(1, 1));
        assert_eq!(round.extract(3).unwrap().coeff_q(0), rat(1, 5));
        assert!(round.extract(4).unwrap().is_zero());
        assert!(round.extract(5).unwrap().is_zero());
    }

    #[test]
    fn laurent_inverse_with_pole() {
        // 1/(v^2 (1 + v)) = v^-2 - v^-1 + 1 - v + ...
        let f = Fls::monomial(2, qone(3), 10).add(&Fls::monomial(3, qone(3), 10));
        let inv = f.invert().unwrap();
        assert_eq!(inv.lowest_order(), -2);
        assert_eq!(inv.extract(-2).unwrap().coeff_q(0), rat(1, 1));
        assert_eq!(inv.extract(-1).unwrap().coeff_q(0), rat(-1, 1));
        assert_eq!(inv.extract(0).unwrap().coeff_q(0), rat(1, 1));
        let prod = f.mul(&inv);
        assert_eq!(prod.extract(0).unwrap().coeff_q(0), rat(1, 1));
        assert!(prod.extract(1).unwrap().is_zero());
    }

    #[test]
    fn extract_rejects_out_of_window() {
        let f = Fls::monomial(-2, qone(2), 6);
        assert!(f.extract(-3).is_err());
        assert!(f.extract(6).is_err());
        assert!(f.extract(3).unwrap().is_zero());
    }
}
