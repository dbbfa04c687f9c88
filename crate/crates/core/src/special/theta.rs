//! Exact q-expansions of the Jacobi theta function θ₁ and the Dedekind eta
//! function.
//!
//! θ₁(τ, A) = i·q^{1/8}·e^{−πiA}·Π_{k≥1} (1−q^k)(1−e^{2πiA}q^{k−1})(1−e^{−2πiA}q^k)
//!
//! for arguments A = ε·z + shift + mτ + n with ε ∈ {0, 1}. The unit i is
//! carried as an explicit power flag; the exact engine always works with
//! θ₁/i, and quotient-level results must reach an even total i-power before
//! they are released as plain series.

use super::super::series::error::SeriesError;
use super::super::series::laurent::LaurentPoly;
use super::super::series::qseries::{trunc_for_q_order, QSeries};
use super::super::series::rational::{CoefficientRing, Rational};
use super::super::series::{YLaurent, YULaurent};

/// Fugacity part of a theta argument.
///
/// On the circle t₁ = −t₂ = t all equivariant shifts are integer multiples
/// of rt, carried by u = e^{2πi·rt}; the general two-torus shift is kept for
/// the numeric backend, which needs no monomial embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FugacityShift {
    None,
    /// c·(rt): exponent c over u = e^{2πi rt}.
    CircleTimesR(i64),
    /// a·t₁ + b·t₂ (numeric backend only).
    TwoTorus(i64, i64),
}

/// Argument of θ₁: ε·z + fugacity shift + m·τ + n, with ε ∈ {−1, 0, 1}
/// (−1 only ever arises from [`ThetaArgument::negate`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaArgument {
    pub z_mult: i8,
    pub shift: FugacityShift,
    pub lattice: (i64, i64),
}

impl ThetaArgument {
    pub fn z() -> Self {
        ThetaArgument {
            z_mult: 1,
            shift: FugacityShift::None,
            lattice: (0, 0),
        }
    }

    /// z + c·(rt)
    pub fn z_plus_circle(c: i64) -> Self {
        ThetaArgument {
            z_mult: 1,
            shift: FugacityShift::CircleTimesR(c),
            lattice: (0, 0),
        }
    }

    /// c·(rt)
    pub fn circle(c: i64) -> Self {
        ThetaArgument {
            z_mult: 0,
            shift: FugacityShift::CircleTimesR(c),
            lattice: (0, 0),
        }
    }

    pub fn with_lattice(mut self, m: i64, n: i64) -> Self {
        self.lattice = (m, n);
        self
    }

    /// Negated argument −A.
    pub fn negate(&self) -> Self {
        let shift = match self.shift {
            FugacityShift::None => FugacityShift::None,
            FugacityShift::CircleTimesR(c) => FugacityShift::CircleTimesR(-c),
            FugacityShift::TwoTorus(a, b) => FugacityShift::TwoTorus(-a, -b),
        };
        ThetaArgument {
            z_mult: -self.z_mult,
            shift,
            lattice: (-self.lattice.0, -self.lattice.1),
        }
    }
}

/// Coefficient rings that can carry the fugacity monomials of a theta
/// argument: y on a half-unit grid, u on a half-unit grid.
pub trait FugacityRing: CoefficientRing {
    fn fugacity_monomial(y_half: i64, u_half: i64) -> Option<Self>;
}

impl FugacityRing for Rational {
    fn fugacity_monomial(y_half: i64, u_half: i64) -> Option<Self> {
        if y_half == 0 && u_half == 0 {
            Some(<Self as CoefficientRing>::one())
        } else {
            None
        }
    }
}

impl FugacityRing for YLaurent {
    fn fugacity_monomial(y_half: i64, u_half: i64) -> Option<Self> {
        if u_half == 0 {
            Some(LaurentPoly::monomial(
                y_half,
                <Rational as CoefficientRing>::one(),
            ))
        } else {
            None
        }
    }
}

impl FugacityRing for YULaurent {
    fn fugacity_monomial(y_half: i64, u_half: i64) -> Option<Self> {
        Some(LaurentPoly::monomial(
            y_half,
            LaurentPoly::monomial(u_half, <Rational as CoefficientRing>::one()),
        ))
    }
}

/// θ₁ expansion together with its power of the unit i.
///
/// The mathematical value is i^{i_power}·series. Negating the z-argument of
/// the genus flips the series, not the flag, so quotient-level combinations
/// always reach an even power; [`ThetaSeries::into_series`] asserts that.
#[derive(Clone, Debug)]
pub struct ThetaSeries<R> {
    pub i_power: i64,
    pub series: QSeries<R>,
}

impl<R: CoefficientRing> ThetaSeries<R> {
    pub fn mul(&self, rhs: &Self) -> Self {
        ThetaSeries {
            i_power: self.i_power + rhs.i_power,
            series: self.series.mul(&rhs.series),
        }
    }

    pub fn invert(&self) -> Result<Self, SeriesError> {
        Ok(ThetaSeries {
            i_power: -self.i_power,
            series: self.series.invert()?,
        })
    }

    /// Folds an even i-power into the series sign. Panics on an odd power:
    /// a public result with a stray factor of i is a bug upstream.
    pub fn into_series(self) -> QSeries<R> {
        assert!(
            self.i_power % 2 == 0,
            "odd i-power {} at a public surface",
            self.i_power
        );
        if self.i_power.rem_euclid(4) == 2 {
            self.series.neg()
        } else {
            self.series
        }
    }
}

/// Exact q-expansion of θ₁ at the given argument, as θ₁/i with `i_power` 1.
///
/// Rejected: two-torus shifts (exact symbolics are restricted to the
/// circle), and rings that cannot carry the requested monomials.
pub fn theta1_qexp<R: FugacityRing>(
    arg: &ThetaArgument,
    q_order: i64,
) -> Result<ThetaSeries<R>, SeriesError> {
    let eps = arg.z_mult as i64;
    let c = match arg.shift {
        FugacityShift::None => 0,
        FugacityShift::CircleTimesR(c) => c,
        FugacityShift::TwoTorus(a, b) => {
            return Err(SeriesError::UnrepresentableMonomial {
                y_half: a,
                u_half: b,
            })
        }
    };
    let (m, n) = arg.lattice;
    let trunc = trunc_for_q_order(q_order);

    let mono = |y_half: i64, u_half: i64| -> Result<R, SeriesError> {
        R::fugacity_monomial(y_half, u_half)
            .ok_or(SeriesError::UnrepresentableMonomial { y_half, u_half })
    };

    // Prefactor q^{1/8}·e^{−πiA} = (−1)^n · y^{−ε/2} u^{−c/2} q^{1/8 − m/2}.
    let mut prefactor = mono(-eps, -c)?;
    if n.rem_euclid(2) == 1 {
        prefactor = prefactor.neg();
    }
    let mut acc: QSeries<R> = QSeries::monomial(3 - 12 * m, prefactor, trunc);

    // e^{2πiA} = Ŷ·q^m with Ŷ = y^ε u^c.
    let y_pos = mono(2 * eps, 2 * c)?;
    let y_neg = mono(-2 * eps, -2 * c)?;

    let k_max = q_order + m.abs() + 1;
    for k in 1..=k_max {
        // (1 − q^k)
        acc = acc.sub(&acc.mul_monomial(24 * k, &R::one()));
        // (1 − Ŷ q^{k−1+m})
        acc = acc.sub(&acc.mul_monomial(24 * (k - 1 + m), &y_pos));
        // (1 − Ŷ⁻¹ q^{k−m})
        acc = acc.sub(&acc.mul_monomial(24 * (k - m), &y_neg));
    }
    Ok(ThetaSeries {
        i_power: 1,
        series: acc,
    })
}

/// η(τ) = q^{1/24}·Π_{k≥1}(1 − q^k) through q_order.
pub fn dedekind_eta_qexp(q_order: i64) -> QSeries<Rational> {
    let trunc = trunc_for_q_order(q_order);
    let mut acc: QSeries<Rational> =
        QSeries::monomial(1, <Rational as CoefficientRing>::one(), trunc);
    for k in 1..=q_order + 1 {
        acc = acc.sub(&acc.mul_monomial(24 * k, &<Rational as CoefficientRing>::one()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn ylaurent(terms: &[(i64, i64)]) -> YLaurent {
        LaurentPoly::from_terms(terms.iter().map(|&(e, n)| (e, rat(n, 1))))
    }

    #[test]
    fn theta_leading_behavior() {
        // θ₁/i = q^{1/8}(y^{-1/2} − y^{1/2}) − q^{9/8}(y^{-3/2} − y^{3/2}) + ...
        let t = theta1_qexp::<YLaurent>(&ThetaArgument::z(), 6).unwrap();
        assert_eq!(t.i_power, 1);
        assert_eq!(t.series.base_exponent(), 3);
        assert_eq!(t.series.coeff(3), ylaurent(&[(-1, 1), (1, -1)]));
        assert_eq!(t.series.coeff(3 + 24), ylaurent(&[(-3, -1), (3, 1)]));
    }

    #[test]
    fn theta_matches_sum_formula() {
        // Independent oracle: θ₁/i = Σ_{n≥0} (−1)^n q^{1/8 + n(n+1)/2}
        //                            (y^{-(2n+1)/2} − y^{(2n+1)/2}).
        let q_order = 12;
        let t = theta1_qexp::<YLaurent>(&ThetaArgument::z(), q_order).unwrap();
        let trunc = trunc_for_q_order(q_order);
        let mut oracle: QSeries<YLaurent> = QSeries::zero(trunc);
        let mut n = 0i64;
        while n * (n + 1) / 2 <= q_order {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let poly = ylaurent(&[(-(2 * n + 1), sign), (2 * n + 1, -sign)]);
            oracle = oracle.add(&QSeries::monomial(3 + 12 * n * (n + 1), poly, trunc));
            n += 1;
        }
        assert!(t.series.eq_through(&oracle, trunc));
    }

    #[test]
    fn negated_argument_flips_sign() {
        // θ₁(τ,−z) = −θ₁(τ,z), as exact series.
        let q_order = 8;
        let arg = ThetaArgument::z();
        let plus = theta1_qexp::<YLaurent>(&arg, q_order).unwrap();
        let minus = theta1_qexp::<YLaurent>(&arg.negate(), q_order).unwrap();
        assert!(minus
            .series
            .eq_through(&plus.series.neg(), trunc_for_q_order(q_order)));
    }

    #[test]
    fn z_shift_by_one_flips_sign() {
        let q_order = 6;
        let plain = theta1_qexp::<YLaurent>(&ThetaArgument::z(), q_order).unwrap();
        let shifted =
            theta1_qexp::<YLaurent>(&ThetaArgument::z().with_lattice(0, 1), q_order).unwrap();
        assert!(shifted
            .series
            .eq_through(&plain.series.neg(), trunc_for_q_order(q_order)));
    }

    #[test]
    fn circle_argument_lands_in_yu_ring() {
        let t = theta1_qexp::<YULaurent>(&ThetaArgument::z_plus_circle(1), 4).unwrap();
        // Leading coefficient (yu)^{-1/2}(1 − yu) = y^{-1/2}u^{-1/2} − y^{1/2}u^{1/2}.
        let lead = t.series.coeff(3);
        assert_eq!(lead.coeff(-1), LaurentPoly::monomial(-1, rat(1, 1)));
        assert_eq!(lead.coeff(1), LaurentPoly::monomial(1, rat(-1, 1)));
        // Two-torus shifts have no exact embedding.
        let arg = ThetaArgument {
            z_mult: 1,
            shift: FugacityShift::TwoTorus(1, 0),
            lattice: (0, 0),
        };
        assert!(theta1_qexp::<YLaurent>(&arg, 4).is_err());
    }

    #[test]
    fn eta_pentagonal_numbers() {
        let eta = dedekind_eta_qexp(12);
        assert_eq!(eta.base_exponent(), 1);
        let expect = [
            (0, 1),
            (1, -1),
            (2, -1),
            (5, 1),
            (7, 1),
            (12, -1),
        ];
        for n in 0..=12i64 {
            let want = expect
                .iter()
                .find(|&&(e, _)| e == n)
                .map(|&(_, c)| rat(c, 1))
                .unwrap_or_else(|| rat(0, 1));
            assert_eq!(eta.coeff(1 + 24 * n), want, "eta coefficient at q^{n}");
        }
    }

    #[test]
    fn eta_24th_power_structure() {
        // η²⁴ = q·Π(1−qᵐ)²⁴: integer q-powers, leading exponent exactly 1.
        let eta = dedekind_eta_qexp(4);
        let mut pow = QSeries::one(eta.truncation());
        for _ in 0..24 {
            pow = pow.mul(&eta);
        }
        assert_eq!(pow.base_exponent(), 24);
        assert!(pow.is_integer_grid());
        assert_eq!(pow.coeff_q(1), rat(1, 1));
        assert_eq!(pow.coeff_q(2), rat(-24, 1));
    }

    #[test]
    fn eta_cubed_leading_terms() {
        // η³ = q^{1/8}(1 − 3q + 5q³ − 7q⁶ + ...)
        let eta = dedekind_eta_qexp(8);
        let eta3 = eta.mul(&eta).mul(&eta);
        assert_eq!(eta3.base_exponent(), 3);
        assert_eq!(eta3.coeff(3), rat(1, 1));
        assert_eq!(eta3.coeff(3 + 24), rat(-3, 1));
        assert_eq!(eta3.coeff(3 + 48), rat(0, 1));
        assert_eq!(eta3.coeff(3 + 72), rat(5, 1));
        assert_eq!(eta3.coeff(3 + 144), rat(-7, 1));
    }
}
