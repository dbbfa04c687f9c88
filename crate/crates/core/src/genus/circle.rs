//! Exact circle restriction of the equivariant genus.
//!
//! On the volume-preserving circle t₁ = −t₂ = t every fixed point
//! contributes the same quotient, so
//!
//!   Z_{X_r}(τ, z; t, −t) = r·θ₁(z+rt)·θ₁(z−rt) / (θ₁(rt)·θ₁(−rt)),
//!
//! a q-series whose coefficients are rational functions of y and u = σ^r
//! (σ = e^{2πit}). The numerator and denominator are first expanded over
//! Laurent polynomials in (y, u); the denominator is y-free, so the series
//! quotient only ever needs rational functions in u.

use crate::series::{
    LaurentPoly, QSeries, Rational, RationalFunction, YOverURational, YULaurent,
};
use crate::special::theta::{theta1_qexp, ThetaArgument};

use super::GenusError;

/// Numerator and denominator of the circle genus before division, over
/// Laurent polynomials in (y, u). `numerator`/`denominator` carry the
/// θ₁-pair products with the i-powers already folded, so their ratio times
/// r is the genus.
#[derive(Clone, Debug)]
pub struct CircleFactors {
    pub r: usize,
    pub numerator: QSeries<YULaurent>,
    pub denominator: QSeries<YULaurent>,
    pub q_order: i64,
}

pub fn circle_factors(r: usize, q_order: i64) -> Result<CircleFactors, GenusError> {
    if r == 0 {
        return Err(GenusError::ZeroRank);
    }
    let t_z_plus = theta1_qexp::<YULaurent>(&ThetaArgument::z_plus_circle(1), q_order)?;
    let t_z_minus = theta1_qexp::<YULaurent>(&ThetaArgument::z_plus_circle(-1), q_order)?;
    let t_plus = theta1_qexp::<YULaurent>(&ThetaArgument::circle(1), q_order)?;
    let t_minus = theta1_qexp::<YULaurent>(&ThetaArgument::circle(-1), q_order)?;
    let numerator = t_z_plus.mul(&t_z_minus).into_series();
    let denominator = t_plus.mul(&t_minus).into_series();
    debug_assert!(denominator
        .iter_terms()
        .all(|(_, p)| p.terms().all(|(y_exp, _)| y_exp == 0)));
    Ok(CircleFactors {
        r,
        numerator,
        denominator,
        q_order,
    })
}

impl CircleFactors {
    /// The denominator as a series over u alone (its y-degree is zero).
    pub fn denominator_u(&self) -> QSeries<LaurentPoly<Rational>> {
        self.denominator.map_coeffs(|p| p.coeff(0))
    }
}

/// The circle genus as an exact q-series, coefficients Laurent in y with
/// rational-function coefficients in u = σ^r.
#[derive(Clone, Debug)]
pub struct CircleGenus {
    pub r: usize,
    pub series: QSeries<YOverURational>,
    pub q_order: i64,
}

pub fn genus_circle_exact(r: usize, q_order: i64) -> Result<CircleGenus, GenusError> {
    let factors = circle_factors(r, q_order)?;
    let num = factors
        .numerator
        .map_coeffs(|p| p.map_coeffs(|u| RationalFunction::from_poly(u.clone())));
    let den = factors
        .denominator_u()
        .map_coeffs(|u| RationalFunction::from_poly(u.clone()));
    let den_inv = den.invert()?;
    let series = num
        .mul(&den_inv.map_coeffs(|rf| LaurentPoly::constant(rf.clone())))
        .scale(&crate::series::rat(r as i64, 1));
    // Theta-pair quotients land on integer powers of q and y.
    debug_assert!(series.is_integer_grid());
    debug_assert!(series
        .iter_terms()
        .all(|(_, p)| p.exponents_divisible_by(2)));
    Ok(CircleGenus {
        r,
        series,
        q_order,
    })
}

impl CircleGenus {
    /// Image under σ ↦ σ⁻¹ (equivalently t ↦ −t).
    pub fn substitute_sigma_inverse(&self) -> CircleGenus {
        CircleGenus {
            r: self.r,
            series: self
                .series
                .map_coeffs(|p| p.map_coeffs(|rf| rf.invert_variable())),
            q_order: self.q_order,
        }
    }

    /// Specializes y = 1 (z = 0), leaving rational functions of u.
    pub fn eval_y_one(&self) -> QSeries<RationalFunction> {
        self.series.map_coeffs(|p| p.eval_at_one())
    }

    /// Numeric value at (τ, z, t). `None` when t sits on a denominator zero.
    pub fn eval_numeric(
        &self,
        tau: num_complex::Complex64,
        z: num_complex::Complex64,
        t: num_complex::Complex64,
    ) -> Option<num_complex::Complex64> {
        use crate::special::numeric::cis;
        let q24 = cis(tau / 24.0);
        let mu_y = cis(z / 2.0);
        // u = e^{2πi·rt}; half-grid value e^{πi·rt}.
        let mu_u = cis(t * self.r as f64 / 2.0);
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (e, poly) in self.series.iter_terms() {
            let mut coeff = num_complex::Complex64::new(0.0, 0.0);
            for (y_key, rf) in poly.terms() {
                coeff += mu_y.powi(y_key as i32) * rf.eval_halfpow(mu_u)?;
            }
            acc += coeff * q24.powi(e as i32);
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, CoefficientRing};

    fn upoly(terms: &[(i64, i64)]) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(terms.iter().map(|&(e, n)| (e, rat(n, 1))))
    }

    #[test]
    fn q0_coefficient_closed_form() {
        // q⁰ of Z: r·y⁻¹(1−yu)(1−yu⁻¹) / ((1−u)(1−u⁻¹)), u ↔ half-grid key 2.
        for r in 1..=3usize {
            let genus = genus_circle_exact(r, 3).unwrap();
            let q0 = genus.series.coeff_q(0);
            let den = upoly(&[(0, 1), (2, -1)]).mul(&upoly(&[(0, 1), (-2, -1)]));
            let scale = rat(r as i64, 1);
            let expected: YOverURational = LaurentPoly::from_terms([
                (-2, RationalFunction::new(upoly(&[(0, 1)]), den.clone()).scale(&scale)),
                (
                    0,
                    RationalFunction::new(upoly(&[(2, -1), (-2, -1)]), den.clone()).scale(&scale),
                ),
                (2, RationalFunction::new(upoly(&[(0, 1)]), den).scale(&scale)),
            ]);
            assert_eq!(q0, expected, "r = {r}");
        }
    }

    #[test]
    fn sigma_inversion_invariance() {
        let genus = genus_circle_exact(2, 4).unwrap();
        let flipped = genus.substitute_sigma_inverse();
        assert!(genus
            .series
            .eq_through(&flipped.series, genus.series.truncation()));
    }

    #[test]
    fn value_at_y_one_is_rank() {
        for r in 1..=3usize {
            let genus = genus_circle_exact(r, 4).unwrap();
            let at_one = genus.eval_y_one();
            assert_eq!(at_one.coeff_q(0), RationalFunction::constant(rat(r as i64, 1)));
            for n in 1..=4 {
                assert!(at_one.coeff_q(n).is_zero(), "r = {r}, q^{n}");
            }
        }
    }
}
