//! Laurent expansion of the circle genus in v̂ = 2πi·t.
//!
//! Substituting u = e^{2πirt} = exp(r·v̂) into the (y, u)-polynomial
//! numerator and denominator turns each into a power series in v̂ with
//! q-series coefficients. The denominator acquires a double zero at v̂ = 0
//! (its two q⁰ factors are (1−e^{rv̂})(1−e^{−rv̂})), so the genus itself is
//! a Laurent series of lowest order −2, even in v̂, with Laurent-polynomial
//! y-coefficients:
//!
//!   Z_{X_r}(τ, z; t, −t) = Σ_{g≥0} v̂^{2g−2}·α̂_{2g}(τ, z).

use num_bigint::BigInt;

use crate::series::{
    FormalLaurentSeries, LaurentPoly, QSeries, Rational, YLaurent, YULaurent,
};

use super::circle::{circle_factors, CircleFactors};
use super::GenusError;

/// The expanded circle genus with its α̂ coefficients.
#[derive(Clone, Debug)]
pub struct GenusExpansion {
    pub r: usize,
    pub series: FormalLaurentSeries<YLaurent>,
    pub q_order: i64,
    pub v_order: i64,
}

impl GenusExpansion {
    /// α̂_{2g}, the coefficient of v̂^{2g−2}.
    pub fn alpha_hat(&self, g: usize) -> Result<QSeries<YLaurent>, GenusError> {
        let order = 2 * g as i64 - 2;
        if order > self.v_order {
            return Err(GenusError::InsufficientVOrder {
                requested_order: order,
                v_order: self.v_order,
            });
        }
        Ok(self.series.extract(order)?)
    }
}

/// Replaces u^{k/2} ↦ exp((k/2)·r·v̂) in every coefficient, producing a
/// v̂-power series with q-series coefficients over y.
fn substitute_u_exp(
    series: &QSeries<YULaurent>,
    r: usize,
    v_trunc: i64,
) -> FormalLaurentSeries<YLaurent> {
    let q_trunc = series.truncation();
    // terms[k] collects (q-exponent, y-poly) contributions to v̂^k.
    let mut terms: Vec<Vec<(i64, YLaurent)>> = vec![Vec::new(); v_trunc.max(0) as usize];
    for (q_exp, ypoly) in series.iter_terms() {
        for (y_key, upoly) in ypoly.terms() {
            for (u_key, c) in upoly.terms() {
                // u^{u_key/2} = exp(a·v̂) with a = u_key·r/2.
                let a = Rational::new(BigInt::from(u_key * r as i64), BigInt::from(2));
                let mut power = Rational::from_integer(BigInt::from(1));
                for (k, slot) in terms.iter_mut().enumerate() {
                    if k > 0 {
                        power = &power * &a / Rational::from_integer(BigInt::from(k as i64));
                    }
                    let coeff = c * &power;
                    if !num_traits::Zero::is_zero(&coeff) {
                        slot.push((q_exp, LaurentPoly::monomial(y_key, coeff)));
                    }
                }
            }
        }
    }
    let coeffs = terms
        .into_iter()
        .map(|slot| QSeries::from_grid_terms(slot, q_trunc))
        .collect();
    FormalLaurentSeries::from_coeffs(0, coeffs, v_trunc)
}

/// Expands the circle genus through v̂^{v_order} (even, ≥ 2) at q_order.
pub fn v_expand(r: usize, q_order: i64, v_order: i64) -> Result<GenusExpansion, GenusError> {
    if v_order < 2 || v_order % 2 != 0 {
        return Err(GenusError::BadVOrder { v_order });
    }
    let factors: CircleFactors = circle_factors(r, q_order)?;
    // Division by the order-2 zero of the denominator costs 4 orders of
    // v̂-knowledge; build with margin so the result is known through v_order.
    let build_order = v_order + 5;
    let numerator = substitute_u_exp(&factors.numerator, r, build_order);
    let denominator = substitute_u_exp(&factors.denominator, r, build_order);
    let inv = denominator.invert()?;
    let series = numerator
        .mul(&inv)
        .scale(&crate::series::rat(r as i64, 1))
        .truncate_v(v_order + 1);

    assert_eq!(series.lowest_order(), -2, "genus must start at v̂^{{-2}}");
    for order in series.nonzero_orders() {
        assert!(order % 2 == 0, "odd v̂-coefficient at order {order}");
    }
    for order in (series.lowest_order()..=v_order).step_by(2) {
        let coeff = series.extract(order)?;
        assert!(
            coeff.iter_terms().all(|(_, p)| p.exponents_divisible_by(2)),
            "fractional y-exponent in the v̂^{order} coefficient"
        );
    }
    Ok(GenusExpansion {
        r,
        series,
        q_order,
        v_order,
    })
}

/// (θ₁(τ,z)/η(τ)³)² as an exact series: −(θ₁/i)²/η⁶, Laurent-polynomial
/// y-coefficients, integer q-powers. This is r·α̂₀ and the prefactor of the
/// regularized genus.
pub fn theta_over_eta3_squared(q_order: i64) -> QSeries<YLaurent> {
    let t = crate::special::theta::theta1_qexp::<YLaurent>(
        &crate::special::theta::ThetaArgument::z(),
        q_order,
    )
    .expect("plain z argument is always representable");
    let t_sq = t.series.mul(&t.series);
    let eta = crate::special::theta::dedekind_eta_qexp(q_order);
    let eta6 = eta.mul(&eta).mul(&eta).mul(&eta).mul(&eta).mul(&eta);
    let eta6_inv = eta6
        .invert()
        .expect("eta starts with a unit")
        .map_coeffs(|c| LaurentPoly::constant(c.clone()));
    t_sq.mul(&eta6_inv).neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, trunc_for_q_order, CoefficientRing};
    use crate::special::eisenstein::EisensteinCache;

    #[test]
    fn alpha0_equals_theta_eta_quotient() {
        let q_order = 8;
        for r in 1..=3usize {
            let expansion = v_expand(r, q_order, 4).unwrap();
            let alpha0 = expansion.alpha_hat(0).unwrap();
            let oracle = theta_over_eta3_squared(q_order).scale(&rat(1, r as i64));
            let bound = trunc_for_q_order(q_order).min(alpha0.truncation());
            assert!(alpha0.eq_through(&oracle, bound), "r = {r}");
        }
    }

    #[test]
    fn odd_orders_vanish_identically() {
        for r in 1..=4usize {
            let expansion = v_expand(r, 3, 12).unwrap();
            for order in (-1..12).step_by(2) {
                assert!(
                    expansion.series.extract(order).unwrap().is_zero(),
                    "r = {r}, order {order}"
                );
            }
        }
    }

    #[test]
    fn alpha2_is_minus_r_squared_alpha0_p_hat() {
        // α̂₂/α̂₀ = −r²·P̂ coefficient-wise; multiply through by the y-form
        // denominator (1−y)² to stay polynomial.
        let q_order = 6;
        for r in 1..=2usize {
            let expansion = v_expand(r, q_order, 4).unwrap();
            let alpha0 = expansion.alpha_hat(0).unwrap();
            let alpha2 = expansion.alpha_hat(1).unwrap();
            let p_hat = crate::special::weierstrass::p_hat_yform(q_order);
            let p_den = p_hat.coeff_q(0).denominator().clone(); // (1−y)²
            // (1−y)²·P̂ is polynomial: the q⁰ pole clears, the rest rescales.
            let p_scaled = p_hat.map_coeffs(|rf| {
                if rf.denominator() == &LaurentPoly::one() {
                    rf.numerator().mul(&p_den)
                } else {
                    assert_eq!(rf.denominator(), &p_den);
                    rf.numerator().clone()
                }
            });
            let lhs = alpha2.map_coeffs(|p| p.mul(&p_den));
            let rhs = alpha0
                .mul(&p_scaled)
                .scale(&rat(-((r * r) as i64), 1));
            let bound = lhs.truncation().min(rhs.truncation());
            assert!(lhs.eq_through(&rhs, bound), "r = {r}");
        }
    }

    #[test]
    fn higher_alphas_are_eisenstein_multiples_of_alpha0() {
        // α̂_{2g}/α̂₀ = (2g−1)·r^{2g}·Ĝ_{2g} for g ≥ 2: y-independent.
        let q_order = 5;
        let cache = EisensteinCache::new();
        for r in 1..=2usize {
            let expansion = v_expand(r, q_order, 8).unwrap();
            let alpha0 = expansion.alpha_hat(0).unwrap();
            for g in 2..=4usize {
                let alpha = expansion.alpha_hat(g).unwrap();
                let factor = cache
                    .g_hat(g as u32, q_order)
                    .scale(&rat(
                        (2 * g as i64 - 1) * (r as i64).pow(2 * g as u32),
                        1,
                    ))
                    .map_coeffs(|c| LaurentPoly::constant(c.clone()));
                let rhs = alpha0.mul(&factor);
                let bound = alpha.truncation().min(rhs.truncation());
                assert!(alpha.eq_through(&rhs, bound), "r = {r}, g = {g}");
            }
        }
    }

    #[test]
    fn alpha_scaling_in_rank() {
        // α̂_{2g}(X_r) = r^{2g−1}·α̂_{2g}(X_1).
        let q_order = 4;
        let base = v_expand(1, q_order, 8).unwrap();
        for r in 2..=4usize {
            let expansion = v_expand(r, q_order, 8).unwrap();
            for g in 0..=4usize {
                let lhs = expansion.alpha_hat(g).unwrap();
                let pow = (r as i64).pow((2 * g as i64 - 1).unsigned_abs() as u32);
                let scale = if g == 0 { rat(1, pow) } else { rat(pow, 1) };
                let rhs = base.alpha_hat(g).unwrap().scale(&scale);
                let bound = lhs.truncation().min(rhs.truncation());
                assert!(lhs.eq_through(&rhs, bound), "r = {r}, g = {g}");
            }
        }
    }

    #[test]
    fn rejects_bad_v_order() {
        assert!(matches!(v_expand(1, 2, 3), Err(GenusError::BadVOrder { .. })));
        assert!(matches!(
            v_expand(1, 2, 4).unwrap().alpha_hat(6),
            Err(GenusError::InsufficientVOrder { .. })
        ));
    }
}
