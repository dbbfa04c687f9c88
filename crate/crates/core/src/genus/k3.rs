//! The K3 elliptic genus as a weak Jacobi form of weight 0 and index 1,
//! normalized to 24 at z = 0:
//!
//!   Z_{K3} = 8·Σ_{i∈{2,3,4}} (θ_i(τ, z)/θ_i(τ, 0))².
//!
//! θ₂, θ₃, θ₄ exist only to feed this formula and stay private.

use crate::series::{
    trunc_for_q_order, CoefficientRing, LaurentPoly, QSeries, Rational, YLaurent,
};

/// θ₂ = q^{1/8}(y^{1/2}+y^{−1/2})·Π(1−q^m)(1+yq^m)(1+y⁻¹q^m)
fn theta2(q_order: i64) -> QSeries<YLaurent> {
    let trunc = trunc_for_q_order(q_order);
    let prefactor = LaurentPoly::from_terms([
        (1, <Rational as CoefficientRing>::one()),
        (-1, <Rational as CoefficientRing>::one()),
    ]);
    let mut acc: QSeries<YLaurent> = QSeries::monomial(3, prefactor, trunc);
    let y: YLaurent = LaurentPoly::monomial(2, <Rational as CoefficientRing>::one());
    let y_inv: YLaurent = LaurentPoly::monomial(-2, <Rational as CoefficientRing>::one());
    for m in 1..=q_order + 1 {
        acc = acc.sub(&acc.mul_monomial(24 * m, &YLaurent::one()));
        acc = acc.add(&acc.mul_monomial(24 * m, &y));
        acc = acc.add(&acc.mul_monomial(24 * m, &y_inv));
    }
    acc
}

/// θ₃/θ₄ = Π(1−q^m)(1±yq^{m−1/2})(1±y⁻¹q^{m−1/2}) with sign +1 for θ₃.
fn theta34(q_order: i64, plus: bool) -> QSeries<YLaurent> {
    let trunc = trunc_for_q_order(q_order);
    let sign = if plus {
        <Rational as CoefficientRing>::one()
    } else {
        <Rational as CoefficientRing>::one().neg()
    };
    let y: YLaurent = LaurentPoly::monomial(2, sign.clone());
    let y_inv: YLaurent = LaurentPoly::monomial(-2, sign);
    let mut acc: QSeries<YLaurent> = QSeries::one(trunc);
    for m in 1..=q_order + 1 {
        acc = acc.sub(&acc.mul_monomial(24 * m, &YLaurent::one()));
        acc = acc.add(&acc.mul_monomial(24 * m - 12, &y));
        acc = acc.add(&acc.mul_monomial(24 * m - 12, &y_inv));
    }
    acc
}

fn quotient_squared(theta: QSeries<YLaurent>) -> QSeries<YLaurent> {
    // θ_i(τ, 0) is the y ↦ 1 specialization; exact, leading term a unit.
    let at_zero = theta.map_coeffs(|p| p.eval_at_one());
    let inv = at_zero
        .invert()
        .expect("theta constant has unit leading coefficient")
        .map_coeffs(|c| LaurentPoly::constant(c.clone()));
    let q = theta.mul(&inv);
    q.mul(&q)
}

/// The K3 elliptic genus through q^{q_order}.
pub fn k3_elliptic_genus(q_order: i64) -> QSeries<YLaurent> {
    let sum = quotient_squared(theta2(q_order))
        .add(&quotient_squared(theta34(q_order, true)))
        .add(&quotient_squared(theta34(q_order, false)));
    let genus = sum.scale(&crate::series::rat(8, 1));
    // Half y-powers cancel in the squared quotients.
    debug_assert!(genus
        .iter_terms()
        .all(|(_, p)| p.exponents_divisible_by(2)));
    debug_assert!(genus.is_integer_grid());
    genus
}
