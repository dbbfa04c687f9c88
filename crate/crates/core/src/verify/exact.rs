//! Exact verification of the exponential-to-closed-form identity behind the
//! genus expansion, and of the modular-form coefficients it produces.
//!
//! In hatted normalization the identity reads
//!
//!   exp(−2 Σ_{n≥1} v̂^{2n}/(2n)!·∂_w^{2n−2}P̂) · exp(Σ_{n≥2} v̂^{2n}/n·Ĝ_{2n})
//!     = 1 − P̂·v̂² + Σ_{n≥2} (2n−1)·Ĝ_{2n}·v̂^{2n}.
//!
//! The 1/w^{2n} singular parts of ∂^{2n−2}P̂ resum to log(1 − v̂²/w²), so the
//! left side is computed as (1 − v̂²/w²)·exp(regular parts); everything is a
//! Laurent series in v̂ over q-series with w-Laurent coefficients, and the
//! comparison is coefficient-exact on a window where every input is fully
//! resolved.

use num_bigint::BigInt;

use crate::series::{
    CoefficientRing, FormalLaurentSeries, LaurentPoly, QSeries, Rational, trunc_for_q_order,
};
use crate::special::arith::factorial;
use crate::special::eisenstein::EisensteinCache;
use crate::special::weierstrass::{p_hat_wseries, WLaurent};

use super::report::VerificationReport;

type WSeries = QSeries<WLaurent>;
type WFls = FormalLaurentSeries<WLaurent>;

/// Width of the w-window the comparison runs on. Everything with
/// |w-exponent| ≤ this is exact for the chosen internal cap.
const W_WINDOW: i64 = 6;

struct IdentityPieces {
    /// exp of all regular exponent data: Π of both exponentials with the
    /// singular parts removed (they live in the explicit 1 − v̂²/w² factor).
    exp_regular: WFls,
    p_hat_full: WSeries,
    w_window: i64,
}

fn build_pieces(cache: &EisensteinCache, q_order: i64, v_order: i64) -> IdentityPieces {
    assert!(v_order >= 4 && v_order % 2 == 0, "need even v_order >= 4");
    let w_cap = v_order + W_WINDOW;
    let p_hat = p_hat_wseries(cache, q_order, w_cap);
    let v_trunc = v_order + 1;
    let mut exponent = WFls::zero(v_trunc);
    for n in 1..=v_order / 2 {
        // −2/(2n)! · (regular part of ∂^{2n−2} P̂) at v̂^{2n}.
        let reg = p_hat.derivative(2 * n as u32 - 2).to_qmajor_regular();
        let scale = Rational::new(BigInt::from(-2), factorial(2 * n as u32));
        let mut slot = reg.scale(&scale);
        if n >= 2 {
            // + Ĝ_{2n}/n from the second exponential.
            let g = cache
                .g_hat(n as u32, q_order)
                .scale(&crate::series::rat(1, n))
                .map_coeffs(|c| LaurentPoly::constant(c.clone()));
            slot = slot.add(&g);
        }
        exponent = exponent.add(&WFls::monomial(2 * n, slot, v_trunc));
    }
    let exp_regular = exponent.exp().expect("exponent has positive valuation");
    IdentityPieces {
        exp_regular,
        p_hat_full: p_hat.to_qmajor(),
        w_window: w_cap - v_order,
    }
}

fn one_series(q_order: i64) -> WSeries {
    QSeries::one(trunc_for_q_order(q_order))
}

fn w_pole_series(q_order: i64) -> WSeries {
    QSeries::constant(
        LaurentPoly::monomial(-2, <Rational as CoefficientRing>::one()),
        trunc_for_q_order(q_order),
    )
}

/// Collects nonzero coefficients of `diff` inside the sound
/// (v̂, w, q) window as mismatch strings.
fn collect_mismatches(diff: &WFls, orders: impl Iterator<Item = i64>, w_window: i64) -> Vec<String> {
    let mut out = Vec::new();
    for order in orders {
        let coeff = match diff.extract(order) {
            Ok(c) => c,
            Err(_) => continue,
        };
        for (q_e, wpoly) in coeff.iter_terms() {
            for (w_e, c) in wpoly.terms() {
                if w_e < -2 || w_e > w_window || c.is_zero() {
                    continue;
                }
                out.push(format!(
                    "v^{order} w^{w_e} q^{q_e}/24: {}",
                    crate::series::rational_string(c)
                ));
            }
        }
    }
    out
}

/// Exact check of the identity above through v̂^{v_order}, q^{q_order},
/// w-exponents in [−2, W_WINDOW].
pub fn check_hi_identity(q_order: i64, v_order: i64) -> VerificationReport {
    let cache = EisensteinCache::new();
    let pieces = build_pieces(&cache, q_order, v_order);
    let v_trunc = v_order + 1;

    // (1 − v̂²/w²)·exp(regular)
    let prefactor = WFls::constant(one_series(q_order), v_trunc)
        .sub(&WFls::monomial(2, w_pole_series(q_order), v_trunc));
    let lhs = prefactor.mul(&pieces.exp_regular);

    // 1 − P̂·v̂² + Σ (2n−1)Ĝ_{2n}·v̂^{2n}
    let mut rhs = WFls::constant(one_series(q_order), v_trunc)
        .sub(&WFls::monomial(2, pieces.p_hat_full.clone(), v_trunc));
    for n in 2..=v_order / 2 {
        let g = cache
            .g_hat(n as u32, q_order)
            .scale(&crate::series::rat(2 * n - 1, 1))
            .map_coeffs(|c| LaurentPoly::constant(c.clone()));
        rhs = rhs.add(&WFls::monomial(2 * n, g, v_trunc));
    }

    let diff = lhs.sub(&rhs);
    let mismatches = collect_mismatches(&diff, 0..=v_order, pieces.w_window);
    VerificationReport::exact("hi-identity", mismatches)
        .with_param("q_order", q_order.to_string())
        .with_param("v_order", v_order.to_string())
        .with_param("w_window", pieces.w_window.to_string())
}

/// Extracts β̂_{2n} from (1/v̂² − 1/w²)·exp(regular) and checks that each is
/// z-independent (no w-dependence) and equal to (2n−1)·Ĝ_{2n}, for
/// 2 ≤ n ≤ n_max.
pub fn check_beta_recursion(q_order: i64, n_max: i64) -> VerificationReport {
    assert!(n_max >= 2);
    let cache = EisensteinCache::new();
    let v_order = 2 * n_max;
    let pieces = build_pieces(&cache, q_order, v_order);
    let v_trunc = v_order + 1;

    let prefactor = WFls::monomial(-2, one_series(q_order), v_trunc)
        .sub(&WFls::constant(w_pole_series(q_order), v_trunc));
    let product = prefactor.mul(&pieces.exp_regular);

    let mut mismatches = Vec::new();

    // Sanity anchors: v̂⁻² coefficient 1, v̂⁰ coefficient −P̂.
    let anchor = product
        .extract(-2)
        .unwrap()
        .sub(&one_series(q_order));
    let zeroth = product.extract(0).unwrap().add(&pieces.p_hat_full);
    let anchor_fls = WFls::monomial(-2, anchor, v_trunc).add(&WFls::constant(zeroth, v_trunc));
    mismatches.extend(collect_mismatches(&anchor_fls, [-2, 0].into_iter(), pieces.w_window));

    for n in 2..=n_max {
        let beta = product.extract(2 * n - 2).unwrap();
        let expected = cache
            .g_hat(n as u32, q_order)
            .scale(&crate::series::rat(2 * n - 1, 1));
        for (q_e, wpoly) in beta.iter_terms() {
            for (w_e, c) in wpoly.terms() {
                if c.is_zero() || w_e < -2 || w_e > pieces.w_window {
                    continue;
                }
                if w_e != 0 {
                    mismatches.push(format!(
                        "beta_{} has z-dependence: w^{w_e} q^{q_e}/24: {}",
                        2 * n,
                        crate::series::rational_string(c)
                    ));
                }
            }
        }
        let w0 = beta.map_coeffs(|p| p.coeff(0));
        let bound = w0.truncation().min(expected.truncation());
        if let Some((e, a, b)) = w0.first_mismatch(&expected, bound) {
            mismatches.push(format!(
                "beta_{} at q^{e}/24: {} vs (2n-1)G_hat = {}",
                2 * n,
                crate::series::rational_string(&a),
                crate::series::rational_string(&b)
            ));
        }
    }

    VerificationReport::exact("beta-recursion", mismatches)
        .with_param("q_order", q_order.to_string())
        .with_param("n_max", n_max.to_string())
        .with_note("beta_{2n} = (2n-1)*G_hat_{2n} for 2 <= n <= n_max, with no w-dependence")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::CheckStatus;

    #[test]
    fn hi_identity_small_window() {
        let report = check_hi_identity(4, 6);
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.deviation);
    }

    #[test]
    fn beta_recursion_small_window() {
        let report = check_beta_recursion(4, 3);
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.deviation);
    }

    #[test]
    fn tampered_eisenstein_is_caught() {
        // The same construction with Ĝ₄ replaced by Ĝ₄ + q must mismatch:
        // the check is sensitive to every coefficient it claims to verify.
        let cache = EisensteinCache::new();
        let pieces = build_pieces(&cache, 3, 4);
        let v_trunc = 5;
        let prefactor = WFls::constant(one_series(3), v_trunc)
            .sub(&WFls::monomial(2, w_pole_series(3), v_trunc));
        let lhs = prefactor.mul(&pieces.exp_regular);
        let mut rhs = WFls::constant(one_series(3), v_trunc)
            .sub(&WFls::monomial(2, pieces.p_hat_full.clone(), v_trunc));
        let tampered = cache
            .g_hat(2, 3)
            .scale(&crate::series::rat(3, 1))
            .add(&QSeries::from_integer_terms(
                [(1, <Rational as CoefficientRing>::one())],
                trunc_for_q_order(3),
            ))
            .map_coeffs(|c| LaurentPoly::constant(c.clone()));
        rhs = rhs.add(&WFls::monomial(4, tampered, v_trunc));
        let diff = lhs.sub(&rhs);
        let mismatches = collect_mismatches(&diff, 0..=4, pieces.w_window);
        assert!(!mismatches.is_empty());
    }
}
