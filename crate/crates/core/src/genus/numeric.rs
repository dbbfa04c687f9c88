//! Numeric evaluation of the full two-parameter equivariant genus.
//!
//! Z_{X_r}(τ, z; t₁, t₂) = Σ_j Π_{i=1,2} θ₁(τ, z + ⟨w_i, t⟩) / θ₁(τ, ⟨w_i, t⟩)
//!
//! summed over the fixed points. The two-parameter genus is numeric-only;
//! exact symbolics live on the circle t₁ = −t₂ = t.

use num_complex::Complex64;

use super::fixed_points::FixedPointData;
use super::GenusError;
use crate::special::numeric::{lattice_distance, theta1_numeric, NumericError};

/// How close a denominator argument may come to the lattice before the
/// evaluation is flagged.
pub const NEAR_POLE_DISTANCE: f64 = 1e-8;

/// A denominator argument that strayed too close to a theta zero.
#[derive(Clone, Copy, Debug)]
pub struct NearPole {
    pub fixed_point: usize,
    pub weight: [i64; 2],
    pub distance: f64,
}

/// Genus value together with any near-pole flags. A flagged value is still
/// the honest sum of the truncated quotients; callers decide whether to
/// trust it.
#[derive(Clone, Debug)]
pub struct GenusValue {
    pub value: Complex64,
    pub near_poles: Vec<NearPole>,
}

impl GenusValue {
    pub fn is_clean(&self) -> bool {
        self.near_poles.is_empty()
    }
}

pub fn equivariant_genus_numeric(
    fp: &FixedPointData,
    tau: Complex64,
    z: Complex64,
    t1: Complex64,
    t2: Complex64,
    q_order: i64,
) -> Result<GenusValue, GenusError> {
    let mut value = Complex64::new(0.0, 0.0);
    let mut near_poles = Vec::new();
    for (j, (w1, w2)) in fp.weights().iter().enumerate() {
        let mut term = Complex64::new(1.0, 0.0);
        for w in [w1, w2] {
            let a = t1 * w[0] as f64 + t2 * w[1] as f64;
            let distance = lattice_distance(a, tau);
            if distance < NEAR_POLE_DISTANCE {
                near_poles.push(NearPole {
                    fixed_point: j,
                    weight: *w,
                    distance,
                });
            }
            let num = theta1(tau, z + a, q_order)?;
            let den = theta1(tau, a, q_order)?;
            term *= num / den;
        }
        value += term;
    }
    Ok(GenusValue { value, near_poles })
}

fn theta1(tau: Complex64, x: Complex64, q_order: i64) -> Result<Complex64, NumericError> {
    Ok(theta1_numeric(tau, x, q_order)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::fixed_points::fixed_point_data;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const Q_ORDER: i64 = 32;

    #[test]
    fn value_at_z_zero_is_rank() {
        let tau = c(0.11, 1.07);
        let t1 = c(0.23, 0.05);
        let t2 = c(-0.17, 0.09);
        for r in 1..=5 {
            let fp = fixed_point_data(r).unwrap();
            let g = equivariant_genus_numeric(&fp, tau, c(0.0, 0.0), t1, t2, Q_ORDER).unwrap();
            assert!(g.is_clean());
            assert!(
                (g.value - c(r as f64, 0.0)).norm() < 1e-12,
                "r = {r}: {}",
                g.value
            );
        }
    }

    #[test]
    fn swap_symmetry_in_t1_t2() {
        // Term j maps to term r−1−j under (t₁, t₂) ↦ (t₂, t₁); ten seeded
        // sample points.
        let fp = fixed_point_data(3).unwrap();
        let mut gen = crate::verify::SampleGenerator::new(17);
        for _ in 0..10 {
            let tau = gen.tau();
            let z = gen.z(tau);
            let t1 = gen.t(tau);
            let t2 = gen.t(tau);
            let a = equivariant_genus_numeric(&fp, tau, z, t1, t2, Q_ORDER).unwrap();
            let b = equivariant_genus_numeric(&fp, tau, z, t2, t1, Q_ORDER).unwrap();
            if !(a.is_clean() && b.is_clean()) {
                continue;
            }
            assert!((a.value - b.value).norm() / a.value.norm() < 1e-9);
        }
    }

    #[test]
    fn rank_two_matches_explicit_two_term_sum() {
        let fp = fixed_point_data(2).unwrap();
        let tau = c(0.31, 0.97);
        let z = c(0.21, -0.06);
        let t1 = c(0.14, 0.08);
        let t2 = c(-0.11, 0.13);
        let genus = equivariant_genus_numeric(&fp, tau, z, t1, t2, Q_ORDER)
            .unwrap()
            .value;
        let th = |x: Complex64| theta1_numeric(tau, x, Q_ORDER).unwrap().value;
        let explicit = th(z - t1 + t2) / th(-t1 + t2) * (th(z - 2.0 * t2) / th(-2.0 * t2))
            + th(z - 2.0 * t1) / th(-2.0 * t1) * (th(z + t1 - t2) / th(t1 - t2));
        assert!((genus - explicit).norm() / explicit.norm() < 1e-12);
    }

    #[test]
    fn near_pole_is_flagged() {
        let fp = fixed_point_data(2).unwrap();
        let tau = c(0.2, 1.1);
        // t₁ = t₂ makes the weight (−1, 1) argument vanish exactly.
        let t = c(0.21, 0.04);
        let g = equivariant_genus_numeric(&fp, tau, c(0.1, 0.1), t, t, Q_ORDER).unwrap();
        assert!(!g.is_clean());
        assert_eq!(g.near_poles[0].weight, [-1, 1]);
    }
}
