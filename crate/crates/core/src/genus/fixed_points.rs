//! Torus fixed points of the ALE space X_r and their tangent weights.

use super::GenusError;

/// Tangent weights of the r isolated fixed points of X_r in the (t₁, t₂)
/// basis: at p_j (j = 0..r−1) the two weights are
/// w₁ = (−(j+1), r−j−1) and w₂ = (j, j−r).
///
/// Their sum is (−1, −1) at every point: the weight of the holomorphic
/// volume form, which is what makes the circle t₁ = −t₂ act trivially on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    r: usize,
    weights: Vec<([i64; 2], [i64; 2])>,
}

impl FixedPointData {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn weights(&self) -> &[([i64; 2], [i64; 2])] {
        &self.weights
    }
}

pub fn fixed_point_data(r: usize) -> Result<FixedPointData, GenusError> {
    if r == 0 {
        return Err(GenusError::ZeroRank);
    }
    let weights = (0..r as i64)
        .map(|j| {
            let r = r as i64;
            ([-(j + 1), r - j - 1], [j, j - r])
        })
        .collect::<Vec<_>>();
    for (w1, w2) in &weights {
        debug_assert_eq!(w1[0] + w2[0], -1);
        debug_assert_eq!(w1[1] + w2[1], -1);
    }
    Ok(FixedPointData { r, weights })
}
