//! Small shared vector helpers. Plain sequential summation throughout — the
//! conservation tests measure exactly this arithmetic, so no compensated
//! variants.

use crate::error::{Error, Result};

/// Sum of all entries (the σ functional).
pub fn sum(v: &[f64]) -> f64 {
    v.iter().sum()
}

/// L1 norm.
pub fn l1_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).sum()
}

/// L1 distance between two vectors of equal length.
pub fn l1_dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Scale `v` so its entries sum to 1; errors when the sum is too close to 0
/// for the division to mean anything.
pub fn normalize_sum_to_one(v: &mut [f64]) -> Result<()> {
    let total = sum(v);
    if !total.is_finite() || total.abs() < 1e-12 {
        return Err(Error::NormalizationFailed { sum: total });
    }
    for x in v.iter_mut() {
        *x /= total;
    }
    Ok(())
}
