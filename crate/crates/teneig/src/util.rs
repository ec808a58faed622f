//! Small shared vector helpers.

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn all_finite(a: &[f64]) -> bool {
    a.iter().all(|v| v.is_finite())
}

/// x/|x|, or None when the norm underflows to an unusable scale.
pub(crate) fn normalized(a: &[f64]) -> Option<Vec<f64>> {
    let n = norm(a);
    if n.is_finite() && n > 1e-300 {
        Some(a.iter().map(|v| v / n).collect())
    } else {
        None
    }
}
