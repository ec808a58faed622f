//! Self-contained dense symmetric linear algebra: a cyclic Jacobi
//! eigensolver and an orthonormal-complement builder, sized for the small
//! matrices (n <= 32) this crate works with.

use crate::error::{Error, Result};
use crate::symtensor::SymMatrix;
use crate::util::{all_finite, normalized};

/// Stop when the off-diagonal Frobenius norm falls below this multiple of
/// the input norm.
const OFF_DIAG_TOL: f64 = 1e-14;
/// Jacobi sweep cap; convergence is quadratic, so hitting this means the
/// input was unusable.
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymEig {
    /// Nondecreasing.
    pub eigenvalues: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector paired with `eigenvalues[i]`.
    pub vectors: Vec<Vec<f64>>,
}

impl SymEig {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
pub fn sym_eig(m: &SymMatrix) -> Result<SymEig> {
    let n = m.dim();
    if !all_finite(m.values()) {
        return Err(Error::InvalidInput("non-finite matrix entry".into()));
    }
    let scale = m.frobenius_norm();
    let mut a: Vec<f64> = m.values().to_vec();
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = scale == 0.0;
    for _sweep in 0..MAX_SWEEPS {
        if off(&a) <= OFF_DIAG_TOL * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Classic symmetric Schur rotation choosing the smaller angle.
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off(&a) > OFF_DIAG_TOL * scale {
        return Err(Error::Numerical(format!(
            "Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let eigenvalues = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&j| (0..n).map(|i| v[i * n + j]).collect())
        .collect();
    Ok(SymEig {
        eigenvalues,
        vectors,
    })
}

/// An orthonormal basis of the hyperplane orthogonal to `x`, as n-1 column
/// vectors. Built from the Householder reflector sending x to a coordinate
/// axis: the reflector's remaining columns are exactly such a basis. The
/// reflection direction picks the sign that avoids cancellation, so the
/// result is stable for x near an axis.
pub fn orthonormal_complement(x: &[f64]) -> Result<Vec<Vec<f64>>> {
    if !all_finite(x) {
        return Err(Error::InvalidInput("non-finite vector entry".into()));
    }
    let u = normalized(x)
        .ok_or_else(|| Error::InvalidInput("cannot complement a zero vector".into()))?;
    let n = u.len();
    if n == 1 {
        return Ok(Vec::new());
    }
    let sign = if u[0] >= 0.0 { 1.0 } else { -1.0 };
    let mut w = u;
    w[0] += sign;
    let wtw = crate::util::dot(&w, &w);
    // Column j of (I - 2 w w' / w'w) for j = 1..n.
    let cols = (1..n)
        .map(|j| {
            let f = 2.0 * w[j] / wtw;
            (0..n)
                .map(|i| (if i == j { 1.0 } else { 0.0 }) - f * w[i])
                .collect()
        })
        .collect();
    Ok(cols)
}
