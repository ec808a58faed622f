//! Dense symmetric tensors, the three tensor-vector products, and the
//! special tensors the eigenpair problems are built from.
//!
//! Storage is full dense: an order-m, dimension-n tensor keeps all n^m
//! entries in row-major order. At the sizes this crate targets (n <= 32,
//! m <= 8, and in practice n^m in the low thousands) packed symmetric
//! storage would buy nothing but index bookkeeping.

use crate::error::{Error, Result};
use crate::util::{all_finite, dot, norm};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Largest supported tensor order.
pub const MAX_ORDER: usize = 8;
/// Largest supported dimension.
pub const MAX_DIM: usize = 32;
/// Hard cap on dense storage (entries), guarding n^m blowup.
const MAX_LEN: usize = 1 << 24;

/// Largest deviation from exact permutation symmetry that constructors
/// average away silently. Anything bigger demands an explicit
/// [`SymTensor::symmetrize`] call, so genuinely asymmetric data cannot slip
/// through as round-off.
pub const SYMMETRY_TOL: f64 = 1e-12;

fn checked_len(order: usize, dim: usize) -> Result<usize> {
    if !(2..=MAX_ORDER).contains(&order) {
        return Err(Error::ShapeMismatch(format!(
            "order {order} outside supported range 2..={MAX_ORDER}"
        )));
    }
    if !(1..=MAX_DIM).contains(&dim) {
        return Err(Error::ShapeMismatch(format!(
            "dimension {dim} outside supported range 1..={MAX_DIM}"
        )));
    }
    let len = dim.checked_pow(order as u32).filter(|&l| l <= MAX_LEN);
    len.ok_or_else(|| {
        Error::ShapeMismatch(format!("dense storage {dim}^{order} exceeds the size cap"))
    })
}

/// Symmetric n x n matrix, stored dense row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    values: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            values: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            m.values[i * dim + i] = 1.0;
        }
        m
    }

    /// Build from a dense row-major array. Near-symmetric input (entry pairs
    /// differing by at most [`SYMMETRY_TOL`]) is averaged silently; anything
    /// worse is rejected.
    pub fn from_values(dim: usize, values: Vec<f64>) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::ShapeMismatch(format!(
                "dimension {dim} outside supported range 1..={MAX_DIM}"
            )));
        }
        if values.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                values.len()
            )));
        }
        if !all_finite(&values) {
            return Err(Error::InvalidInput("non-finite matrix entry".into()));
        }
        let mut values = values;
        let mut dev: f64 = 0.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let a = values[i * dim + j];
                let b = values[j * dim + i];
                let mean = 0.5 * (a + b);
                dev = dev.max((a - mean).abs().max((b - mean).abs()));
                values[i * dim + j] = mean;
                values[j * dim + i] = mean;
            }
        }
        if dev > SYMMETRY_TOL {
            return Err(Error::InvalidInput(format!(
                "matrix asymmetry {dev:.3e} exceeds {SYMMETRY_TOL:.0e}"
            )));
        }
        Ok(SymMatrix { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Entry (i, j), 0-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.dim + j]
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim);
        self.values
            .chunks_exact(self.dim)
            .map(|row| dot(row, x))
            .collect()
    }

    /// x' M x.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        dot(x, &self.matvec(x))
    }

    pub fn frobenius_norm(&self) -> f64 {
        norm(&self.values)
    }

    pub(crate) fn scale(&mut self, c: f64) {
        for v in &mut self.values {
            *v *= c;
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &SymMatrix, c: f64) {
        debug_assert_eq!(self.dim, other.dim);
        for (v, o) in self.values.iter_mut().zip(&other.values) {
            *v += c * o;
        }
    }

    pub(crate) fn add_scaled_identity(&mut self, c: f64) {
        for i in 0..self.dim {
            self.values[i * self.dim + i] += c;
        }
    }

    /// Adds c * (a b' + b a'). Upper triangle is computed once and mirrored,
    /// keeping the stored matrix exactly symmetric.
    pub(crate) fn add_scaled_sym_outer(&mut self, c: f64, a: &[f64], b: &[f64]) {
        let n = self.dim;
        debug_assert_eq!(a.len(), n);
        debug_assert_eq!(b.len(), n);
        for i in 0..n {
            for j in i..n {
                let v = c * (a[i] * b[j] + b[i] * a[j]);
                self.values[i * n + j] += v;
                if j != i {
                    self.values[j * n + i] += v;
                }
            }
        }
    }

    /// Adds c * x x'.
    pub(crate) fn add_scaled_outer(&mut self, c: f64, x: &[f64]) {
        let n = self.dim;
        debug_assert_eq!(x.len(), n);
        for i in 0..n {
            for j in i..n {
                let v = c * x[i] * x[j];
                self.values[i * n + j] += v;
                if j != i {
                    self.values[j * n + i] += v;
                }
            }
        }
    }

    pub(crate) fn from_raw(dim: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), dim * dim);
        SymMatrix { dim, values }
    }
}

/// Dense order-m, dimension-n real symmetric tensor.
///
/// Entry (i1, ..., im) with 1-based indices lives at flat offset
/// sum((i_k - 1) * n^(m-k)); equivalently, the last index varies fastest.
/// Every constructor leaves each permutation orbit holding one identical
/// value, so stored tensors are exactly symmetric, not merely within
/// round-off.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTensor {
    order: usize,
    dim: usize,
    values: Vec<f64>,
}

/// Writes the 0-based index tuple of `offset` into `idx`.
fn decode(mut offset: usize, dim: usize, idx: &mut [usize]) {
    for slot in idx.iter_mut().rev() {
        *slot = offset % dim;
        offset /= dim;
    }
}

fn encode(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Replaces every entry by the mean of its permutation orbit, in place.
/// Returns the largest deviation any entry had from that mean.
fn average_orbits(order: usize, dim: usize, values: &mut [f64]) -> f64 {
    let len = values.len();
    let mut sum = vec![0.0f64; len];
    let mut count = vec![0u32; len];
    let mut idx = vec![0usize; order];
    let mut canon = vec![0usize; len];
    for off in 0..len {
        decode(off, dim, &mut idx);
        idx.sort_unstable();
        let c = encode(&idx, dim);
        canon[off] = c;
        sum[c] += values[off];
        count[c] += 1;
    }
    let mut dev: f64 = 0.0;
    for off in 0..len {
        let c = canon[off];
        let mean = sum[c] / count[c] as f64;
        dev = dev.max((values[off] - mean).abs());
        values[off] = mean;
    }
    dev
}

impl SymTensor {
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        let len = checked_len(order, dim)?;
        Ok(SymTensor {
            order,
            dim,
            values: vec![0.0; len],
        })
    }

    /// Build from a dense row-major array that is already symmetric up to
    /// round-off. Orbit deviations at most [`SYMMETRY_TOL`] are averaged
    /// silently; larger asymmetry is rejected so the caller must decide to
    /// [`SymTensor::symmetrize`] explicitly.
    pub fn from_values(order: usize, dim: usize, values: Vec<f64>) -> Result<Self> {
        let (tensor, dev) = Self::build(order, dim, values)?;
        if dev > SYMMETRY_TOL {
            return Err(Error::InvalidInput(format!(
                "input asymmetry {dev:.3e} exceeds {SYMMETRY_TOL:.0e}; \
                 call symmetrize to average an intentionally asymmetric array"
            )));
        }
        Ok(tensor)
    }

    /// Symmetrize an arbitrary dense array: every entry becomes the average
    /// of the input over all index permutations.
    pub fn symmetrize(order: usize, dim: usize, values: Vec<f64>) -> Result<Self> {
        let (tensor, _dev) = Self::build(order, dim, values)?;
        Ok(tensor)
    }

    fn build(order: usize, dim: usize, mut values: Vec<f64>) -> Result<(Self, f64)> {
        let len = checked_len(order, dim)?;
        if values.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "expected {len} entries for order {order}, dimension {dim}; got {}",
                values.len()
            )));
        }
        if !all_finite(&values) {
            return Err(Error::InvalidInput("non-finite tensor entry".into()));
        }
        let dev = average_orbits(order, dim, &mut values);
        Ok((SymTensor { order, dim, values }, dev))
    }

    /// Build from distinct-entry form: each `(indices, value)` names one
    /// permutation orbit by any representative (1-based indices, any order)
    /// and the value is placed at every permutation. Unlisted orbits are
    /// zero. Naming an orbit twice is an error.
    pub fn from_unique<'a, I>(order: usize, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [usize], f64)>,
    {
        let len = checked_len(order, dim)?;
        let mut orbit_value = vec![0.0f64; len];
        let mut seen = vec![false; len];
        for (pos, (idx, value)) in entries.into_iter().enumerate() {
            if idx.len() != order {
                return Err(Error::ShapeMismatch(format!(
                    "entry {pos}: {} indices for an order-{order} tensor",
                    idx.len()
                )));
            }
            if idx.iter().any(|&i| i < 1 || i > dim) {
                return Err(Error::InvalidInput(format!(
                    "entry {pos}: index out of range 1..={dim}"
                )));
            }
            if !value.is_finite() {
                return Err(Error::InvalidInput(format!("entry {pos}: non-finite value")));
            }
            let mut sorted: Vec<usize> = idx.iter().map(|&i| i - 1).collect();
            sorted.sort_unstable();
            let c = encode(&sorted, dim);
            if seen[c] {
                return Err(Error::InvalidInput(format!(
                    "entry {pos}: duplicate entry for indices {idx:?}"
                )));
            }
            seen[c] = true;
            orbit_value[c] = value;
        }
        // Fill every orbit from its canonical slot.
        let mut values = vec![0.0f64; len];
        let mut idx = vec![0usize; order];
        for (off, v) in values.iter_mut().enumerate() {
            decode(off, dim, &mut idx);
            idx.sort_unstable();
            *v = orbit_value[encode(&idx, dim)];
        }
        Ok(SymTensor { order, dim, values })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Entry at 1-based indices, matching the text format and the printed
    /// data tables.
    pub fn get(&self, idx: &[usize]) -> f64 {
        assert_eq!(idx.len(), self.order, "index arity mismatch");
        assert!(
            idx.iter().all(|&i| i >= 1 && i <= self.dim),
            "index out of range"
        );
        let off = idx.iter().fold(0, |acc, &i| acc * self.dim + (i - 1));
        self.values[off]
    }

    fn check_vec(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "vector length {} does not match tensor dimension {}",
                x.len(),
                self.dim
            )));
        }
        if !all_finite(x) {
            return Err(Error::InvalidInput("non-finite vector entry".into()));
        }
        Ok(())
    }

    /// The matrix A x^{m-2}: all but the first two modes contracted with x.
    ///
    /// Contraction runs one trailing mode at a time over the full dense
    /// array, so [`SymTensor::ttv_m1`] (= result * x) and
    /// [`SymTensor::ttv_m`] (= x' * result * x) are consistent with it by
    /// construction.
    pub fn ttv_m2(&self, x: &[f64]) -> Result<SymMatrix> {
        self.check_vec(x)?;
        let n = self.dim;
        if self.order == 2 {
            return Ok(SymMatrix::from_raw(n, self.values.clone()));
        }
        let mut len = self.values.len() / n;
        let mut buf = vec![0.0f64; len];
        for (j, slot) in buf.iter_mut().enumerate() {
            *slot = dot(&self.values[j * n..(j + 1) * n], x);
        }
        while len > n * n {
            len /= n;
            // In-place trailing-mode contraction: slot j only reads from
            // j*n onward, which is never before the write position.
            for j in 0..len {
                let mut acc = 0.0;
                for (i, &xi) in x.iter().enumerate() {
                    acc += buf[j * n + i] * xi;
                }
                buf[j] = acc;
            }
            buf.truncate(len);
        }
        Ok(SymMatrix::from_raw(n, buf))
    }

    /// The vector A x^{m-1}: all but the first mode contracted with x.
    pub fn ttv_m1(&self, x: &[f64]) -> Result<Vec<f64>> {
        Ok(self.ttv_m2(x)?.matvec(x))
    }

    /// The scalar A x^m: every mode contracted with x.
    pub fn ttv_m(&self, x: &[f64]) -> Result<f64> {
        Ok(dot(x, &self.ttv_m1(x)?))
    }
}

/// The identity tensor E: the symmetrization of the paired Kronecker-delta
/// product, the unique symmetric tensor with E x^{m-1} = |x|^{m-2} x.
/// Defined for even order only.
pub fn identity_tensor(order: usize, dim: usize) -> Result<SymTensor> {
    if !order.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "identity tensor requires even order, got {order}"
        )));
    }
    let len = checked_len(order, dim)?;
    let mut raw = vec![0.0f64; len];
    let mut idx = vec![0usize; order];
    for (off, slot) in raw.iter_mut().enumerate() {
        decode(off, dim, &mut idx);
        if idx.chunks_exact(2).all(|p| p[0] == p[1]) {
            *slot = 1.0;
        }
    }
    SymTensor::symmetrize(order, dim, raw)
}

/// The delta tensor: 1 where all indices are equal, 0 elsewhere, so that
/// delta x^{m-1} = x^{[m-1]} elementwise.
pub fn delta_tensor(order: usize, dim: usize) -> Result<SymTensor> {
    let len = checked_len(order, dim)?;
    let mut values = vec![0.0f64; len];
    let mut idx = vec![0usize; order];
    for (off, slot) in values.iter_mut().enumerate() {
        decode(off, dim, &mut idx);
        if idx.iter().all(|&i| i == idx[0]) {
            *slot = 1.0;
        }
    }
    Ok(SymTensor { order, dim, values })
}

/// The symmetrized outer product of a symmetric matrix with itself: the
/// order-4 symmetrization of d_{i1 i2} d_{i3 i4}. With D = I this is the
/// order-4 identity tensor.
pub fn sym_outer_matrix(d: &SymMatrix) -> Result<SymTensor> {
    let n = d.dim();
    let len = checked_len(4, n)?;
    let mut raw = vec![0.0f64; len];
    let mut idx = [0usize; 4];
    for (off, slot) in raw.iter_mut().enumerate() {
        decode(off, n, &mut idx);
        *slot = d.get(idx[0], idx[1]) * d.get(idx[2], idx[3]);
    }
    SymTensor::symmetrize(4, n, raw)
}

/// Multiplies every mode of `t` by the symmetric matrix `s`:
/// result_{i1...im} = sum over j1...jm of t_{j1...jm} s_{i1 j1} ... s_{im jm}.
pub fn ttm_all(t: &SymTensor, s: &SymMatrix) -> Result<SymTensor> {
    let n = t.dim();
    let m = t.order();
    if s.dim() != n {
        return Err(Error::ShapeMismatch(format!(
            "matrix dimension {} does not match tensor dimension {n}",
            s.dim()
        )));
    }
    let mut cur = t.values().to_vec();
    let len = cur.len();
    let mut tmp = vec![0.0f64; n];
    for mode in 0..m {
        let stride = n.pow((m - 1 - mode) as u32);
        for hi in 0..len / (stride * n) {
            for lo in 0..stride {
                let base = hi * stride * n + lo;
                for (i, slot) in tmp.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for j in 0..n {
                        acc += s.get(i, j) * cur[base + j * stride];
                    }
                    *slot = acc;
                }
                for (i, &v) in tmp.iter().enumerate() {
                    cur[base + i * stride] = v;
                }
            }
        }
    }
    // Mathematically symmetric; the near-symmetric gate averages round-off
    // and would catch an asymmetric-result bug.
    SymTensor::from_values(m, n, cur)
}

/// A randomly generated positive definite symmetric tensor together with
/// the matrix it was built from.
#[derive(Clone, Debug)]
pub struct PdTensor {
    /// B: the identity tensor with every mode multiplied by `matrix`.
    pub tensor: SymTensor,
    /// S = U diag(spectrum) U' with random orthonormal U.
    pub matrix: SymMatrix,
    /// Eigenvalues of S, in generation order. Each (spectrum[i], u_i) is an
    /// eigenpair of `matrix`, and spectrum[i]^m is then an eigenvalue of
    /// `tensor` with the same eigenvector.
    pub spectrum: Vec<f64>,
}

/// Builds a random positive definite order-m tensor B = E x_all S, where
/// S = U diag(mu) U' has a random orthonormal basis U (orthonormalized
/// standard-normal columns, deterministic given the seed) and eigenvalues
/// mu drawn uniformly from [-1, -gamma] union [gamma, 1]. Since
/// B y^m = |S y|^m, every y on the unit sphere satisfies
/// B y^m >= min_i mu_i^m > 0.
pub fn random_pd_tensor(order: usize, dim: usize, gamma: f64, seed: u64) -> Result<PdTensor> {
    if !order.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "positive definite tensors require even order, got {order}"
        )));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::InvalidInput(format!(
            "gamma must lie in (0, 1), got {gamma}"
        )));
    }
    checked_len(order, dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols: Vec<Vec<f64>> = (0..dim)
        .map(|_| (0..dim).map(|_| rng.sample(StandardNormal)).collect())
        .collect();
    // Modified Gram-Schmidt with one re-orthogonalization pass. The
    // normalization makes each diagonal of the implicit R positive, fixing
    // the sign convention.
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(dim);
    for col in cols {
        let mut v = col;
        for _ in 0..2 {
            for u in &basis {
                let c = dot(u, &v);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= c * ui;
                }
            }
        }
        let nv = norm(&v);
        if nv < 1e-8 {
            return Err(Error::Numerical(
                "random matrix was numerically rank deficient".into(),
            ));
        }
        for vi in &mut v {
            *vi /= nv;
        }
        basis.push(v);
    }
    let spectrum: Vec<f64> = (0..dim)
        .map(|_| {
            let mag = gamma + (1.0 - gamma) * rng.gen::<f64>();
            if rng.gen_bool(0.5) {
                -mag
            } else {
                mag
            }
        })
        .collect();
    let mut s = SymMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let v: f64 = (0..dim).map(|k| spectrum[k] * basis[k][i] * basis[k][j]).sum();
            s.values[i * dim + j] = v;
            s.values[j * dim + i] = v;
        }
    }
    let e = identity_tensor(order, dim)?;
    let tensor = ttm_all(&e, &s)?;
    Ok(PdTensor {
        tensor,
        matrix: s,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol, "{what}: {a} vs {b} (tol {tol})");
    }

    fn random_values(len: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()
    }

    fn random_unit(dim: usize, seed: u64) -> Vec<f64> {
        let v = random_values(dim, seed);
        let n = norm(&v);
        v.iter().map(|a| a / n).collect()
    }

    fn permutations(m: usize) -> Vec<Vec<usize>> {
        fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                prefix.push(v);
                go(prefix, rest, out);
                prefix.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut (0..m).collect(), &mut out);
        out
    }

    /// Averages `raw` over every index permutation of every entry, the slow
    /// direct way.
    fn brute_symmetrize(order: usize, dim: usize, raw: &[f64]) -> Vec<f64> {
        let perms = permutations(order);
        let mut out = vec![0.0f64; raw.len()];
        let mut idx = vec![0usize; order];
        let mut pidx = vec![0usize; order];
        for (off, slot) in out.iter_mut().enumerate() {
            decode(off, dim, &mut idx);
            let mut acc = 0.0;
            for p in &perms {
                for (k, &pk) in p.iter().enumerate() {
                    pidx[k] = idx[pk];
                }
                acc += raw[encode(&pidx, dim)];
            }
            *slot = acc / perms.len() as f64;
        }
        out
    }

    #[test]
    fn symmetrize_matches_brute_force_permutation_average() {
        let raw = random_values(81, 7);
        let t = SymTensor::symmetrize(4, 3, raw.clone()).unwrap();
        let expect = brute_symmetrize(4, 3, &raw);
        for (a, b) in t.values().iter().zip(&expect) {
            assert_close(*a, *b, 1e-14, "symmetrized entry");
        }
    }

    #[test]
    fn symmetrize_is_idempotent_and_handles_matrix_case() {
        let t = SymTensor::symmetrize(2, 2, vec![0.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(t.values(), &[0.0, 0.5, 0.5, 0.0]);
        let again = SymTensor::symmetrize(2, 2, t.values().to_vec()).unwrap();
        assert_eq!(again.values(), t.values());
    }

    #[test]
    fn from_values_accepts_round_off_but_rejects_real_asymmetry() {
        let mut nearly = brute_symmetrize(3, 2, &random_values(8, 3));
        nearly[1] += 0.5e-12;
        let t = SymTensor::from_values(3, 2, nearly).unwrap();
        // orbit {(0,0,1)} holds offsets 1, 2, 4; all must agree exactly
        assert_eq!(t.values()[1], t.values()[2]);
        assert_eq!(t.values()[1], t.values()[4]);

        let err = SymTensor::from_values(2, 2, vec![0.0, 1.0, 0.0, 0.0]).unwrap_err();
        assert!(err.to_string().contains("symmetrize"), "{err}");
    }

    #[test]
    fn from_values_rejects_non_finite_and_bad_shapes() {
        assert!(SymTensor::from_values(2, 2, vec![0.0, f64::NAN, 0.0, 0.0]).is_err());
        assert!(SymTensor::from_values(2, 2, vec![0.0; 3]).is_err());
        assert!(SymTensor::zeros(1, 4).is_err());
        assert!(SymTensor::zeros(9, 2).is_err());
        assert!(SymTensor::zeros(4, 40).is_err());
        assert!(SymTensor::zeros(8, 10).is_err(), "10^8 entries over cap");
    }

    #[test]
    fn from_unique_fills_orbits_and_rejects_duplicates() {
        let entries: Vec<(&[usize], f64)> = vec![(&[2, 1, 1][..], 5.0)];
        let t = SymTensor::from_unique(3, 2, entries).unwrap();
        for idx in [[1, 1, 2], [1, 2, 1], [2, 1, 1]] {
            assert_eq!(t.get(&idx), 5.0);
        }
        assert_eq!(t.get(&[1, 1, 1]), 0.0);
        assert_eq!(t.get(&[2, 2, 1]), 0.0);

        let dup: Vec<(&[usize], f64)> = vec![(&[1, 2, 1][..], 1.0), (&[1, 1, 2][..], 2.0)];
        assert!(SymTensor::from_unique(3, 2, dup).is_err());
        let oob: Vec<(&[usize], f64)> = vec![(&[1, 3, 1][..], 1.0)];
        assert!(SymTensor::from_unique(3, 2, oob).is_err());
    }

    #[test]
    fn ttv_on_matrices_is_plain_linear_algebra() {
        let m = SymTensor::from_values(2, 3, vec![2.0, 1.0, 0.0, 1.0, 3.0, -1.0, 0.0, -1.0, 1.0])
            .unwrap();
        let x = [1.0, -2.0, 0.5];
        // quadratic form by hand
        let mx = [
            2.0 * 1.0 + 1.0 * -2.0 + 0.0 * 0.5,
            1.0 * 1.0 + 3.0 * -2.0 - 1.0 * 0.5,
            0.0 * 1.0 - 1.0 * -2.0 + 1.0 * 0.5,
        ];
        let expect = dot(&x, &mx);
        assert_close(m.ttv_m(&x).unwrap(), expect, 1e-14, "x'Mx");
        for (a, b) in m.ttv_m1(&x).unwrap().iter().zip(&mx) {
            assert_close(*a, *b, 1e-14, "Mx");
        }
        assert_eq!(m.ttv_m2(&x).unwrap().values(), m.values());
    }

    #[test]
    fn ttv_dimension_mismatch_is_an_error() {
        let t = SymTensor::zeros(4, 3).unwrap();
        assert!(t.ttv_m(&[1.0, 2.0]).is_err());
        assert!(t.ttv_m1(&[1.0; 4]).is_err());
        assert!(t.ttv_m2(&[f64::INFINITY, 0.0, 0.0]).is_err());
    }

    #[test]
    fn contraction_chain_matches_direct_dense_sum() {
        // independent oracle: one loop over every index tuple
        for (order, dim, seed) in [(4usize, 3usize, 11u64), (6, 4, 12), (3, 3, 13), (5, 2, 14)] {
            let t = SymTensor::symmetrize(order, dim, random_values(dim.pow(order as u32), seed))
                .unwrap();
            let x = random_values(dim, seed + 100);
            let mut direct = 0.0;
            let mut idx = vec![0usize; order];
            for (off, v) in t.values().iter().enumerate() {
                decode(off, dim, &mut idx);
                direct += v * idx.iter().map(|&i| x[i]).product::<f64>();
            }
            let m2 = t.ttv_m2(&x).unwrap();
            let m1 = t.ttv_m1(&x).unwrap();
            let m0 = t.ttv_m(&x).unwrap();
            assert_close(m0, direct, 1e-12 * (1.0 + direct.abs()), "ttv_m vs dense sum");
            assert_close(m0, dot(&x, &m1), 1e-12, "x' ttv_m1");
            assert_close(m0, dot(&x, &m2.matvec(&x)), 1e-12, "x' ttv_m2 x");
        }
    }

    #[test]
    fn identity_tensor_action_is_the_scaled_identity_map() {
        let e = identity_tensor(4, 3).unwrap();
        assert_eq!(e.get(&[1, 1, 1, 1]), 1.0);
        assert_close(e.get(&[1, 1, 2, 2]), 1.0 / 3.0, 1e-15, "E_1122");
        let x = random_unit(3, 21);
        assert_close(e.ttv_m(&x).unwrap(), 1.0, 1e-12, "E x^4 on sphere");
        for (a, b) in e.ttv_m1(&x).unwrap().iter().zip(&x) {
            assert_close(*a, *b, 1e-12, "E x^3 = x on sphere");
        }

        let e6 = identity_tensor(6, 4).unwrap();
        let y = random_values(4, 22);
        let ny = norm(&y);
        let ym1 = e6.ttv_m1(&y).unwrap();
        for (a, b) in ym1.iter().zip(&y) {
            assert_close(*a, ny.powi(4) * b, 1e-12, "E y^5 = |y|^4 y");
        }

        assert_eq!(identity_tensor(2, 5).unwrap().values(), SymMatrix::identity(5).values());
        assert!(identity_tensor(3, 3).is_err());
    }

    #[test]
    fn delta_tensor_acts_by_elementwise_powers() {
        let d = delta_tensor(6, 4).unwrap();
        let x = [1.0, 2.0, 0.0, -1.0];
        let m1 = d.ttv_m1(&x).unwrap();
        assert_eq!(m1, vec![1.0, 32.0, 0.0, -1.0]);
        assert_close(d.ttv_m(&x).unwrap(), 66.0, 1e-12, "sum of sixth powers");
        assert_eq!(delta_tensor(2, 3).unwrap().values(), SymMatrix::identity(3).values());
    }

    #[test]
    fn sym_outer_matrix_matches_hand_expansion() {
        let d = SymMatrix::from_values(2, vec![2.0, 0.5, 0.5, 3.0]).unwrap();
        let b = sym_outer_matrix(&d).unwrap();
        // three pairings of {1,1,2,2}: (D11 D22 + 2 D12^2) / 3
        let expect = (2.0 * 3.0 + 2.0 * 0.25) / 3.0;
        assert_close(b.get(&[1, 1, 2, 2]), expect, 1e-14, "b_1122");
        assert_eq!(b.get(&[1, 1, 1, 1]), 4.0);
        assert_eq!(b.get(&[2, 2, 2, 2]), 9.0);

        let eye = sym_outer_matrix(&SymMatrix::identity(3)).unwrap();
        let e4 = identity_tensor(4, 3).unwrap();
        for (a, b) in eye.values().iter().zip(e4.values()) {
            assert_close(*a, *b, 1e-15, "D=I gives the identity tensor");
        }
    }

    #[test]
    fn ttm_all_congruence_properties() {
        let e = identity_tensor(4, 3).unwrap();
        let same = ttm_all(&e, &SymMatrix::identity(3)).unwrap();
        assert_eq!(same.values(), e.values());

        // m=2 reduces to S M S for symmetric S
        let mvals = vec![1.0, 2.0, 2.0, -1.0];
        let svals = vec![0.5, 1.0, 1.0, 2.0];
        let m = SymTensor::from_values(2, 2, mvals.clone()).unwrap();
        let s = SymMatrix::from_values(2, svals.clone()).unwrap();
        let out = ttm_all(&m, &s).unwrap();
        let mut expect = [0.0f64; 4];
        for i in 0..2 {
            for l in 0..2 {
                let mut acc = 0.0;
                for j in 0..2 {
                    for k in 0..2 {
                        acc += svals[i * 2 + j] * mvals[j * 2 + k] * svals[k * 2 + l];
                    }
                }
                expect[i * 2 + l] = acc;
            }
        }
        for (a, b) in out.values().iter().zip(&expect) {
            assert_close(*a, *b, 1e-13, "S M S");
        }

        // contraction identity: (T x_all S) x^m = T (S x)^m
        let t = SymTensor::symmetrize(4, 3, random_values(81, 31)).unwrap();
        let s3 = {
            let mut v = random_values(9, 32);
            for i in 0..3 {
                for j in 0..i {
                    v[i * 3 + j] = v[j * 3 + i];
                }
            }
            SymMatrix::from_values(3, v).unwrap()
        };
        let ts = ttm_all(&t, &s3).unwrap();
        let x = random_values(3, 33);
        let sx = s3.matvec(&x);
        assert_close(
            ts.ttv_m(&x).unwrap(),
            t.ttv_m(&sx).unwrap(),
            1e-12,
            "(T x_all S) x^m = T (Sx)^m",
        );

        assert!(ttm_all(&t, &SymMatrix::identity(4)).is_err());
    }

    #[test]
    fn random_pd_tensor_is_deterministic_and_in_range() {
        let a = random_pd_tensor(6, 4, 0.4, 99).unwrap();
        let b = random_pd_tensor(6, 4, 0.4, 99).unwrap();
        assert_eq!(a.tensor.values(), b.tensor.values());
        assert_eq!(a.spectrum, b.spectrum);
        let c = random_pd_tensor(6, 4, 0.4, 100).unwrap();
        assert_ne!(a.tensor.values(), c.tensor.values());
        for mu in &a.spectrum {
            assert!(mu.abs() >= 0.4 && mu.abs() <= 1.0, "spectrum entry {mu}");
        }
        assert!(random_pd_tensor(5, 4, 0.4, 1).is_err());
        assert!(random_pd_tensor(6, 4, 1.5, 1).is_err());
        assert!(random_pd_tensor(6, 4, 0.0, 1).is_err());
    }

    #[test]
    fn random_pd_tensor_matrix_has_the_declared_spectrum() {
        let pd = random_pd_tensor(4, 3, 0.2, 7).unwrap();
        // S v = mu v for each basis direction, verified through the action
        // of S on random vectors reconstructed from the spectrum
        let evs = crate::denselin::sym_eig(&pd.matrix).unwrap();
        let mut expect = pd.spectrum.clone();
        expect.sort_by(f64::total_cmp);
        for (a, b) in evs.eigenvalues.iter().zip(&expect) {
            assert_close(*a, *b, 1e-10, "spectrum of S");
        }
    }

    #[test]
    fn pd_tensor_form_is_bounded_below_on_the_sphere() {
        let pd = random_pd_tensor(6, 4, 0.3, 17).unwrap();
        let floor = pd
            .spectrum
            .iter()
            .map(|mu| mu.powi(6))
            .fold(f64::INFINITY, f64::min);
        assert!(floor > 0.0);
        for k in 0..200 {
            let y = random_unit(4, 1000 + k);
            let by = pd.tensor.ttv_m(&y).unwrap();
            assert!(
                by >= floor - 1e-10,
                "B y^6 = {by} below floor {floor} at sample {k}"
            );
        }
    }
}
