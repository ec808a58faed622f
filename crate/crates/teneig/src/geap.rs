//! The adaptive shifted power iteration for generalized tensor eigenpairs.
//!
//! A generalized eigenpair of a symmetric tensor pair (A, B) is a scalar
//! lambda and nonzero vector x with A x^{m-1} = lambda B x^{m-1}. The
//! iteration here climbs (or descends) the ratio A x^m / B x^m on the unit
//! sphere, adding an adaptive multiple of the identity to keep each step
//! inside a locally convex (or concave) region so the eigenvalue estimate
//! moves monotonically. Converged pairs are classified by the eigenvalues of
//! the Hessian projected onto the tangent space of the sphere.

use std::fmt;
use std::time::Instant;

use crate::denselin::{orthonormal_complement, sym_eig};
use crate::error::{Error, Result};
use crate::symtensor::{delta_tensor, identity_tensor, sym_outer_matrix, SymMatrix, SymTensor};
use crate::util::{all_finite, dot, norm, normalized};

/// Default threshold on how definite the shifted Hessian must be.
pub const DEFAULT_TAU: f64 = 1e-6;
/// Default convergence tolerance on successive eigenvalue estimates.
pub const DEFAULT_LAMBDA_TOL: f64 = 1e-15;
/// Default iteration cap.
pub const DEFAULT_MAX_ITERS: usize = 500;
/// Default threshold below which a projected-Hessian eigenvalue counts as
/// numerically zero during classification.
pub const DEFAULT_TAU_CLASS: f64 = 1e-4;

/// A backward move in the eigenvalue estimate only counts as a monotonicity
/// violation beyond this multiple of max(1, |lambda|); smaller wiggles are
/// round-off.
const VIOLATION_SCALE: f64 = 1e-14;

/// Which notion of eigenpair the B side of the problem encodes.
#[derive(Clone, Debug)]
pub enum BKind {
    /// Unit-sphere eigenpairs: B is the identity tensor, whose action sends
    /// x to ||x||^{m-2} x. Odd tensor orders are permitted for this kind
    /// only (via the specialized iteration), since the identity tensor
    /// itself exists only at even order.
    Z,
    /// Elementwise-power eigenpairs: B is the diagonal delta tensor, so
    /// B x^{m-1} is the elementwise power x^{[m-1]}.
    H,
    /// Matrix-weighted eigenpairs, an order-4 notion: B is the symmetrized
    /// outer product of a symmetric positive definite matrix with itself.
    D(SymMatrix),
    /// A caller-supplied symmetric tensor; it must make B x^m positive
    /// wherever the iteration evaluates it (checked at evaluation time).
    Explicit(SymTensor),
}

/// Whether the iteration seeks local maxima or local minima of the ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Orientation {
    Maxima,
    Minima,
}

impl Orientation {
    /// The sign the orientation contributes to steps and shifts: +1 when
    /// seeking maxima, -1 when seeking minima.
    pub fn beta(self) -> f64 {
        match self {
            Orientation::Maxima => 1.0,
            Orientation::Minima => -1.0,
        }
    }

    pub fn from_beta(beta: i32) -> Result<Self> {
        match beta {
            1 => Ok(Orientation::Maxima),
            -1 => Ok(Orientation::Minima),
            other => Err(Error::InvalidInput(format!(
                "orientation must be 1 (maxima) or -1 (minima), got {other}"
            ))),
        }
    }
}

/// How the per-iteration shift is chosen.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ShiftMode {
    /// Recompute the shift each iteration from the Hessian spectrum, the
    /// smallest value that restores definiteness plus the tau margin.
    Adaptive,
    /// Use one constant shift for every iteration. Its sign must match the
    /// orientation (zero is allowed); large values slow convergence and
    /// small ones can lose it.
    Fixed(f64),
}

/// Tuning knobs for a single eigenpair iteration.
#[derive(Clone, Debug)]
pub struct GeapConfig {
    /// Definiteness margin for the shifted Hessian; must be positive.
    pub tau: f64,
    /// Stop once successive eigenvalue estimates differ by at most this;
    /// must be positive. The loop also stops when the estimates are equal
    /// bit for bit, which is how runs at large |lambda| terminate.
    pub lambda_tol: f64,
    /// Iteration cap; must be at least 1.
    pub max_iters: usize,
    pub shift: ShiftMode,
    /// Base seed consumed by the multi-start harness when drawing start
    /// vectors. A single iteration is deterministic and ignores it.
    pub seed: u64,
    /// Retain the iterate vector in every trace row, so the run can be
    /// audited after the fact.
    pub record_iterates: bool,
}

impl Default for GeapConfig {
    fn default() -> Self {
        GeapConfig {
            tau: DEFAULT_TAU,
            lambda_tol: DEFAULT_LAMBDA_TOL,
            max_iters: DEFAULT_MAX_ITERS,
            shift: ShiftMode::Adaptive,
            seed: 0,
            record_iterates: false,
        }
    }
}

impl GeapConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tau > 0.0 && self.tau.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "tau must be positive and finite, got {}",
                self.tau
            )));
        }
        if !(self.lambda_tol > 0.0 && self.lambda_tol.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "lambda_tol must be positive and finite, got {}",
                self.lambda_tol
            )));
        }
        if self.max_iters < 1 {
            return Err(Error::InvalidInput("max_iters must be at least 1".into()));
        }
        if let ShiftMode::Fixed(alpha) = self.shift {
            if !alpha.is_finite() {
                return Err(Error::InvalidInput("fixed shift must be finite".into()));
            }
        }
        Ok(())
    }
}

/// A tensor eigenproblem: the tensor A, the kind of B, and the orientation.
///
/// Construction materializes B as a dense symmetric tensor so the iteration
/// can form B products the same way it forms A products. The one exception
/// is the unit-sphere kind at odd order, where no B tensor exists; such
/// problems are served by [`zeap_iterate`] and by the closed-form branches
/// of [`classify`] and [`residual`].
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    a: SymTensor,
    b_kind: BKind,
    b: Option<SymTensor>,
    orientation: Orientation,
}

impl ProblemSpec {
    pub fn new(a: SymTensor, b_kind: BKind, orientation: Orientation) -> Result<Self> {
        let m = a.order();
        let n = a.dim();
        let b = match &b_kind {
            BKind::Z => {
                if m.is_multiple_of(2) {
                    Some(identity_tensor(m, n)?)
                } else {
                    None
                }
            }
            BKind::H => {
                if !m.is_multiple_of(2) {
                    return Err(Error::Unsupported(
                        "elementwise-power eigenpairs need an even tensor order".into(),
                    ));
                }
                Some(delta_tensor(m, n)?)
            }
            BKind::D(d) => {
                if m != 4 {
                    return Err(Error::Unsupported(format!(
                        "matrix-weighted eigenpairs are an order-4 notion, got order {m}"
                    )));
                }
                if d.dim() != n {
                    return Err(Error::ShapeMismatch(format!(
                        "weight matrix is {}x{} but the tensor dimension is {n}",
                        d.dim(),
                        d.dim()
                    )));
                }
                let spectrum = sym_eig(d)?;
                if spectrum.min() <= 0.0 {
                    return Err(Error::InvalidInput(format!(
                        "weight matrix must be positive definite; its smallest eigenvalue is {}",
                        spectrum.min()
                    )));
                }
                Some(sym_outer_matrix(d)?)
            }
            BKind::Explicit(t) => {
                if !m.is_multiple_of(2) {
                    return Err(Error::Unsupported(
                        "explicit-B eigenpairs need an even tensor order".into(),
                    ));
                }
                if t.order() != m || t.dim() != n {
                    return Err(Error::ShapeMismatch(format!(
                        "B has order {} and dimension {}, A has order {m} and dimension {n}",
                        t.order(),
                        t.dim()
                    )));
                }
                Some(t.clone())
            }
        };
        Ok(ProblemSpec {
            a,
            b_kind,
            b,
            orientation,
        })
    }

    pub fn a(&self) -> &SymTensor {
        &self.a
    }

    pub fn b_kind(&self) -> &BKind {
        &self.b_kind
    }

    /// The materialized B tensor; absent only for odd-order unit-sphere
    /// problems.
    pub fn b_tensor(&self) -> Option<&SymTensor> {
        self.b.as_ref()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn beta(&self) -> f64 {
        self.orientation.beta()
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// The same problem aimed the other way (or the same way); cheap enough
    /// to call per run since B is shared by clone.
    pub fn with_orientation(&self, orientation: Orientation) -> Self {
        let mut p = self.clone();
        p.orientation = orientation;
        p
    }
}

/// The character of a converged eigenpair as a critical point of the ratio
/// restricted to the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Classification {
    /// All projected-Hessian eigenvalues decisively negative.
    Maximum,
    /// All decisively positive.
    Minimum,
    /// Decisive eigenvalues of both signs.
    Saddle,
    /// At least one projected eigenvalue within the classification
    /// threshold of zero, so the second-order test is inconclusive.
    Degenerate,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::Maximum => "Maximum",
            Classification::Minimum => "Minimum",
            Classification::Saddle => "Saddle",
            Classification::Degenerate => "Degenerate",
        };
        f.write_str(s)
    }
}

/// One converged (or best-effort) eigenpair.
#[derive(Clone, Debug, serde::Serialize)]
pub struct EigenRecord {
    pub lambda: f64,
    /// Unit vector with canonical sign: its first component of largest
    /// magnitude is positive. At odd order, flipping the vector flips the
    /// eigenvalue, so `lambda` is always the value at this representative.
    pub x: Vec<f64>,
    /// ||A x^{m-1} - lambda B x^{m-1}||.
    pub residual: f64,
    pub classification: Classification,
    /// Eigenvalues of the tangent-space projected Hessian, ascending.
    pub projected_hessian_eigenvalues: Vec<f64>,
}

/// One row of an iteration history.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TraceStep {
    pub k: usize,
    pub lambda: f64,
    pub alpha: f64,
    /// The unit iterate, kept only when the config asks for it.
    pub x: Option<Vec<f64>>,
}

/// A step at which the eigenvalue estimate moved the wrong way by more than
/// round-off.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct Violation {
    /// Index of the iterate at which the backward value was observed.
    pub k: usize,
    /// Size of the backward move, always positive.
    pub magnitude: f64,
}

/// Everything observed during one run of the iteration.
#[derive(Clone, Debug, serde::Serialize)]
pub struct IterationTrace {
    pub steps: Vec<TraceStep>,
    pub monotonicity_violations: Vec<Violation>,
    pub converged: bool,
    /// Number of update steps taken (one less than the rows recorded).
    pub iterations: usize,
    pub wall_time: f64,
}

/// The six tensor-vector products one iteration needs, computed once and
/// reused by the eigenvalue estimate, the Hessian, and the step.
struct Products {
    a_xm2: SymMatrix,
    a_xm1: Vec<f64>,
    a_xm: f64,
    b_xm2: SymMatrix,
    b_xm1: Vec<f64>,
    b_xm: f64,
}

fn products(p: &ProblemSpec, x: &[f64]) -> Result<Products> {
    let b = p.b.as_ref().ok_or_else(|| {
        Error::Unsupported(
            "odd-order unit-sphere problems have no B tensor; use the specialized iteration"
                .into(),
        )
    })?;
    let a_xm2 = p.a.ttv_m2(x)?;
    let a_xm1 = a_xm2.matvec(x);
    let a_xm = dot(x, &a_xm1);
    let b_xm2 = b.ttv_m2(x)?;
    let b_xm1 = b_xm2.matvec(x);
    let b_xm = dot(x, &b_xm1);
    if b_xm <= 0.0 || b_xm.is_nan() {
        return Err(Error::IndefiniteForm { value: b_xm });
    }
    Ok(Products {
        a_xm2,
        a_xm1,
        a_xm,
        b_xm2,
        b_xm1,
        b_xm,
    })
}

fn check_vector(p: &ProblemSpec, x: &[f64]) -> Result<()> {
    if x.len() != p.dim() {
        return Err(Error::ShapeMismatch(format!(
            "vector has length {}, problem dimension is {}",
            x.len(),
            p.dim()
        )));
    }
    if !all_finite(x) {
        return Err(Error::InvalidInput("non-finite vector entry".into()));
    }
    Ok(())
}

/// The generalized Rayleigh ratio A x^m / B x^m. Invariant under rescaling
/// of x, so callers need not normalize.
pub fn lambda_of(p: &ProblemSpec, x: &[f64]) -> Result<f64> {
    check_vector(p, x)?;
    if norm(x) <= 0.0 {
        return Err(Error::InvalidInput("lambda is undefined at the zero vector".into()));
    }
    let a_xm = p.a.ttv_m(x)?;
    let b_xm = match (&p.b, &p.b_kind) {
        (Some(b), _) => b.ttv_m(x)?,
        (None, BKind::Z) => norm(x).powi(p.order() as i32),
        _ => unreachable!("only the unit-sphere kind may lack a B tensor"),
    };
    if b_xm <= 0.0 || b_xm.is_nan() {
        return Err(Error::IndefiniteForm { value: b_xm });
    }
    Ok(a_xm / b_xm)
}

/// The objective the iteration optimizes, extended off the sphere as
/// (A x^m / B x^m) * ||x||^m so it has a well-defined ambient gradient.
/// On the unit sphere it equals [`lambda_of`].
pub fn objective(p: &ProblemSpec, x: &[f64]) -> Result<f64> {
    let lam = lambda_of(p, x)?;
    Ok(lam * norm(x).powi(p.order() as i32))
}

/// Ambient gradient of [`objective`]. On the unit sphere this reduces to
///
/// ```text
/// (m / Bx^m) [ (Ax^m) x + Ax^{m-1} - (Ax^m / Bx^m) Bx^{m-1} ]
/// ```
///
/// and at an eigenpair it is m * lambda * x, radial as a constrained
/// stationarity condition demands.
pub fn gradient(p: &ProblemSpec, x: &[f64]) -> Result<Vec<f64>> {
    check_vector(p, x)?;
    let pr = products(p, x)?;
    let m = p.order() as f64;
    let lam = pr.a_xm / pr.b_xm;
    let nrm = norm(x);
    let nm = nrm.powi(p.order() as i32);
    let nm2 = nrm.powi(p.order() as i32 - 2);
    let c = m / pr.b_xm;
    Ok((0..x.len())
        .map(|i| c * (nm * (pr.a_xm1[i] - lam * pr.b_xm1[i]) + lam * pr.b_xm * nm2 * x[i]))
        .collect())
}

/// Assemble the objective's Hessian at a unit vector from precomputed
/// products. Writing s(a, b) for a b' + b a', the matrix is
///
/// ```text
///   m^2 Ax^m / (Bx^m)^3 * s(Bx^{m-1}, Bx^{m-1})
/// + m / Bx^m   * [ (m-1) Ax^{m-2} + Ax^m (I + (m-2) x x') + m s(Ax^{m-1}, x) ]
/// - m / (Bx^m)^2 * [ (m-1) Ax^m Bx^{m-2} + m s(Ax^{m-1}, Bx^{m-1}) + m Ax^m s(x, Bx^{m-1}) ]
/// ```
fn hessian_from_products(m: f64, x: &[f64], pr: &Products) -> SymMatrix {
    let mut h = SymMatrix::zeros(x.len());
    let b3 = pr.b_xm * pr.b_xm * pr.b_xm;
    h.add_scaled_sym_outer(m * m * pr.a_xm / b3, &pr.b_xm1, &pr.b_xm1);
    let f1 = m / pr.b_xm;
    h.add_scaled(&pr.a_xm2, f1 * (m - 1.0));
    h.add_scaled_identity(f1 * pr.a_xm);
    h.add_scaled_outer(f1 * pr.a_xm * (m - 2.0), x);
    h.add_scaled_sym_outer(f1 * m, &pr.a_xm1, x);
    let f2 = -m / (pr.b_xm * pr.b_xm);
    h.add_scaled(&pr.b_xm2, f2 * (m - 1.0) * pr.a_xm);
    h.add_scaled_sym_outer(f2 * m, &pr.a_xm1, &pr.b_xm1);
    h.add_scaled_sym_outer(f2 * m * pr.a_xm, x, &pr.b_xm1);
    h
}

/// Hessian of the objective at a unit vector. For the unit-sphere kind this
/// reduces to m (m-1) Ax^{m-2}.
pub fn hessian(p: &ProblemSpec, x: &[f64]) -> Result<SymMatrix> {
    check_vector(p, x)?;
    let pr = products(p, x)?;
    Ok(hessian_from_products(p.order() as f64, x, &pr))
}

fn shift_in_place(h: &mut SymMatrix, m: f64, alpha: f64, x: &[f64]) {
    h.add_scaled_identity(alpha * m);
    h.add_scaled_outer(alpha * m * (m - 2.0), x);
}

/// Hessian of the shifted objective: H(x) + alpha m I + alpha m (m-2) x x'.
pub fn shifted_hessian(p: &ProblemSpec, x: &[f64], alpha: f64) -> Result<SymMatrix> {
    let mut h = hessian(p, x)?;
    shift_in_place(&mut h, p.order() as f64, alpha, x);
    Ok(h)
}

/// The smallest-magnitude shift that makes the shifted Hessian definite in
/// the orientation's direction with margin tau:
///
/// ```text
/// alpha = beta * max{ 0, (tau - lambda_min(beta H)) / m }
/// ```
///
/// With this alpha, the smallest eigenvalue of beta times the shifted
/// Hessian is at least tau.
pub fn adaptive_alpha(
    h: &SymMatrix,
    m: usize,
    tau: f64,
    orientation: Orientation,
) -> Result<f64> {
    let beta = orientation.beta();
    let spectrum = sym_eig(h)?;
    let min_oriented = if beta > 0.0 {
        spectrum.min()
    } else {
        -spectrum.max()
    };
    Ok(beta * ((tau - min_oriented) / m as f64).max(0.0))
}

fn step_from_parts(
    beta: f64,
    x: &[f64],
    lambda: f64,
    alpha: f64,
    a_xm1: &[f64],
    b_xm1: &[f64],
    b_xm: f64,
) -> Result<Vec<f64>> {
    let xhat: Vec<f64> = (0..x.len())
        .map(|i| beta * (a_xm1[i] - lambda * b_xm1[i] + (alpha + lambda) * b_xm * x[i]))
        .collect();
    normalized(&xhat).ok_or_else(|| {
        Error::Breakdown(
            "the shifted update vanished; the iterate is a stationary point the shift cannot move"
                .into(),
        )
    })
}

/// One power-iteration update from a unit iterate:
///
/// ```text
/// x_next ∝ beta ( Ax^{m-1} - lambda Bx^{m-1} + (alpha + lambda) (Bx^m) x )
/// ```
///
/// The unnormalized update is a positive multiple of beta times the shifted
/// gradient, so for a definite shifted Hessian each step improves the
/// objective in the orientation's direction. Eigenpairs are fixed points up
/// to sign.
pub fn geap_step(p: &ProblemSpec, x: &[f64], lambda: f64, alpha: f64) -> Result<Vec<f64>> {
    check_vector(p, x)?;
    let pr = products(p, x)?;
    step_from_parts(p.beta(), x, lambda, alpha, &pr.a_xm1, &pr.b_xm1, pr.b_xm)
}

/// What one iteration evaluates at the current unit iterate.
struct KernelEval {
    lambda: f64,
    hessian: SymMatrix,
    a_xm1: Vec<f64>,
    /// Absent on the specialized unit-sphere route, whose step needs no B
    /// products.
    b_xm1: Option<Vec<f64>>,
    b_xm: f64,
}

/// The two iteration routes share one driver; this picks the formulas.
enum Kernel<'a> {
    /// The general route: six products per iteration and the full Hessian.
    General(&'a ProblemSpec),
    /// The unit-sphere specialization: A products only,
    /// lambda = Ax^m, H = m (m-1) Ax^{m-2}, step beta (Ax^{m-1} + alpha x).
    /// Valid at odd order too.
    UnitSphere {
        a: &'a SymTensor,
        orientation: Orientation,
    },
}

impl Kernel<'_> {
    fn beta(&self) -> f64 {
        match self {
            Kernel::General(p) => p.beta(),
            Kernel::UnitSphere { orientation, .. } => orientation.beta(),
        }
    }

    fn order(&self) -> usize {
        match self {
            Kernel::General(p) => p.order(),
            Kernel::UnitSphere { a, .. } => a.order(),
        }
    }

    fn eval(&self, x: &[f64]) -> Result<KernelEval> {
        match self {
            Kernel::General(p) => {
                let pr = products(p, x)?;
                let lambda = pr.a_xm / pr.b_xm;
                let hessian = hessian_from_products(p.order() as f64, x, &pr);
                Ok(KernelEval {
                    lambda,
                    hessian,
                    a_xm1: pr.a_xm1,
                    b_xm1: Some(pr.b_xm1),
                    b_xm: pr.b_xm,
                })
            }
            Kernel::UnitSphere { a, .. } => {
                let m = a.order() as f64;
                let mut a_xm2 = a.ttv_m2(x)?;
                let a_xm1 = a_xm2.matvec(x);
                let lambda = dot(x, &a_xm1);
                a_xm2.scale(m * (m - 1.0));
                Ok(KernelEval {
                    lambda,
                    hessian: a_xm2,
                    a_xm1,
                    b_xm1: None,
                    b_xm: 1.0,
                })
            }
        }
    }

    fn step(&self, x: &[f64], ev: &KernelEval, alpha: f64) -> Result<Vec<f64>> {
        match ev.b_xm1.as_ref() {
            Some(b_xm1) => {
                step_from_parts(self.beta(), x, ev.lambda, alpha, &ev.a_xm1, b_xm1, ev.b_xm)
            }
            None => {
                let beta = self.beta();
                let xhat: Vec<f64> = (0..x.len())
                    .map(|i| beta * (ev.a_xm1[i] + alpha * x[i]))
                    .collect();
                normalized(&xhat).ok_or_else(|| {
                    Error::Breakdown(
                        "the shifted update vanished; the iterate is a stationary point the shift cannot move"
                            .into(),
                    )
                })
            }
        }
    }

    fn residual(&self, lambda: f64, x: &[f64]) -> Result<f64> {
        match self {
            Kernel::General(p) => residual(p, lambda, x),
            Kernel::UnitSphere { a, .. } => {
                let a_xm1 = a.ttv_m1(x)?;
                let scale = norm(x).powi(a.order() as i32 - 2);
                let r: Vec<f64> = (0..x.len())
                    .map(|i| a_xm1[i] - lambda * scale * x[i])
                    .collect();
                Ok(norm(&r))
            }
        }
    }

    fn alpha(&self, ev: &KernelEval, cfg: &GeapConfig) -> Result<f64> {
        match cfg.shift {
            ShiftMode::Adaptive => {
                let orientation = match self {
                    Kernel::General(p) => p.orientation(),
                    Kernel::UnitSphere { orientation, .. } => *orientation,
                };
                adaptive_alpha(&ev.hessian, self.order(), cfg.tau, orientation)
            }
            ShiftMode::Fixed(alpha) => Ok(alpha),
        }
    }
}

/// Flip the sign, if needed, so the first component of largest magnitude is
/// positive. The canonical representative makes eigenvectors comparable
/// across runs, since x and -x describe the same line.
fn canonical_sign(mut x: Vec<f64>) -> Vec<f64> {
    let mut best = 0;
    for i in 1..x.len() {
        if x[i].abs() > x[best].abs() {
            best = i;
        }
    }
    if x[best] < 0.0 {
        for v in &mut x {
            *v = -*v;
        }
    }
    x
}

fn classify_from_hessian(
    h: &SymMatrix,
    lambda: f64,
    x: &[f64],
    m: f64,
    tau_class: f64,
) -> Result<(Classification, Vec<f64>)> {
    let u = orthonormal_complement(x)?;
    if u.is_empty() {
        // A one-dimensional problem has no tangent directions to certify.
        return Ok((Classification::Degenerate, Vec::new()));
    }
    let k = u.len();
    // C = U' (H - lambda m I) U, built column by column and mirrored so the
    // result is symmetric bit for bit.
    let mut c = vec![0.0f64; k * k];
    for j in 0..k {
        let mut w = h.matvec(&u[j]);
        for (wi, uji) in w.iter_mut().zip(&u[j]) {
            *wi -= lambda * m * uji;
        }
        for i in 0..=j {
            let v = dot(&u[i], &w);
            c[i * k + j] = v;
            c[j * k + i] = v;
        }
    }
    let spectrum = sym_eig(&SymMatrix::from_raw(k, c))?;
    let eigs = spectrum.eigenvalues;
    let class = if eigs.iter().any(|e| e.abs() <= tau_class) {
        Classification::Degenerate
    } else if eigs.iter().all(|e| *e > 0.0) {
        Classification::Minimum
    } else if eigs.iter().all(|e| *e < 0.0) {
        Classification::Maximum
    } else {
        Classification::Saddle
    };
    Ok((class, eigs))
}

/// Classify a candidate eigenpair by the spectrum of the projected Hessian
/// C = U' (H(x) - lambda m I) U, where the columns of U span the tangent
/// space of the sphere at x. All eigenvalues decisively positive means a
/// constrained minimum, all negative a maximum, mixed a saddle; any
/// eigenvalue within `tau_class` of zero makes the test inconclusive.
///
/// The input is normalized before use. Classification does not verify that
/// (lambda, x) is actually an eigenpair; callers wanting that guarantee
/// should check [`residual`] first.
pub fn classify(
    p: &ProblemSpec,
    lambda: f64,
    x: &[f64],
    tau_class: f64,
) -> Result<(Classification, Vec<f64>)> {
    check_vector(p, x)?;
    if tau_class < 0.0 || tau_class.is_nan() {
        return Err(Error::InvalidInput("tau_class must be nonnegative".into()));
    }
    let xu = normalized(x)
        .ok_or_else(|| Error::InvalidInput("cannot classify at the zero vector".into()))?;
    let m = p.order() as f64;
    let h = match &p.b {
        Some(_) => hessian(p, &xu)?,
        // Odd-order unit-sphere problems: the closed-form Hessian.
        None => {
            let mut a_xm2 = p.a.ttv_m2(&xu)?;
            a_xm2.scale(m * (m - 1.0));
            a_xm2
        }
    };
    classify_from_hessian(&h, lambda, &xu, m, tau_class)
}

/// The eigenpair defect ||A x^{m-1} - lambda B x^{m-1}||, with the B action
/// evaluated in the form natural to its kind: ||x||^{m-2} x for the
/// unit-sphere kind, the elementwise power x^{[m-1]} for the delta kind,
/// and the materialized tensor product otherwise.
pub fn residual(p: &ProblemSpec, lambda: f64, x: &[f64]) -> Result<f64> {
    check_vector(p, x)?;
    let a_xm1 = p.a.ttv_m1(x)?;
    let b_xm1: Vec<f64> = match &p.b_kind {
        BKind::Z => {
            let scale = norm(x).powi(p.order() as i32 - 2);
            x.iter().map(|v| scale * v).collect()
        }
        BKind::H => {
            let e = p.order() as i32 - 1;
            x.iter().map(|v| v.powi(e)).collect()
        }
        BKind::D(_) | BKind::Explicit(_) => p
            .b
            .as_ref()
            .expect("even-order kinds always materialize B")
            .ttv_m1(x)?,
    };
    let r: Vec<f64> = (0..x.len())
        .map(|i| a_xm1[i] - lambda * b_xm1[i])
        .collect();
    Ok(norm(&r))
}

fn check_fixed_sign(cfg: &GeapConfig, beta: f64) -> Result<()> {
    if let ShiftMode::Fixed(alpha) = cfg.shift {
        if alpha * beta < 0.0 {
            return Err(Error::InvalidInput(format!(
                "fixed shift {alpha} works against the orientation; its sign must match"
            )));
        }
    }
    Ok(())
}

/// Run the general adaptive power iteration from `x0` until the eigenvalue
/// estimate settles, the iteration cap is reached, or the update breaks
/// down. Requires the problem to carry a materialized B tensor (everything
/// except odd-order unit-sphere problems, which [`zeap_iterate`] serves).
pub fn geap_iterate(
    p: &ProblemSpec,
    x0: &[f64],
    cfg: &GeapConfig,
) -> Result<(EigenRecord, IterationTrace)> {
    cfg.validate()?;
    if p.b.is_none() {
        return Err(Error::Unsupported(
            "odd-order unit-sphere problems have no B tensor; use the specialized iteration"
                .into(),
        ));
    }
    check_fixed_sign(cfg, p.beta())?;
    drive(&Kernel::General(p), x0, cfg)
}

/// Run the unit-sphere specialization from `x0`. It forms only A products
/// (lambda = Ax^m, H = m (m-1) Ax^{m-2}, step beta (Ax^{m-1} + alpha x)) and
/// is the route that also serves odd tensor orders. At even order its
/// eigenvalue trajectory matches [`geap_iterate`] on the corresponding
/// unit-sphere problem.
pub fn zeap_iterate(
    a: &SymTensor,
    x0: &[f64],
    cfg: &GeapConfig,
    orientation: Orientation,
) -> Result<(EigenRecord, IterationTrace)> {
    cfg.validate()?;
    check_fixed_sign(cfg, orientation.beta())?;
    drive(&Kernel::UnitSphere { a, orientation }, x0, cfg)
}

fn drive(kernel: &Kernel, x0: &[f64], cfg: &GeapConfig) -> Result<(EigenRecord, IterationTrace)> {
    let started = Instant::now();
    if !all_finite(x0) {
        return Err(Error::InvalidInput("non-finite start vector entry".into()));
    }
    let mut x = normalized(x0)
        .ok_or_else(|| Error::InvalidInput("start vector must be nonzero".into()))?;
    let beta = kernel.beta();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut violations: Vec<Violation> = Vec::new();
    let mut prev: Option<f64> = None;
    let mut converged = false;
    let mut iterations = 0;

    for k in 0..=cfg.max_iters {
        let ev = kernel.eval(&x)?;
        if !ev.lambda.is_finite() {
            return Err(Error::Numerical(
                "eigenvalue estimate became non-finite".into(),
            ));
        }
        if let Some(pl) = prev {
            let delta = ev.lambda - pl;
            let backward = -beta * delta;
            if backward > VIOLATION_SCALE * pl.abs().max(1.0) {
                violations.push(Violation {
                    k,
                    magnitude: backward,
                });
            }
            if delta.abs() <= cfg.lambda_tol || ev.lambda == pl {
                converged = true;
                iterations = k;
                let alpha = kernel.alpha(&ev, cfg)?;
                steps.push(trace_step(k, ev.lambda, alpha, &x, cfg));
                break;
            }
        }
        let alpha = kernel.alpha(&ev, cfg)?;
        steps.push(trace_step(k, ev.lambda, alpha, &x, cfg));
        if k == cfg.max_iters {
            iterations = k;
            break;
        }
        x = kernel.step(&x, &ev, alpha)?;
        prev = Some(ev.lambda);
    }

    let record = finalize(kernel, x)?;
    let trace = IterationTrace {
        steps,
        monotonicity_violations: violations,
        converged,
        iterations,
        wall_time: started.elapsed().as_secs_f64(),
    };
    Ok((record, trace))
}

fn trace_step(k: usize, lambda: f64, alpha: f64, x: &[f64], cfg: &GeapConfig) -> TraceStep {
    TraceStep {
        k,
        lambda,
        alpha,
        x: cfg.record_iterates.then(|| x.to_vec()),
    }
}

fn finalize(kernel: &Kernel, x: Vec<f64>) -> Result<EigenRecord> {
    let x = canonical_sign(x);
    // Re-evaluate at the canonical representative: at even order the
    // eigenvalue is unchanged, at odd order the flip negates it.
    let ev = kernel.eval(&x)?;
    let residual = kernel.residual(ev.lambda, &x)?;
    let (classification, projected) = classify_from_hessian(
        &ev.hessian,
        ev.lambda,
        &x,
        kernel.order() as f64,
        DEFAULT_TAU_CLASS,
    )?;
    Ok(EigenRecord {
        lambda: ev.lambda,
        x,
        residual,
        classification,
        projected_hessian_eigenvalues: projected,
    })
}
