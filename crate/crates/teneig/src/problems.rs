//! Built-in example problems, their reference eigenpairs, and plain-text
//! tensor I/O.
//!
//! Four datasets ship with the crate, each a symmetric tensor paired with
//! the B kind its eigenpairs are usually studied under, plus the complete
//! list of real eigenpairs at four-decimal precision for testing:
//!
//! * `kore02`: order 4, dimension 3, unit-sphere eigenpairs (11 pairs).
//! * `heig`: order 6, dimension 4, elementwise-power eigenpairs (34 pairs).
//! * `deig`: order 4, dimension 3, matrix-weighted eigenpairs (13 pairs).
//! * `random`: the `heig` tensor against a random positive definite B
//!   (26 pairs).

mod data;

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geap::{BKind, Classification, Orientation, ProblemSpec};
use crate::symtensor::{SymMatrix, SymTensor};
use crate::util::normalized;

/// A reference eigenpair at printed four-decimal precision.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub lambda: f64,
    /// Unit-normalized (some sources print vectors in other scalings; the
    /// eigenvalue is scale-invariant, so normalizing loses nothing).
    pub x: Vec<f64>,
    /// Projected-Hessian eigenvalues as printed in the reference tables.
    /// The printed normalization divides the classification matrix
    /// C(lambda, x) by the tensor order m (so these are eigenvalues of
    /// U' (H/m - lambda I) U), and the printed order is arbitrary — sort
    /// before comparing against [`crate::geap::classify`], whose spectrum
    /// is that of C itself, ascending.
    pub projected_eigenvalues: Vec<f64>,
    pub classification: Classification,
}

/// A named example problem bundled with its reference eigenpairs.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub name: &'static str,
    pub a: SymTensor,
    pub b_kind: BKind,
    pub fixtures: Vec<Fixture>,
}

impl Dataset {
    /// Assemble the eigenproblem this dataset is studied under.
    pub fn problem(&self, orientation: Orientation) -> Result<ProblemSpec> {
        ProblemSpec::new(self.a.clone(), self.b_kind.clone(), orientation)
    }
}

pub const DATASET_NAMES: [&str; 4] = ["kore02", "heig", "deig", "random"];

/// Look up a built-in dataset by name.
pub fn builtin(name: &str) -> Result<Dataset> {
    match name {
        "kore02" => Ok(Dataset {
            name: "kore02",
            a: tensor_from_unique(4, 3, &data::KORE02_A),
            b_kind: BKind::Z,
            fixtures: fixtures(&data::KORE02_FIXTURES),
        }),
        "heig" => Ok(Dataset {
            name: "heig",
            a: tensor_from_unique(6, 4, &data::HEIG_A),
            b_kind: BKind::H,
            fixtures: fixtures(&data::HEIG_FIXTURES),
        }),
        "deig" => Ok(Dataset {
            name: "deig",
            a: tensor_from_unique(4, 3, &data::DEIG_A),
            b_kind: BKind::D(deig_weight_matrix()),
            fixtures: fixtures(&data::DEIG_FIXTURES),
        }),
        "random" => Ok(Dataset {
            name: "random",
            a: tensor_from_unique(6, 4, &data::HEIG_A),
            b_kind: BKind::Explicit(tensor_from_unique(6, 4, &data::RANDOM_B)),
            fixtures: fixtures(&data::RANDOM_FIXTURES),
        }),
        other => Err(Error::UnknownDataset(other.to_string())),
    }
}

/// The weight matrix of the `deig` dataset.
fn deig_weight_matrix() -> SymMatrix {
    SymMatrix::from_values(
        3,
        vec![
            1.755, 0.035, 0.132, //
            0.035, 1.390, 0.017, //
            0.132, 0.017, 4.006,
        ],
    )
    .expect("embedded weight matrix is symmetric")
}

fn tensor_from_unique<const K: usize>(
    order: usize,
    dim: usize,
    entries: &[([usize; K], f64)],
) -> SymTensor {
    SymTensor::from_unique(order, dim, entries.iter().map(|(idx, v)| (&idx[..], *v)))
        .expect("embedded tensor entries are valid")
}

fn fixtures<const N: usize, const P: usize>(
    rows: &[(f64, [f64; N], [f64; P], Classification)],
) -> Vec<Fixture> {
    rows.iter()
        .map(|(lambda, x, projected, classification)| Fixture {
            lambda: *lambda,
            x: normalized(x).expect("embedded eigenvectors are nonzero"),
            projected_eigenvalues: projected.to_vec(),
            classification: *classification,
        })
        .collect()
}

/// Read a tensor from the plain-text format:
///
/// ```text
/// symtensor <order> <dim>
/// unique            # or: dense
/// 1 1 1 2  0.25     # unique: 1-based nondecreasing indices, then the value
/// ```
///
/// Lines starting with `#` are comments and blank lines are skipped. A
/// `unique` body lists one entry per symmetry orbit; unlisted orbits are
/// zero. A `dense` body lists all dim^order values in row-major order (last
/// index fastest) and must be symmetric.
pub fn load_tensor(path: impl AsRef<Path>) -> Result<SymTensor> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_tensor(&text, &path.display().to_string())
}

fn parse_tensor(text: &str, origin: &str) -> Result<SymTensor> {
    let err = |line: usize, msg: String| Error::Parse {
        path: origin.to_string(),
        line,
        msg,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `symtensor <order> <dim>` header".into()))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("symtensor") {
        return Err(err(
            header_no,
            format!("expected `symtensor <order> <dim>`, got `{header}`"),
        ));
    }
    let mut shape = || -> Option<usize> { tokens.next()?.parse().ok() };
    let (order, dim) = match (shape(), shape()) {
        (Some(m), Some(n)) => (m, n),
        _ => {
            return Err(err(
                header_no,
                format!("expected `symtensor <order> <dim>`, got `{header}`"),
            ))
        }
    };
    if tokens.next().is_some() {
        return Err(err(header_no, "trailing tokens after the header".into()));
    }
    // Surface order/dimension range problems at the header line.
    SymTensor::zeros(order, dim).map_err(|e| err(header_no, e.to_string()))?;

    let (kind_no, kind) = lines
        .next()
        .ok_or_else(|| err(header_no, "missing `unique` or `dense` line".into()))?;
    match kind {
        "unique" => {
            let mut entries: Vec<(Vec<usize>, f64)> = Vec::new();
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            for (no, line) in lines {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != order + 1 {
                    return Err(err(
                        no,
                        format!(
                            "expected {order} indices and a value, got {} tokens",
                            tokens.len()
                        ),
                    ));
                }
                let mut idx = Vec::with_capacity(order);
                for t in &tokens[..order] {
                    let i: usize = t
                        .parse()
                        .map_err(|_| err(no, format!("bad index `{t}`")))?;
                    if i < 1 || i > dim {
                        return Err(err(
                            no,
                            format!("index {i} out of range 1..={dim}"),
                        ));
                    }
                    idx.push(i);
                }
                if idx.windows(2).any(|w| w[0] > w[1]) {
                    return Err(err(no, "indices must be nondecreasing".into()));
                }
                let value: f64 = tokens[order]
                    .parse()
                    .map_err(|_| err(no, format!("bad value `{}`", tokens[order])))?;
                if !seen.insert(idx.clone()) {
                    return Err(err(no, format!("duplicate entry for indices {idx:?}")));
                }
                entries.push((idx, value));
            }
            SymTensor::from_unique(order, dim, entries.iter().map(|(i, v)| (&i[..], *v)))
                .map_err(|e| err(kind_no, e.to_string()))
        }
        "dense" => {
            let expected = dim.pow(order as u32);
            let mut values = Vec::with_capacity(expected);
            for (no, line) in lines {
                for t in line.split_whitespace() {
                    if values.len() == expected {
                        return Err(err(no, format!("more than {expected} values")));
                    }
                    let v: f64 = t
                        .parse()
                        .map_err(|_| err(no, format!("bad value `{t}`")))?;
                    values.push(v);
                }
            }
            if values.len() != expected {
                return Err(err(
                    kind_no,
                    format!("expected {expected} values, got {}", values.len()),
                ));
            }
            SymTensor::from_values(order, dim, values).map_err(|e| err(kind_no, e.to_string()))
        }
        other => Err(err(
            kind_no,
            format!("expected `unique` or `dense`, got `{other}`"),
        )),
    }
}

/// Write a tensor in the `unique` text format, one line per symmetry orbit,
/// skipping orbits that hold plain zero (negative zero is kept). Values are
/// printed with 17 significant digits, so loading the file reproduces the
/// tensor bit for bit.
pub fn save_tensor(path: impl AsRef<Path>, t: &SymTensor) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_tensor(t)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn format_tensor(t: &SymTensor) -> String {
    let order = t.order();
    let dim = t.dim();
    let mut out = String::new();
    let _ = writeln!(out, "symtensor {order} {dim}");
    out.push_str("unique\n");
    // Walk canonical (nondecreasing) index tuples in lexicographic order.
    let mut idx = vec![1usize; order];
    loop {
        let v = t.get(&idx);
        if v.to_bits() != 0 {
            for i in &idx {
                let _ = write!(out, "{i} ");
            }
            let _ = writeln!(out, "{v:.16e}");
        }
        // next nondecreasing tuple
        let mut pos = order;
        while pos > 0 {
            if idx[pos - 1] < dim {
                idx[pos - 1] += 1;
                for p in pos..order {
                    idx[p] = idx[pos - 1];
                }
                break;
            }
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    out
}

/// Read a symmetric matrix stored as an order-2 tensor in the text format.
pub fn load_matrix(path: impl AsRef<Path>) -> Result<SymMatrix> {
    let t = load_tensor(&path)?;
    if t.order() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected an order-2 tensor for a matrix, got order {}",
            t.order()
        )));
    }
    SymMatrix::from_values(t.dim(), t.values().to_vec())
}
