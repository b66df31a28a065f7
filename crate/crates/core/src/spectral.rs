//! Q-graphs, their Q-matrices, and integer spectra.
//!
//! A Q-graph `(G, d)` pairs a graph with a degree function `d >= deg_G`.
//! Its Q-matrix has `d` on the diagonal and the adjacency matrix off it, so
//! `Q(G, deg_G)` is the signless Laplacian `A + D`, and the Q-matrix of an
//! induced subgraph with `d` set to the ambient degrees is a principal
//! submatrix of the ambient signless Laplacian.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{charpoly, integer_root_multiset, jacobi_eigenvalues, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("degree function has {found} entries for {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("d({vertex}) = {d} is below the vertex degree {deg}")]
    DegreeBelowGraph { vertex: usize, d: u32, deg: u32 },
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A graph together with a degree function `d(v) >= deg(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QGraph {
    graph: Graph,
    d: Vec<u32>,
}

impl QGraph {
    pub fn new(graph: Graph, d: Vec<u32>) -> Result<Self, SpectralError> {
        if d.len() != graph.order() {
            return Err(SpectralError::LengthMismatch { expected: graph.order(), found: d.len() });
        }
        for (v, &dv) in d.iter().enumerate() {
            let deg = graph.degree(v);
            if dv < deg {
                return Err(SpectralError::DegreeBelowGraph { vertex: v, d: dv, deg });
            }
        }
        Ok(QGraph { graph, d })
    }

    /// `(G, deg_G)`, whose Q-matrix is the signless Laplacian.
    pub fn with_own_degrees(graph: Graph) -> Self {
        let d = graph.degrees();
        QGraph { graph, d }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn degrees(&self) -> &[u32] {
        &self.d
    }

    /// True when `d` equals the graph's own degrees.
    pub fn is_complete(&self) -> bool {
        self.d.iter().enumerate().all(|(v, &dv)| dv == self.graph.degree(v))
    }
}

/// Q-matrix: `d` on the diagonal, adjacency elsewhere.
pub fn q_matrix(qg: &QGraph) -> IntMatrix {
    let g = qg.graph();
    IntMatrix::from_fn(g.order(), g.order(), |i, j| if i == j { qg.d[i] as i64 } else { g.has_edge(i, j) as i64 })
}

/// Signless Laplacian `A + D`.
pub fn signless_laplacian(g: &Graph) -> IntMatrix {
    q_matrix(&QGraph::with_own_degrees(g.clone()))
}

/// Principal submatrix of `Q(g)` on `w`; equivalently the Q-matrix of the
/// induced subgraph on `w` with degrees taken in `g`.
pub fn q_submatrix(g: &Graph, w: &[usize]) -> Result<IntMatrix, SpectralError> {
    if w.is_empty() {
        return Err(SpectralError::EmptySubset);
    }
    if let Some(&v) = w.iter().find(|&&v| v >= g.order()) {
        return Err(SpectralError::VertexOutOfRange(v));
    }
    let h = g.induced(w).expect("subset validated");
    let d = w.iter().map(|&v| g.degree(v)).collect();
    Ok(q_matrix(&QGraph::new(h, d).expect("ambient degree bounds induced degree")))
}

/// Eigenvalues by cyclic Jacobi, descending.
pub fn float_spectrum(m: &IntMatrix, tol: f64) -> Result<Vec<f64>, SpectralError> {
    if !m.is_symmetric() {
        return Err(if m.is_square() { LinalgError::NotSymmetric } else { LinalgError::NotSquare { rows: m.rows(), cols: m.cols() } }.into());
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectralError::BadTolerance);
    }
    Ok(jacobi_eigenvalues(&m.to_f64(), m.rows(), tol))
}

/// Integer eigenvalue multiset, stored in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerSpectrum(Vec<i64>);

impl IntegerSpectrum {
    pub fn new(mut values: Vec<i64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        IntegerSpectrum(values)
    }

    /// Builds from `(eigenvalue, multiplicity)` pairs.
    pub fn from_multiplicities(pairs: &[(i64, usize)]) -> Self {
        Self::new(pairs.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect())
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// Distinct eigenvalues with multiplicities, descending.
    pub fn multiplicities(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        for &v in &self.0 {
            match out.last_mut() {
                Some((w, m)) if *w == v => *m += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

impl fmt::Display for IntegerSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiplicities().iter().map(|(v, m)| format!("{v}^{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Exact spectrum of a symmetric integer matrix when every eigenvalue is an
/// integer; `None` otherwise. Candidate roots are bounded by Gershgorin
/// discs, which for a Q-matrix lie inside `[0, 2 max d]`.
pub fn exact_q_spectrum(m: &IntMatrix) -> Result<Option<IntegerSpectrum>, SpectralError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric.into());
    }
    let p = charpoly(m)?;
    let k = m.rows();
    let (mut lo, mut hi) = (0i64, 0i64);
    for i in 0..k {
        let radius: i64 = (0..k).filter(|&j| j != i).map(|j| m[(i, j)].abs()).sum();
        lo = if i == 0 { m[(i, i)] - radius } else { lo.min(m[(i, i)] - radius) };
        hi = if i == 0 { m[(i, i)] + radius } else { hi.max(m[(i, i)] + radius) };
    }
    Ok(integer_root_multiset(&p, lo, hi)?.map(IntegerSpectrum::new))
}
