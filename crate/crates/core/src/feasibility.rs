//! Necessary conditions for `(H, d)` to be a connected induced Q-subgraph of
//! a connected non-bipartite Q-integral graph `G` with Q-spectral radius `rho`:
//!
//! * every `d(v) <= rho - 2` and every edge-degree `d(u) + d(v) - 2 <= 2 rho - 6`;
//! * the largest Q-eigenvalue is at most `rho`, with equality only when `H = G`;
//! * the second largest is at most `rho - 1`;
//! * the smallest is at least `1`.
//!
//! Eigenvalue comparisons are made against the integer thresholds `1`,
//! `rho - 1` and `rho`. A Jacobi spectrum settles a threshold when no
//! eigenvalue lies within the escalation margin of it; otherwise the
//! comparison is redone exactly from the inertia of `Q - tI`. The fully
//! exact mode counts roots of the characteristic polynomial instead.
//!
//! One-vertex extensions reuse the parent's eigendecomposition: the side of
//! each threshold gained by the new vertex follows from a bordered Schur
//! complement, and only thresholds it cannot settle go to exact inertia.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{
    charpoly, count_roots, jacobi_eigen, jacobi_eigenvalues, shifted_inertia, EigenDecomposition, Inertia, IntMatrix, IntPolynomial, Relation,
};
use crate::spectral::{q_matrix, QGraph};

/// Default distance below which a float eigenvalue is considered too close
/// to a threshold to trust.
pub const DEFAULT_ESCALATION_MARGIN: f64 = 1e-6;

const JACOBI_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeasibilityError {
    #[error("the eigenvalue gate needs a connected graph")]
    Disconnected,
    #[error("rho = {0} is below the supported minimum of 4")]
    RhoTooSmall(u32),
    #[error("constraint covers {found} vertices, graph has {expected}")]
    ConstraintLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InfeasibleReason {
    /// Largest eigenvalue exceeds `rho`.
    LargestAboveRho,
    /// At least two eigenvalues exceed `rho - 1`.
    SecondAboveRhoMinusOne,
    /// Smallest eigenvalue is below 1.
    SmallestBelowOne,
    /// Largest eigenvalue equals `rho` but `d` still expects outside neighbours.
    SaturatedIncomplete,
    /// A vertex degree or edge-degree cap is exceeded.
    DegreeCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeasibilityVerdict {
    Infeasible(InfeasibleReason),
    Feasible,
    /// Largest eigenvalue is exactly `rho` and `d` equals the degrees of `H`,
    /// so `H` can only be the whole graph.
    SaturatedCandidate,
}

impl FeasibilityVerdict {
    pub fn is_infeasible(self) -> bool {
        matches!(self, FeasibilityVerdict::Infeasible(_))
    }
}

/// How eigenvalue thresholds are decided.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateMode {
    /// Characteristic polynomial and Sturm counting for every comparison.
    Exact,
    /// Jacobi spectrum, escalating within `margin` of a threshold to the
    /// exact inertia of the shifted matrix.
    Prefilter { margin: f64 },
}

impl Default for GateMode {
    fn default() -> Self {
        GateMode::Prefilter { margin: DEFAULT_ESCALATION_MARGIN }
    }
}

/// Per-vertex bounds on the unknown ambient degree, plus an edge-degree cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeConstraint {
    bounds: Vec<(u32, u32)>,
    edge_degree_cap: u32,
    rho: u32,
}

impl DegreeConstraint {
    /// `[max(1, deg), rho - 2]` on every vertex, edge-degree cap `2 rho - 6`.
    pub fn defaults(g: &Graph, rho: u32) -> Self {
        let bounds = (0..g.order()).map(|v| (g.degree(v).max(1), rho - 2)).collect();
        DegreeConstraint { bounds, edge_degree_cap: 2 * rho - 6, rho }
    }

    /// Fixes the ambient degree of `v` to exactly `k`.
    pub fn pin(mut self, v: usize, k: u32) -> Self {
        self.bounds[v] = (k, k);
        self
    }

    /// Tightens the edge-degree cap below the `2 rho - 6` default.
    pub fn with_edge_degree_cap(mut self, cap: u32) -> Self {
        self.edge_degree_cap = cap.min(2 * self.rho - 6);
        self
    }

    pub fn bounds(&self) -> &[(u32, u32)] {
        &self.bounds
    }

    pub fn edge_degree_cap(&self) -> u32 {
        self.edge_degree_cap
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    pub fn is_pinned(&self, v: usize) -> bool {
        let (lo, hi) = self.bounds[v];
        lo == hi
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// Constraint for the graph with one more vertex of degree `new_degree`.
    pub fn extended(&self, new_degree: u32) -> Self {
        let mut c = self.clone();
        c.bounds.push((new_degree.max(1), self.rho - 2));
        c
    }

    /// Effective admissible range of `d(v)` given the current graph degree.
    fn range(&self, g: &Graph, v: usize) -> std::ops::RangeInclusive<u32> {
        let (lo, hi) = self.bounds[v];
        lo.max(g.degree(v)).max(1)..=hi.min(self.rho - 2)
    }
}

/// Vertex degrees at most `rho - 2` and edge-degrees at most `2 rho - 6`.
pub fn degree_caps_ok(qg: &QGraph, rho: u32) -> bool {
    caps_ok(qg.graph(), qg.degrees(), rho, 2 * rho - 6)
}

fn caps_ok(g: &Graph, d: &[u32], rho: u32, edge_cap: u32) -> bool {
    d.iter().all(|&x| x + 2 <= rho) && g.edges().iter().all(|&(u, v)| d[u] + d[v] <= edge_cap + 2)
}

/// The eigenvalue gate with the default prefilter.
pub fn check_prop_ev(qg: &QGraph, rho: u32) -> Result<FeasibilityVerdict, FeasibilityError> {
    check_prop_ev_with(qg, rho, GateMode::default())
}

pub fn check_prop_ev_with(qg: &QGraph, rho: u32, mode: GateMode) -> Result<FeasibilityVerdict, FeasibilityError> {
    if rho < 4 {
        return Err(FeasibilityError::RhoTooSmall(rho));
    }
    if !qg.graph().is_connected() {
        return Err(FeasibilityError::Disconnected);
    }
    Ok(gate(qg.graph(), qg.degrees(), rho, mode))
}

/// Degree caps first, then the eigenvalue gate.
pub fn verdict(qg: &QGraph, rho: u32, mode: GateMode) -> Result<FeasibilityVerdict, FeasibilityError> {
    if !degree_caps_ok(qg, rho) {
        return Ok(FeasibilityVerdict::Infeasible(InfeasibleReason::DegreeCap));
    }
    check_prop_ev_with(qg, rho, mode)
}

/// Threshold counts for one Q-matrix, computed from floats where they are
/// decisive and exactly otherwise.
struct ThresholdCounter {
    matrix: IntMatrix,
    floats: Option<Vec<f64>>,
    margin: f64,
    poly: Option<IntPolynomial>,
    inertia: Vec<(i64, Inertia)>,
}

impl ThresholdCounter {
    fn new(matrix: IntMatrix, mode: GateMode) -> Self {
        let (floats, margin) = match mode {
            GateMode::Exact => (None, 0.0),
            GateMode::Prefilter { margin } => (Some(jacobi_eigenvalues(&matrix.to_f64(), matrix.rows(), JACOBI_TOL)), margin),
        };
        ThresholdCounter { matrix, floats, margin, poly: None, inertia: Vec::new() }
    }

    fn count(&mut self, t: i64, rel: Relation) -> usize {
        let Some(ev) = &self.floats else {
            let p = self.poly.get_or_insert_with(|| charpoly(&self.matrix).expect("Q-matrix is square and small"));
            return count_roots(p, &BigRational::from_integer(BigInt::from(t)), rel).expect("characteristic polynomial is monic");
        };
        let tf = t as f64;
        if ev.iter().all(|&x| (x - tf).abs() >= self.margin) {
            return match rel {
                Relation::Gt => ev.iter().filter(|&&x| x > tf).count(),
                Relation::Lt => ev.iter().filter(|&&x| x < tf).count(),
                Relation::Eq => 0,
            };
        }
        let i = match self.inertia.iter().find(|(s, _)| *s == t) {
            Some((_, i)) => *i,
            None => {
                let i = shifted_inertia(&self.matrix, t);
                self.inertia.push((t, i));
                i
            }
        };
        match rel {
            Relation::Gt => i.above,
            Relation::Lt => i.below,
            Relation::Eq => i.at,
        }
    }
}

/// Threshold counts deciding the gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct GateCounts {
    above_rho: usize,
    below_one: usize,
    above_rho_minus_one: usize,
    at_rho: usize,
}

fn verdict_from(c: GateCounts, complete: bool) -> FeasibilityVerdict {
    use FeasibilityVerdict::*;
    use InfeasibleReason::*;
    if c.above_rho > 0 {
        Infeasible(LargestAboveRho)
    } else if c.below_one > 0 {
        Infeasible(SmallestBelowOne)
    } else if c.above_rho_minus_one >= 2 {
        Infeasible(SecondAboveRhoMinusOne)
    } else if c.at_rho >= 1 {
        if complete {
            SaturatedCandidate
        } else {
            Infeasible(SaturatedIncomplete)
        }
    } else {
        Feasible
    }
}

/// Eigenvalue gate on `(g, d)`, assuming `g` is connected.
pub(crate) fn gate(g: &Graph, d: &[u32], rho: u32, mode: GateMode) -> FeasibilityVerdict {
    use FeasibilityVerdict::*;
    use InfeasibleReason::*;
    let qg = QGraph::new(g.clone(), d.to_vec()).expect("d bounds the graph degrees");
    let mut c = ThresholdCounter::new(q_matrix(&qg), mode);
    let rho = rho as i64;
    if c.count(rho, Relation::Gt) > 0 {
        return Infeasible(LargestAboveRho);
    }
    if c.count(1, Relation::Lt) > 0 {
        return Infeasible(SmallestBelowOne);
    }
    if c.count(rho - 1, Relation::Gt) >= 2 {
        return Infeasible(SecondAboveRhoMinusOne);
    }
    if c.count(rho, Relation::Eq) >= 1 {
        return if qg.is_complete() { SaturatedCandidate } else { Infeasible(SaturatedIncomplete) };
    }
    Feasible
}

/// Necessary condition for a principal submatrix of a matrix passing the
/// gate: by interlacing its largest eigenvalue is at most `rho`, at most one
/// eigenvalue exceeds `rho - 1`, and none is below 1.
fn principal_ok(g: &Graph, d: &[u32], rho: u32, mode: GateMode) -> bool {
    let k = d.len();
    let m = IntMatrix::from_fn(k, k, |i, j| if i == j { d[i] as i64 } else { g.has_edge(i, j) as i64 });
    let mut c = ThresholdCounter::new(m, mode);
    let rho = rho as i64;
    c.count(rho, Relation::Gt) == 0 && c.count(1, Relation::Lt) == 0 && c.count(rho - 1, Relation::Gt) <= 1
}

/// Admissible degree functions for a fixed graph, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DList {
    entries: Vec<(Vec<u32>, FeasibilityVerdict)>,
}

impl DList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.iter().map(|(d, _)| d.as_slice())
    }

    pub fn entries(&self) -> &[(Vec<u32>, FeasibilityVerdict)] {
        &self.entries
    }

    pub fn contains(&self, d: &[u32]) -> bool {
        self.entries.iter().any(|(e, _)| e == d)
    }

    /// The entry equal to the graph's own degrees, if it is a saturated candidate.
    pub fn saturated_candidate(&self) -> Option<&[u32]> {
        self.entries.iter().find(|(_, v)| *v == FeasibilityVerdict::SaturatedCandidate).map(|(d, _)| d.as_slice())
    }

    /// Per-vertex minimum over entries other than the graph's own degree
    /// function (`own`), or `None` when no such entry exists.
    pub fn open_minimum(&self, own: &[u32]) -> Option<Vec<u32>> {
        let mut it = self.entries.iter().map(|(d, _)| d).filter(|d| d.as_slice() != own);
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, d| {
            for (a, &x) in acc.iter_mut().zip(d) {
                *a = (*a).min(x);
            }
            acc
        }))
    }

    /// Per-vertex maximum over all entries.
    pub fn maximum(&self) -> Option<Vec<u32>> {
        let mut it = self.entries.iter().map(|(d, _)| d);
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, d| {
            for (a, &x) in acc.iter_mut().zip(d) {
                *a = (*a).max(x);
            }
            acc
        }))
    }
}

/// All `d` within the constraint that pass the degree caps and the
/// eigenvalue gate. Assignments are built vertex by vertex; a prefix is
/// abandoned as soon as it breaks an edge cap among assigned vertices or
/// its principal submatrix already violates the interlacing bounds.
pub fn enumerate_d_list(g: &Graph, cons: &DegreeConstraint, rho: u32) -> Result<DList, FeasibilityError> {
    enumerate_d_list_with(g, cons, rho, GateMode::default())
}

pub fn enumerate_d_list_with(g: &Graph, cons: &DegreeConstraint, rho: u32, mode: GateMode) -> Result<DList, FeasibilityError> {
    if rho < 4 {
        return Err(FeasibilityError::RhoTooSmall(rho));
    }
    if cons.len() != g.order() {
        return Err(FeasibilityError::ConstraintLength { expected: g.order(), found: cons.len() });
    }
    if !g.is_connected() {
        return Err(FeasibilityError::Disconnected);
    }
    let mut out = DList::default();
    let mut d = Vec::with_capacity(g.order());
    assign(g, cons, rho, mode, &mut d, &mut out);
    Ok(out)
}

fn assign(g: &Graph, cons: &DegreeConstraint, rho: u32, mode: GateMode, d: &mut Vec<u32>, out: &mut DList) {
    let v = d.len();
    let n = g.order();
    if v == n {
        let verdict = gate(g, d, rho, mode);
        if !verdict.is_infeasible() {
            out.entries.push((d.clone(), verdict));
        }
        return;
    }
    let cap = cons.edge_degree_cap() + 2;
    let earlier = g.neighbors(v) & ((1u64 << v) - 1);
    for k in cons.range(g, v) {
        if crate::graph::bits(earlier).any(|u| d[u] + k > cap) {
            continue;
        }
        d.push(k);
        // full assignments go straight to the gate
        if v + 1 == n || principal_ok(g, d, rho, mode) {
            assign(g, cons, rho, mode, d, out);
        }
        d.pop();
    }
}

/// `enumerate_d_list` for `g` plus one vertex, derived from the parent's
/// list: by interlacing every admissible `d` of the child restricts to an
/// admissible `d` of the parent.
pub fn extend_d_list(parent: &DList, child: &Graph, cons: &DegreeConstraint, rho: u32, mode: GateMode) -> DList {
    let n = child.order();
    let new = n - 1;
    let cap = cons.edge_degree_cap() + 2;
    let nbrs: Vec<usize> = crate::graph::bits(child.neighbors(new)).collect();
    let mut out = DList::default();
    let mut d = vec![0u32; n];
    'parent: for (pd, _) in &parent.entries {
        if pd.iter().enumerate().any(|(v, &x)| x < child.degree(v)) {
            continue 'parent;
        }
        d[..new].copy_from_slice(pd);
        for k in cons.range(child, new) {
            if nbrs.iter().any(|&u| pd[u] + k > cap) {
                continue;
            }
            d[new] = k;
            let verdict = gate(child, &d, rho, mode);
            if !verdict.is_infeasible() {
                out.entries.push((d.clone(), verdict));
            }
        }
    }
    out
}

/// Minimum distance between a parent eigenvalue and a threshold for the
/// Schur-complement shortcut to be trusted.
const SCHUR_GAP: f64 = 1e-3;
/// Minimum size of the Schur complement for its sign to be trusted.
const SCHUR_MIN: f64 = 1e-4;

/// Eigendecompositions of the Q-matrices of every entry of a list, used to
/// decide one-vertex extensions without refactoring the whole matrix.
#[derive(Debug, Clone)]
pub struct DListSpectra {
    n: usize,
    entries: Vec<EigenDecomposition>,
}

impl DListSpectra {
    pub fn new(list: &DList, g: &Graph) -> Self {
        let n = g.order();
        let entries = list
            .entries
            .iter()
            .map(|(d, _)| {
                let mut a = vec![0.0; n * n];
                for v in 0..n {
                    a[v * n + v] = d[v] as f64;
                    for u in crate::graph::bits(g.neighbors(v)) {
                        a[v * n + u] = 1.0;
                    }
                }
                jacobi_eigen(&a, n, JACOBI_TOL)
            })
            .collect();
        DListSpectra { n, entries }
    }
}

/// Counts for the bordered matrix `[[A, b], [b^T, k]]` at threshold `t`
/// from the spectrum of `A`: by Haynsworth inertia the bordered matrix has
/// the eigenvalues of `A` on each side of `t`, plus one more on the side of
/// the sign of `k - t - sum c_i^2 / (mu_i - t)` where `c = U^T b`.
/// Returns `(above, below)`, or `None` when too close to call.
fn bordered_counts(e: &EigenDecomposition, c: &[f64], k: f64, t: f64, min: f64) -> Option<(usize, usize)> {
    let mut h = t;
    let mut above = 0;
    for (&mu, &ci) in e.values.iter().zip(c) {
        let gap = mu - t;
        if gap.abs() < SCHUR_GAP {
            return None;
        }
        above += (gap > 0.0) as usize;
        h += ci * ci / gap;
    }
    let s = k - h;
    if s.abs() < min {
        return None;
    }
    let below = e.values.len() - above;
    Some(if s > 0.0 { (above + 1, below) } else { (above, below + 1) })
}

/// `extend_d_list` using cached parent spectra; a threshold the shortcut
/// cannot settle is decided by the exact inertia of the child's Q-matrix.
/// The shortcut is skipped in `GateMode::Exact`, and a prefilter margin
/// above the built-in one widens the band sent to the exact tier.
pub fn extend_d_list_cached(parent: &DList, spectra: &DListSpectra, child: &Graph, cons: &DegreeConstraint, rho: u32, mode: GateMode) -> DList {
    let min = match mode {
        GateMode::Exact => f64::INFINITY,
        GateMode::Prefilter { margin } => SCHUR_MIN.max(margin),
    };
    let n = child.order();
    let new = n - 1;
    debug_assert_eq!(spectra.n, new);
    let cap = cons.edge_degree_cap() + 2;
    let nbrs: Vec<usize> = crate::graph::bits(child.neighbors(new)).collect();
    let mut out = DList::default();
    let mut d = vec![0u32; n];
    let mut c = vec![0.0; new];
    let child_degrees = child.degrees();
    let ri = rho as i64;
    'parent: for ((pd, _), e) in parent.entries.iter().zip(&spectra.entries) {
        for &v in &nbrs {
            if pd[v] < child_degrees[v] {
                continue 'parent;
            }
        }
        for (i, ci) in c.iter_mut().enumerate() {
            *ci = nbrs.iter().map(|&u| e.vectors[u * new + i]).sum();
        }
        d[..new].copy_from_slice(pd);
        for k in cons.range(child, new) {
            if nbrs.iter().any(|&u| pd[u] + k > cap) {
                continue;
            }
            d[new] = k;
            let kf = k as f64;
            // thresholds the shortcut cannot settle are decided on the exact matrix
            let mut exact: Option<IntMatrix> = None;
            let mut at = |t: i64| -> Inertia {
                if let Some((above, below)) = bordered_counts(e, &c, kf, t as f64, min) {
                    return Inertia { above, below, at: 0 };
                }
                let m = exact.get_or_insert_with(|| q_matrix(&QGraph::new(child.clone(), d.clone()).expect("d bounds the degrees")));
                shifted_inertia(m, t)
            };
            let top = at(ri);
            let counts = GateCounts { above_rho: top.above, at_rho: top.at, below_one: at(1).below, above_rho_minus_one: at(ri - 1).above };
            let verdict = verdict_from(counts, d == child_degrees);
            if !verdict.is_infeasible() {
                out.entries.push((d.clone(), verdict));
            }
        }
    }
    out
}
