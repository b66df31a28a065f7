//! Isomorph-free enumeration of small connected graphs by canonical
//! augmentation, restricted to maximum degree at most `rho - 2` and largest
//! signless-Laplacian eigenvalue at most `rho`.
//!
//! Both restrictions are inherited by connected induced subgraphs, so every
//! graph in range is reached from a connected parent obtained by deleting a
//! non-cut vertex. A child is accepted only when the added vertex is
//! equivalent to the child's canonical deletion vertex: the non-cut vertex
//! with the largest canonical label. This search shares no code with the
//! vertex-extension search beyond graph primitives and exact spectra, which
//! makes it usable as an independent check on that search.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, canonical_labeling, CanonicalCode, VertexColoring};
use crate::graph::{bits, Graph};
use crate::linalg::{charpoly, count_roots, jacobi_eigenvalues, Relation};
use crate::spectral::{exact_q_spectrum, signless_laplacian, IntegerSpectrum};

pub const MAX_ENUMERATE_ORDER: usize = 10;
pub const MAX_ENUMERATE_RHO: u32 = 6;

const MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("nmax = {0} is outside 1..={MAX_ENUMERATE_ORDER}")]
    OrderOutOfRange(usize),
    #[error("rho = {0} is outside 2..={MAX_ENUMERATE_RHO}")]
    RhoOutOfRange(u32),
}

/// Per-order counts of the connected graphs visited.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnumerationStats {
    pub graphs_per_order: Vec<usize>,
}

/// Every connected non-bipartite Q-integral graph on at most `nmax`
/// vertices whose largest Q-eigenvalue is at most `rho`, once per
/// isomorphism class, in canonical form and sorted by canonical code.
pub fn brute_force_enumerate(nmax: usize, rho: u32) -> Result<Vec<(Graph, IntegerSpectrum)>, EnumerateError> {
    brute_force_enumerate_with_stats(nmax, rho).map(|(found, _)| found)
}

pub fn brute_force_enumerate_with_stats(nmax: usize, rho: u32) -> Result<(Vec<(Graph, IntegerSpectrum)>, EnumerationStats), EnumerateError> {
    if nmax == 0 || nmax > MAX_ENUMERATE_ORDER {
        return Err(EnumerateError::OrderOutOfRange(nmax));
    }
    if !(2..=MAX_ENUMERATE_RHO).contains(&rho) {
        return Err(EnumerateError::RhoOutOfRange(rho));
    }
    let mut stats = EnumerationStats::default();
    let mut level = vec![Graph::empty(1).unwrap()];
    let mut found: Vec<(CanonicalCode, Graph, IntegerSpectrum)> = Vec::new();
    for n in 1..=nmax {
        stats.graphs_per_order.push(level.len());
        found.extend(level.par_iter().filter_map(|g| qualifying(g).map(|s| (uniform_code(g), g.clone(), s))).collect::<Vec<_>>());
        if n == nmax {
            break;
        }
        level = level.par_iter().flat_map_iter(|g| children(g, rho)).collect();
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let out = found
        .into_iter()
        .map(|(_, g, s)| {
            let can = canonical_labeling(&g, &VertexColoring::uniform(g.order()));
            (can.form(&g), s)
        })
        .collect();
    Ok((out, stats))
}

fn uniform_code(g: &Graph) -> CanonicalCode {
    canonical_code(g, &VertexColoring::uniform(g.order()))
}

fn qualifying(g: &Graph) -> Option<IntegerSpectrum> {
    if g.is_bipartite() {
        return None;
    }
    exact_q_spectrum(&signless_laplacian(g)).ok()?
}

/// Accepted one-vertex extensions of `g`, one per isomorphism class.
fn children(g: &Graph, rho: u32) -> Vec<Graph> {
    let n = g.order();
    let cap = rho.saturating_sub(2);
    let open: Vec<usize> = (0..n).filter(|&v| g.degree(v) < cap).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for sub in 1u64..(1u64 << open.len()) {
        if sub.count_ones() > cap {
            continue;
        }
        let s = bits(sub).fold(0u64, |m, i| m | 1 << open[i]);
        let c = g.with_vertex(s).expect("order stays within range");
        if !largest_at_most(&c, rho) {
            continue;
        }
        let can = canonical_labeling(&c, &VertexColoring::uniform(n + 1));
        let m = (0..=n).filter(|&v| c.without_vertex(v).is_connected()).max_by_key(|&v| can.labels[v]).expect("a connected graph has a non-cut vertex");
        if m != n && uniform_code(&c.without_vertex(m)) != uniform_code(g) {
            continue;
        }
        if seen.insert(can.code) {
            out.push(c);
        }
    }
    out
}

/// Largest signless-Laplacian eigenvalue at most `rho`, decided exactly near the threshold.
fn largest_at_most(g: &Graph, rho: u32) -> bool {
    let q = signless_laplacian(g);
    let ev = jacobi_eigenvalues(&q.to_f64(), q.rows(), 1e-12);
    let top = ev[0];
    let r = rho as f64;
    if top > r + MARGIN {
        return false;
    }
    if top < r - MARGIN {
        return true;
    }
    let p = charpoly(&q).expect("small square matrix");
    count_roots(&p, &BigRational::from_integer(BigInt::from(rho)), Relation::Gt).expect("non-zero polynomial") == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn up_to_four_vertices() {
        let found = brute_force_enumerate(4, 6).unwrap();
        let spectra: Vec<&IntegerSpectrum> = found.iter().map(|(_, s)| s).collect();
        assert_eq!(found.len(), 2);
        assert!(spectra.contains(&&IntegerSpectrum::new(vec![4, 1, 1])));
        assert!(spectra.contains(&&IntegerSpectrum::new(vec![6, 2, 2, 2])));
    }

    #[test]
    fn connected_graph_counts_without_restriction() {
        // 1, 1, 2, 6 connected graphs on 1..=4 vertices; none exceeds the caps at rho = 6
        let (_, stats) = brute_force_enumerate_with_stats(4, 6).unwrap();
        assert_eq!(stats.graphs_per_order, vec![1, 1, 2, 6]);
    }

    #[test]
    fn range_errors() {
        assert_eq!(brute_force_enumerate(11, 6), Err(EnumerateError::OrderOutOfRange(11)));
        assert_eq!(brute_force_enumerate(0, 6), Err(EnumerateError::OrderOutOfRange(0)));
        assert_eq!(brute_force_enumerate(5, 7), Err(EnumerateError::RhoOutOfRange(7)));
    }
}
