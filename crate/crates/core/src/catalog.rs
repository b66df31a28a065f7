//! Reference data: the eight connected non-bipartite Q-integral graphs with
//! Q-spectral radius at most 6, and the seed configurations around an edge
//! `xy` with `deg(x) = 4`, `deg(y) = 3` used to classify the radius-6 graphs
//! that have an edge of edge-degree 5.
//!
//! Seed vertices are numbered `x = 0`, `y = 1`, then the remaining
//! neighbours of `x`, then those of `y`. `x` and `y` carry colours 1 and 2
//! so canonical codes keep them apart; every other vertex has colour 0.

use serde::Serialize;
use thiserror::Error;

use crate::canon::VertexColoring;
use crate::feasibility::{DegreeConstraint, GateMode};
use crate::graph::Graph;
use crate::search::{SearchError, SearchNode};
use crate::spectral::IntegerSpectrum;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown graph id {0:?}; expected one of G1..G8")]
    UnknownGraph(String),
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error(transparent)]
    Search(#[from] SearchError),
}

pub const KNOWN_IDS: [&str; 8] = ["G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"];

#[derive(Debug, Clone, Serialize)]
pub struct KnownGraph {
    pub id: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    pub graph: Graph,
    pub expected_spectrum: IntegerSpectrum,
    pub vertices: usize,
    pub edges: usize,
}

fn spectrum(pairs: &[(i64, usize)]) -> IntegerSpectrum {
    IntegerSpectrum::from_multiplicities(pairs)
}

fn edges(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::new(n, e).expect("catalog edge lists are valid")
}

/// One-based edge list as drawn, shifted to zero-based vertices.
fn edges_1(n: usize, e: &[(usize, usize)]) -> Graph {
    let shifted: Vec<(usize, usize)> = e.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    edges(n, &shifted)
}

pub fn known_graph(id: &str) -> Result<KnownGraph, CatalogError> {
    let (description, graph, expected) = match id {
        "G1" => ("triangle K3", Graph::complete(3).unwrap(), spectrum(&[(4, 1), (1, 2)])),
        "G2" => (
            "two triangles joined by an edge",
            edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5), (4, 5)]),
            spectrum(&[(5, 1), (4, 1), (2, 1), (1, 3)]),
        ),
        "G3" => ("complete graph K4", Graph::complete(4).unwrap(), spectrum(&[(6, 1), (2, 3)])),
        "G4" => (
            "Petersen graph",
            // outer pentagram n1..n5, inner cycle b1..b5, spokes n_i b_i
            edges_1(10, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1), (6, 7), (7, 8), (8, 9), (9, 10), (10, 6), (1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]),
            spectrum(&[(6, 1), (4, 5), (1, 4)]),
        ),
        "G5" => (
            "triangular prism K3 x K2",
            Graph::complete(3).unwrap().cartesian_product(&Graph::complete(2).unwrap()).unwrap(),
            spectrum(&[(6, 1), (4, 1), (3, 2), (1, 2)]),
        ),
        "G6" => (
            "10-vertex, 15-edge graph",
            edges_1(10, &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 2), (5, 6), (6, 7), (7, 5), (3, 9), (7, 8), (4, 8), (6, 9), (1, 10), (9, 10), (8, 10)]),
            spectrum(&[(6, 1), (5, 1), (4, 3), (2, 2), (1, 3)]),
        ),
        "G7" => (
            "12-vertex, 18-edge graph",
            // c0 c1 c2 b0 b1 b2 x0 x1 y0 y1 z0 z1
            edges(
                12,
                &[
                    (3, 4),
                    (3, 5),
                    (5, 4),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                    (0, 6),
                    (1, 8),
                    (2, 10),
                    (0, 7),
                    (1, 9),
                    (2, 11),
                    (6, 7),
                    (8, 9),
                    (10, 11),
                    (6, 9),
                    (8, 11),
                    (10, 7),
                ],
            ),
            spectrum(&[(6, 1), (5, 3), (3, 2), (2, 3), (1, 3)]),
        ),
        "G8" => ("striped fish", edges_1(6, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]), spectrum(&[(6, 1), (4, 1), (2, 2), (1, 2)])),
        other => return Err(CatalogError::UnknownGraph(other.to_string())),
    };
    let id = KNOWN_IDS.iter().copied().find(|k| *k == id).unwrap();
    Ok(KnownGraph { id, description, vertices: graph.order(), edges: graph.size(), graph, expected_spectrum: expected })
}

pub fn known_graphs() -> Vec<KnownGraph> {
    KNOWN_IDS.iter().map(|id| known_graph(id).unwrap()).collect()
}

/// Radius used by every scenario.
pub const SCENARIO_RHO: u32 = 6;
/// Edge-degree cap inside the scenarios: the maximum edge-degree is exactly 5.
pub const SCENARIO_EDGE_CAP: u32 = 5;

/// A search problem with its expected set of completed graphs.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    pub rho: u32,
    pub seeds: Vec<SearchNode>,
    /// Catalog ids of the graphs the search must find, in sorted order.
    pub expected: Vec<&'static str>,
}

// Named seed vertices.
const X: usize = 0;
const Y: usize = 1;

/// A seed graph before any optional edges are added.
struct Base {
    order: usize,
    edges: &'static [(usize, usize)],
    /// Pairs among the non-pinned vertices that may carry an extra edge.
    free: &'static [(usize, usize)],
}

// x=0, y=1, x0=2, y0=3, y1=4; y0 and y1 are common neighbours
const TWO_COMMON: Base = Base { order: 5, edges: &[(X, Y), (X, 2), (X, 3), (X, 4), (Y, 3), (Y, 4)], free: &[(2, 3), (2, 4), (3, 4)] };

// x=0, y=1, x0=2, x1=3, y0=4, y1=5; y1 is the common neighbour
const T32: Base = Base { order: 6, edges: &[(X, 2), (X, 3), (X, 5), (X, Y), (Y, 4), (Y, 5)], free: &[(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)] };
const T_X0: usize = 2;
const T_X1: usize = 3;
const T_Y0: usize = 4;
const T_Y1: usize = 5;

// x=0, y=1, x0=2, x1=3, x2=4, y0=5, y1=6
const S32: Base = Base {
    order: 7,
    edges: &[(X, 2), (X, 3), (X, 4), (X, Y), (Y, 5), (Y, 6)],
    free: &[(2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
};
const S_X0: usize = 2;
const S_X1: usize = 3;
const S_X2: usize = 4;
const S_Y0: usize = 5;
const S_Y1: usize = 6;

/// Seed node for a graph containing the pinned edge `xy` as vertices 0, 1.
pub fn pinned_seed(g: Graph, rho: u32, edge_cap: u32) -> Result<SearchNode, SearchError> {
    let cons = DegreeConstraint::defaults(&g, rho).pin(X, 4).pin(Y, 3).with_edge_degree_cap(edge_cap);
    let mut colors = vec![0u8; g.order()];
    colors[X] = 1;
    colors[Y] = 2;
    SearchNode::seed(g, cons, VertexColoring::new(colors), GateMode::default())
}

fn seed(base: &Base, extra: &[(usize, usize)], attached: &[usize]) -> SearchNode {
    let mut e: Vec<(usize, usize)> = base.edges.to_vec();
    e.extend_from_slice(extra);
    let mut n = base.order;
    if !attached.is_empty() {
        e.extend(attached.iter().map(|&v| (v, n)));
        n += 1;
    }
    pinned_seed(edges(n, &e), SCENARIO_RHO, SCENARIO_EDGE_CAP).expect("scenario seeds are connected")
}

/// The base with every subset of its free pairs added.
fn family(base: &Base) -> Vec<SearchNode> {
    (0u32..1 << base.free.len())
        .map(|mask| {
            let extra: Vec<(usize, usize)> = (0..base.free.len()).filter(|i| mask >> i & 1 == 1).map(|i| base.free[i]).collect();
            seed(base, &extra, &[])
        })
        .collect()
}

pub const SCENARIO_IDS: [&str; 22] = [
    "lemma-2common",
    "lemma-t32-two-edges",
    "lemma-t32-x1y0",
    "lemma-t32-one-edge-a",
    "lemma-t32-one-edge-b",
    "lemma-t32-no-edge",
    "lemma-t32-no-edge-a",
    "lemma-t32-no-edge-b",
    "lemma-t32-no-edge-c",
    "lemma-t32-no-edge-d",
    "lemma-s32-shared-a",
    "lemma-s32-shared-b",
    "lemma-s32-two-edges-a",
    "lemma-s32-two-edges-b",
    "lemma-s32-two-edges-c",
    "lemma-s32-one-edge-a",
    "lemma-s32-one-edge-b",
    "lemma-s32-one-edge-c",
    "lemma-s32-no-edge",
    "seed-t32",
    "seed-s32",
    "seed-xy",
];

pub fn scenario(id: &str) -> Result<Scenario, CatalogError> {
    let none: Vec<&'static str> = Vec::new();
    let (description, seeds, expected): (&'static str, Vec<SearchNode>, Vec<&'static str>) = match id {
        "lemma-2common" => ("x and y with two common neighbours, any edges among x0, y0, y1", family(&TWO_COMMON), none),
        "lemma-t32-two-edges" => ("T32 plus x0x1 and y0y1", vec![seed(&T32, &[(T_X0, T_X1), (T_Y0, T_Y1)], &[])], vec!["G8"]),
        "lemma-t32-x1y0" => ("T32 plus x1y0", vec![seed(&T32, &[(T_X1, T_Y0)], &[])], none),
        "lemma-t32-one-edge-a" => ("T32 plus x0x1", vec![seed(&T32, &[(T_X0, T_X1)], &[])], none),
        "lemma-t32-one-edge-b" => ("T32 plus x0y0", vec![seed(&T32, &[(T_X0, T_Y0)], &[])], none),
        "lemma-t32-no-edge" => ("T32 with no extra edge", vec![seed(&T32, &[], &[])], none),
        "lemma-t32-no-edge-a" => ("T32, new vertex on x0 and y1", vec![seed(&T32, &[], &[T_X0, T_Y1])], none),
        "lemma-t32-no-edge-b" => ("T32, new vertex on x0 and x1", vec![seed(&T32, &[], &[T_X0, T_X1])], none),
        "lemma-t32-no-edge-c" => ("T32, new vertex on x0 and y0", vec![seed(&T32, &[], &[T_X0, T_Y0])], none),
        "lemma-t32-no-edge-d" => ("T32, new vertex on x0 only", vec![seed(&T32, &[], &[T_X0])], none),
        "lemma-s32-shared-a" => ("S32 plus x0x1 and x0y0", vec![seed(&S32, &[(S_X0, S_X1), (S_X0, S_Y0)], &[])], none),
        "lemma-s32-shared-b" => ("S32 plus y0x0 and y0y1", vec![seed(&S32, &[(S_X0, S_Y0), (S_Y0, S_Y1)], &[])], none),
        "lemma-s32-two-edges-a" => ("S32 plus x0y0 and x1y1", vec![seed(&S32, &[(S_X0, S_Y0), (S_X1, S_Y1)], &[])], none),
        "lemma-s32-two-edges-b" => ("S32 plus x0y0 and x1x2", vec![seed(&S32, &[(S_X0, S_Y0), (S_X1, S_X2)], &[])], none),
        "lemma-s32-two-edges-c" => ("S32 plus x0x1 and y0y1", vec![seed(&S32, &[(S_X0, S_X1), (S_Y0, S_Y1)], &[])], none),
        "lemma-s32-one-edge-a" => ("S32 plus x0y0", vec![seed(&S32, &[(S_X0, S_Y0)], &[])], none),
        "lemma-s32-one-edge-b" => ("S32 plus x0x1", vec![seed(&S32, &[(S_X0, S_X1)], &[])], none),
        "lemma-s32-one-edge-c" => ("S32 plus y0y1", vec![seed(&S32, &[(S_Y0, S_Y1)], &[])], none),
        "lemma-s32-no-edge" => ("S32 with no extra edge", vec![seed(&S32, &[], &[])], none),
        "seed-t32" => ("T32 with any edges among x0, x1, y0, y1", family(&T32), vec!["G8"]),
        "seed-s32" => ("S32 with any edges among x0, x1, x2, y0, y1", family(&S32), none),
        "seed-xy" => ("the edge xy alone", vec![pinned_seed(Graph::complete(2).unwrap(), SCENARIO_RHO, SCENARIO_EDGE_CAP)?], vec!["G8"]),
        other => return Err(CatalogError::UnknownScenario(other.to_string())),
    };
    let id = SCENARIO_IDS.iter().copied().find(|k| *k == id).unwrap();
    Ok(Scenario { id, description, rho: SCENARIO_RHO, seeds, expected })
}

/// T32 with the extra edge x1y0, in the seed vertex numbering.
pub fn t32_prime() -> Graph {
    edges(T32.order, &[T32.edges, &[(T_X1, T_Y0)]].concat())
}

/// Seed vertex indices of T32: `(x, y, x0, x1, y0, y1)`.
pub const T32_VERTICES: (usize, usize, usize, usize, usize, usize) = (X, Y, T_X0, T_X1, T_Y0, T_Y1);

/// Seed vertex indices of S32: `(x, y, x0, x1, x2, y0, y1)`.
pub const S32_VERTICES: (usize, usize, usize, usize, usize, usize, usize) = (X, Y, S_X0, S_X1, S_X2, S_Y0, S_Y1);
