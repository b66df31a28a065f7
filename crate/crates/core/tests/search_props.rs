//! Extension search: soundness, determinism, mode equivalence and agreement
//! with the brute-force enumerator.

use std::collections::BTreeSet;

use qint_core::catalog::{scenario, SCENARIO_EDGE_CAP, SCENARIO_IDS};
use qint_core::enumerate::brute_force_enumerate;
use qint_core::search::{run_search, run_search_many, PruningMode, SearchConfig, SearchError, SearchNode, SearchOutcome};
use qint_core::spectral::signless_laplacian;
use qint_core::{canonical_code, encode_graph6, exact_q_spectrum, DegreeConstraint, GateMode, Graph, QGraph, VertexColoring};

fn uniform_code(g: &Graph) -> Vec<u8> {
    canonical_code(g, &VertexColoring::uniform(g.order())).as_bytes().to_vec()
}

fn found_set(out: &SearchOutcome) -> BTreeSet<Vec<u8>> {
    out.found.iter().map(|(g, _)| uniform_code(g)).collect()
}

fn single_vertex(rho: u32) -> SearchNode {
    let g = Graph::empty(1).unwrap();
    let cons = DegreeConstraint::defaults(&g, rho);
    SearchNode::seed(g, cons, VertexColoring::uniform(1), GateMode::default()).unwrap()
}

#[test]
fn found_graphs_are_sound() {
    for id in SCENARIO_IDS {
        let sc = scenario(id).unwrap();
        let out = run_search_many(sc.seeds, sc.rho, &SearchConfig::default()).unwrap();
        for (g, s) in &out.found {
            assert!(g.is_connected() && !g.is_bipartite(), "{id}: {}", encode_graph6(g));
            assert_eq!(exact_q_spectrum(&signless_laplacian(g)).unwrap().as_ref(), Some(s));
            assert_eq!(s.largest(), Some(sc.rho as i64));
            assert!(g.max_degree() + 2 <= sc.rho);
            assert!(g.max_edge_degree().unwrap() <= SCENARIO_EDGE_CAP);
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let run = || {
        let sc = scenario("seed-t32").unwrap();
        let out = run_search_many(sc.seeds, sc.rho, &SearchConfig::default()).unwrap();
        let found: Vec<String> = out.found.iter().map(|(g, s)| format!("{} {s}", encode_graph6(g))).collect();
        (found, out.explored, out.deduped, out.frontier_exhausted, out.cap_hit, out.levels)
    };
    assert_eq!(run(), run());
}

#[test]
fn dedup_off_collapses_to_the_dedup_on_set() {
    let sc = scenario("seed-t32").unwrap();
    let on = run_search_many(sc.seeds.clone(), sc.rho, &SearchConfig::default()).unwrap();
    let off = run_search_many(sc.seeds, sc.rho, &SearchConfig { dedup: false, ..Default::default() }).unwrap();
    assert_eq!(found_set(&on), found_set(&off));
    assert!(off.found.len() >= on.found.len());
    assert!(off.explored >= on.explored);
}

#[test]
fn small_radius_searches_match_the_enumerator() {
    for rho in [4u32, 5] {
        let oracle: BTreeSet<Vec<u8>> =
            brute_force_enumerate(8, rho).unwrap().into_iter().filter(|(_, s)| s.largest() == Some(rho as i64)).map(|(g, _)| uniform_code(&g)).collect();
        assert!(!oracle.is_empty());
        for mode in [PruningMode::DeficientOne, PruningMode::DeficientAny, PruningMode::Off] {
            let cfg = SearchConfig { max_vertices: 8, pruning_mode: mode, ..Default::default() };
            let out = run_search(single_vertex(rho), rho, &cfg).unwrap();
            assert_eq!(found_set(&out), oracle, "rho = {rho}, {mode:?}");
        }
    }
}

#[test]
fn pinned_edge_search_matches_the_enumerator() {
    // every graph up to 8 vertices with radius 6, maximum edge-degree 5 and
    // an edge whose ends have degrees 4 and 3
    let oracle: BTreeSet<Vec<u8>> = brute_force_enumerate(8, 6)
        .unwrap()
        .into_iter()
        .filter(|(g, s)| {
            s.largest() == Some(6)
                && g.max_edge_degree() == Some(SCENARIO_EDGE_CAP)
                && g.edges().iter().any(|&(u, v)| (g.degree(u), g.degree(v)) == (4, 3) || (g.degree(u), g.degree(v)) == (3, 4))
        })
        .map(|(g, _)| uniform_code(&g))
        .collect();
    let sc = scenario("seed-xy").unwrap();
    let out = run_search_many(sc.seeds, sc.rho, &SearchConfig::default()).unwrap();
    assert!(out.frontier_exhausted);
    assert_eq!(found_set(&out), oracle);
}

#[test]
fn cap_hit_is_reported() {
    let cfg = SearchConfig { max_vertices: 3, ..Default::default() };
    let out = run_search(single_vertex(5), 5, &cfg).unwrap();
    assert!(out.cap_hit);
    assert!(!out.frontier_exhausted);
    assert!(out.found.is_empty());
}

#[test]
fn seeds_are_validated() {
    let cfg = SearchConfig::default();
    assert!(matches!(run_search(single_vertex(5), 6, &cfg), Err(SearchError::RhoMismatch { .. })));
    let big = SearchConfig { max_vertices: 21, ..Default::default() };
    assert!(run_search(single_vertex(5), 5, &big).is_err());
    // an empty degree-function list is an immediately exhausted search
    let k5 = Graph::complete(5).unwrap();
    let cons = DegreeConstraint::defaults(&k5, 6);
    let seed = SearchNode::seed(k5, cons, VertexColoring::uniform(5), GateMode::default()).unwrap();
    let out = run_search(seed, 6, &cfg).unwrap();
    assert!(out.frontier_exhausted && out.found.is_empty() && out.explored == 0);
}

#[test]
fn completion_requires_own_degrees() {
    // K3 at radius 4 completes; the single pinned vertex does not
    let k3 = Graph::complete(3).unwrap();
    let seed = SearchNode::seed(k3.clone(), DegreeConstraint::defaults(&k3, 4), VertexColoring::uniform(3), GateMode::default()).unwrap();
    assert!(seed.completion().is_some());
    assert!(QGraph::new(k3, vec![2, 2, 2]).is_ok());
    assert!(single_vertex(6).completion().is_none());
}

#[test]
fn t32_prime_second_level_degrees() {
    use qint_core::catalog::{pinned_seed, t32_prime, T32_VERTICES};
    use qint_core::search::expand;
    let (x, y, x0, x1, y0, y1) = T32_VERTICES;
    let node = pinned_seed(t32_prime(), 6, SCENARIO_EDGE_CAP).unwrap();
    let e = expand(&node, &SearchConfig::default());
    let z1 = node.graph().order();
    for child in &e.children {
        let lists: Vec<&[u32]> = child.dlist().iter().collect();
        assert!(!lists.is_empty());
        if child.graph().has_edge(z1, y0) {
            // z1 on x0 and y0: y0 already has degree 3 here, so the only
            // admissible degrees are x0 = 2, x1 = 3, y0 = 3, y1 = 2, z1 = 4
            assert_eq!(lists.len(), 1);
            let d = lists[0];
            assert_eq!((d[x], d[y], d[x0], d[x1], d[y0], d[y1], d[z1]), (4, 3, 2, 3, 3, 2, 4));
        } else {
            assert!(lists.iter().all(|d| d[x0] == 3), "{lists:?}");
        }
    }
}
