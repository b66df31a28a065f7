//! Vertex-extension search over induced Q-subgraph hypotheses.
//!
//! A node is a connected graph `H` with degree constraints and its list of
//! admissible degree functions. Expanding a node attaches one new vertex to
//! every admissible neighbour set `S`; a child survives when its own list is
//! non-empty. A node whose own degrees are admissible with largest eigenvalue
//! exactly `rho` is a candidate for the whole graph and is checked for
//! Q-integrality. Levels are expanded breadth-first, in parallel, and merged
//! in a fixed order so the outcome does not depend on scheduling.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode, VertexColoring};
use crate::feasibility::{
    enumerate_d_list_with, extend_d_list_cached, DList, DListSpectra, DegreeConstraint, FeasibilityError, GateMode, DEFAULT_ESCALATION_MARGIN,
};
use crate::graph::{bits, Graph, VertexSet};
use crate::spectral::{exact_q_spectrum, signless_laplacian, IntegerSpectrum};

/// Largest hypothesis the search will build.
pub const MAX_SEARCH_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("max_vertices = {0} exceeds the supported {MAX_SEARCH_VERTICES}")]
    MaxVerticesTooLarge(usize),
    #[error("escalation margin must be positive, got {0}")]
    BadMargin(f64),
    #[error("colouring covers {found} vertices, graph has {expected}")]
    ColoringLength { expected: usize, found: usize },
    #[error("seed has {0} vertices, more than max_vertices")]
    SeedTooLarge(usize),
    #[error("seed constraint is for rho = {found}, search runs at rho = {expected}")]
    RhoMismatch { expected: u32, found: u32 },
    #[error(transparent)]
    Feasibility(#[from] FeasibilityError),
}

/// Which attachment sets a node may try.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PruningMode {
    /// `S` must contain the lowest-index deficient vertex.
    #[default]
    DeficientOne,
    /// `S` must meet the deficient set.
    DeficientAny,
    /// Every non-empty `S`.
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub max_vertices: usize,
    pub pruning_mode: PruningMode,
    pub dedup: bool,
    pub exact_escalation_margin: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_vertices: 16, pruning_mode: PruningMode::DeficientOne, dedup: true, exact_escalation_margin: DEFAULT_ESCALATION_MARGIN }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_vertices > MAX_SEARCH_VERTICES {
            return Err(SearchError::MaxVerticesTooLarge(self.max_vertices));
        }
        if self.exact_escalation_margin.is_nan() || self.exact_escalation_margin <= 0.0 {
            return Err(SearchError::BadMargin(self.exact_escalation_margin));
        }
        Ok(())
    }

    /// Gate mode for seed d-lists and extensions.
    pub fn gate_mode(&self) -> GateMode {
        GateMode::Prefilter { margin: self.exact_escalation_margin }
    }
}

/// A hypothesis `H` with its constraints, colouring and admissible degree functions.
#[derive(Debug, Clone)]
pub struct SearchNode {
    graph: Graph,
    cons: DegreeConstraint,
    colors: VertexColoring,
    dlist: DList,
    depth: usize,
}

impl SearchNode {
    /// Seed node; its degree-function list is computed here and may be empty.
    pub fn seed(graph: Graph, cons: DegreeConstraint, colors: VertexColoring, mode: GateMode) -> Result<Self, SearchError> {
        if colors.len() != graph.order() {
            return Err(SearchError::ColoringLength { expected: graph.order(), found: colors.len() });
        }
        let dlist = enumerate_d_list_with(&graph, &cons, cons.rho(), mode)?;
        Ok(SearchNode { graph, cons, colors, dlist, depth: 0 })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn constraint(&self) -> &DegreeConstraint {
        &self.cons
    }

    pub fn colors(&self) -> &VertexColoring {
        &self.colors
    }

    pub fn dlist(&self) -> &DList {
        &self.dlist
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn code(&self) -> CanonicalCode {
        canonical_code(&self.graph, &self.colors)
    }

    /// Vertices whose degree in `H` is below every admissible `d(v)` other
    /// than `H`'s own degrees.
    pub fn deficient(&self) -> VertexSet {
        let own = self.graph.degrees();
        match self.dlist.open_minimum(&own) {
            Some(min) => (0..self.graph.order()).filter(|&v| own[v] < min[v]).fold(0, |m, v| m | 1 << v),
            None => 0,
        }
    }

    /// Vertices that can still take another neighbour under some admissible `d`.
    fn slack(&self) -> VertexSet {
        let own = self.graph.degrees();
        match self.dlist.maximum() {
            Some(max) => (0..self.graph.order()).filter(|&v| own[v] < max[v]).fold(0, |m, v| m | 1 << v),
            None => 0,
        }
    }

    /// Neighbour sets for a new vertex, in increasing bitmask order.
    pub fn attachments(&self, mode: PruningMode) -> Vec<VertexSet> {
        let own = self.graph.degrees();
        if self.dlist.open_minimum(&own).is_none() {
            return Vec::new();
        }
        let slack = self.slack();
        let deficient = self.deficient();
        let required = match mode {
            PruningMode::DeficientOne if deficient != 0 => 1u64 << deficient.trailing_zeros(),
            _ => 0,
        };
        let must_meet = if mode == PruningMode::DeficientAny { deficient } else { 0 };
        if required & !slack != 0 {
            return Vec::new();
        }
        let max_size = (self.cons.rho() - 2) as usize;
        let pool: Vec<usize> = bits(slack).collect();
        let mut out = Vec::new();
        for sub in 1u64..(1u64 << pool.len()) {
            if sub.count_ones() as usize > max_size {
                continue;
            }
            let s = bits(sub).fold(0u64, |m, i| m | 1 << pool[i]);
            if s & required != required || (must_meet != 0 && s & must_meet == 0) {
                continue;
            }
            out.push(s);
        }
        out.sort_unstable();
        out
    }

    /// Eigendecompositions of every admissible Q-matrix, shared by all children.
    pub fn spectra(&self) -> DListSpectra {
        DListSpectra::new(&self.dlist, &self.graph)
    }

    /// Child with a new vertex adjacent to `s`, kept only when its list is non-empty.
    pub fn child(&self, s: VertexSet, spectra: &DListSpectra, mode: GateMode) -> Option<SearchNode> {
        let graph = self.graph.with_vertex(s).ok()?;
        let cons = self.cons.extended(s.count_ones());
        let dlist = extend_d_list_cached(&self.dlist, spectra, &graph, &cons, self.cons.rho(), mode);
        if dlist.is_empty() {
            return None;
        }
        let mut colors = self.colors.colors().to_vec();
        colors.push(0);
        Some(SearchNode { graph, cons, colors: VertexColoring::new(colors), dlist, depth: self.depth + 1 })
    }

    /// The completed graph when `H` itself is admissible with largest
    /// eigenvalue `rho` and has an integral, non-bipartite spectrum.
    pub fn completion(&self) -> Option<(Graph, IntegerSpectrum)> {
        self.dlist.saturated_candidate()?;
        if self.graph.is_bipartite() {
            return None;
        }
        let spectrum = exact_q_spectrum(&signless_laplacian(&self.graph)).ok()??;
        Some((self.graph.clone(), spectrum))
    }
}

/// Result of expanding one node.
#[derive(Debug, Clone, Default)]
pub struct Expansion {
    pub children: Vec<SearchNode>,
    pub found: Option<(Graph, IntegerSpectrum)>,
    /// Children not built because they would exceed `max_vertices`.
    pub over_cap: usize,
}

pub fn expand(node: &SearchNode, cfg: &SearchConfig) -> Expansion {
    let found = node.completion();
    let mode = cfg.gate_mode();
    let mut out = Expansion { found, ..Default::default() };
    let attachments = node.attachments(cfg.pruning_mode);
    if attachments.is_empty() {
        return out;
    }
    let spectra = node.spectra();
    for s in attachments {
        if node.graph.order() + 1 > cfg.max_vertices {
            // only a surviving child proves the cap mattered
            if node.child(s, &spectra, mode).is_some() {
                out.over_cap += 1;
            }
            continue;
        }
        if let Some(c) = node.child(s, &spectra, mode) {
            out.children.push(c);
        }
    }
    out
}

/// Per-level counters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LevelStats {
    pub depth: usize,
    pub nodes: usize,
    pub children: usize,
    pub deduped: usize,
    pub found: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    /// Completed graphs sorted by canonical code; unique unless dedup is off.
    pub found: Vec<(Graph, IntegerSpectrum)>,
    pub explored: usize,
    pub deduped: usize,
    pub frontier_exhausted: bool,
    pub cap_hit: bool,
    pub levels: Vec<LevelStats>,
}

impl SearchOutcome {
    /// Canonical codes of the found graphs with duplicates removed.
    pub fn found_codes(&self) -> Vec<CanonicalCode> {
        let mut codes: Vec<CanonicalCode> = self.found.iter().map(|(g, _)| uncoloured_code(g)).collect();
        codes.dedup();
        codes
    }
}

fn uncoloured_code(g: &Graph) -> CanonicalCode {
    canonical_code(g, &VertexColoring::uniform(g.order()))
}

pub fn run_search(seed: SearchNode, rho: u32, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    run_search_many(vec![seed], rho, cfg)
}

/// Breadth-first search from several seeds sharing one dedup set.
pub fn run_search_many(seeds: Vec<SearchNode>, rho: u32, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let mut outcome = SearchOutcome::default();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut frontier = Vec::new();
    for s in seeds {
        if s.cons.rho() != rho {
            return Err(SearchError::RhoMismatch { expected: rho, found: s.cons.rho() });
        }
        if s.graph.order() > cfg.max_vertices {
            return Err(SearchError::SeedTooLarge(s.graph.order()));
        }
        if s.dlist.is_empty() {
            continue;
        }
        if cfg.dedup && !seen.insert(s.code()) {
            outcome.deduped += 1;
            continue;
        }
        frontier.push(s);
    }

    let mut depth = 0;
    while !frontier.is_empty() {
        let expansions: Vec<Expansion> = frontier.par_iter().map(|n| expand(n, cfg)).collect();
        let mut stats = LevelStats { depth, nodes: frontier.len(), ..Default::default() };
        outcome.explored += frontier.len();
        let mut next = Vec::new();
        for e in expansions {
            if e.over_cap > 0 {
                outcome.cap_hit = true;
            }
            if let Some(f) = e.found {
                stats.found += 1;
                outcome.found.push(f);
            }
            stats.children += e.children.len();
            if cfg.dedup {
                let codes: Vec<CanonicalCode> = e.children.par_iter().map(SearchNode::code).collect();
                for (c, code) in e.children.into_iter().zip(codes) {
                    if seen.insert(code) {
                        next.push(c);
                    } else {
                        stats.deduped += 1;
                    }
                }
            } else {
                next.extend(e.children);
            }
        }
        outcome.deduped += stats.deduped;
        outcome.levels.push(stats);
        frontier = next;
        depth += 1;
    }

    let mut keyed: Vec<(CanonicalCode, (Graph, IntegerSpectrum))> = outcome.found.drain(..).map(|f| (uncoloured_code(&f.0), f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    if cfg.dedup {
        keyed.dedup_by(|a, b| a.0 == b.0);
    }
    // report each graph in canonical vertex order
    outcome.found = keyed
        .into_iter()
        .map(|(_, (g, s))| {
            let can = crate::canon::canonical_labeling(&g, &VertexColoring::uniform(g.order()));
            (can.form(&g), s)
        })
        .collect();
    outcome.frontier_exhausted = !outcome.cap_hit;
    Ok(outcome)
}
