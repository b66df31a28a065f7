//! Canonical labelling of vertex-coloured graphs.
//!
//! Individualisation-refinement: the initial ordered partition groups
//! vertices by colour, refinement splits cells by neighbour counts into
//! every other cell until the partition is equitable, and the search tree
//! individualises each vertex of the first smallest non-singleton cell in
//! turn. The canonical form is the lexicographically smallest adjacency row
//! sequence over all leaves. Automorphisms discovered at leaves prune
//! children lying in one orbit of the stabiliser of the current prefix.

use std::fmt;

use crate::graph::{bits, Graph};

/// Colour class of every vertex. Canonical labelling only permutes
/// vertices within a class, and classes are ordered by colour value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring(Vec<u8>);

impl VertexColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        VertexColoring(colors)
    }

    pub fn uniform(n: usize) -> Self {
        VertexColoring(vec![0; n])
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Colouring after relabelling vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (v, &c) in self.0.iter().enumerate() {
            out[perm[v]] = c;
        }
        VertexColoring(out)
    }
}

/// Byte string identifying a coloured graph up to colour-preserving isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Canonical labelling: `labels[v]` is the canonical position of vertex `v`.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub labels: Vec<usize>,
    pub code: CanonicalCode,
}

impl Canonical {
    /// The graph relabelled into canonical order.
    pub fn form(&self, g: &Graph) -> Graph {
        g.permuted(&self.labels)
    }
}

pub fn canonical_code(g: &Graph, c: &VertexColoring) -> CanonicalCode {
    canonical_labeling(g, c).code
}

pub fn canonical_labeling(g: &Graph, c: &VertexColoring) -> Canonical {
    assert_eq!(g.order(), c.len(), "colouring length must match the vertex count");
    let n = g.order();
    let mut classes: Vec<u8> = c.colors().to_vec();
    classes.sort_unstable();
    classes.dedup();
    let mut cells: Vec<u64> = classes.iter().map(|&col| (0..n).filter(|&v| c.colors()[v] == col).fold(0u64, |m, v| m | 1 << v)).collect();
    refine(g, &mut cells);

    let mut search = Search { g, best: None, first: None, autos: Vec::new() };
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let (rows, labels) = search.best.expect("search visits at least one leaf");

    let mut code = Vec::with_capacity(1 + n + n * 8);
    code.push(n as u8);
    let mut canon_colors = vec![0u8; n];
    for v in 0..n {
        canon_colors[labels[v]] = c.colors()[v];
    }
    code.extend_from_slice(&canon_colors);
    let row_bytes = n.div_ceil(8);
    for r in rows {
        code.extend_from_slice(&r.to_le_bytes()[..row_bytes]);
    }
    Canonical { labels, code: CanonicalCode(code) }
}

struct Search<'a> {
    g: &'a Graph,
    /// Smallest row sequence so far and the labelling producing it.
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        if cells.len() == self.g.order() {
            self.leaf(&cells);
            return;
        }
        let (ti, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// True when an automorphism fixing `prefix` pointwise links `v` to an
    /// already explored sibling.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let n = self.g.order();
        let stabilisers: Vec<&Vec<usize>> = self.autos.iter().filter(|a| prefix.iter().all(|&p| a[p] == p)).collect();
        if stabilisers.is_empty() {
            return false;
        }
        // orbit of v under the group generated by the stabilisers
        let mut orbit = 1u64 << v;
        let mut frontier = vec![v];
        while let Some(u) = frontier.pop() {
            for a in &stabilisers {
                let w = a[u];
                if orbit >> w & 1 == 0 {
                    orbit |= 1 << w;
                    frontier.push(w);
                }
            }
        }
        debug_assert!(n <= 64);
        explored.iter().any(|&u| orbit >> u & 1 == 1)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.order();
        let mut labels = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            labels[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut r = 0u64;
            for u in bits(self.g.neighbors(v)) {
                r |= 1 << labels[u];
            }
            rows[labels[v]] = r;
        }
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == rows {
                // labels_ref^-1 . labels maps this leaf onto the reference leaf
                let mut inv = vec![0usize; n];
                for (v, &l) in reference.1.iter().enumerate() {
                    inv[l] = v;
                }
                let auto: Vec<usize> = (0..n).map(|v| inv[labels[v]]).collect();
                if auto.iter().enumerate().any(|(i, &j)| i != j) && !self.autos.contains(&auto) {
                    self.autos.push(auto);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((rows.clone(), labels.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
            self.best = Some((rows, labels));
        }
    }
}

/// Refines an ordered partition (cells as bitmasks) to the coarsest
/// equitable refinement, splitting each cell by the vector of neighbour
/// counts into all cells; sub-cells are ordered by that vector.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() > 1 {
                let mut sigs: Vec<(Vec<u8>, usize)> =
                    bits(cell).map(|v| (cells.iter().map(|&c| (g.neighbors(v) & c).count_ones() as u8).collect(), v)).collect();
                if sigs.windows(2).any(|w| w[0].0 != w[1].0) {
                    sigs.sort();
                    let mut parts: Vec<u64> = Vec::new();
                    let mut last: Option<&Vec<u8>> = None;
                    for (sig, v) in &sigs {
                        if last != Some(sig) {
                            parts.push(0);
                            last = Some(sig);
                        }
                        *parts.last_mut().unwrap() |= 1 << v;
                    }
                    let k = parts.len();
                    cells.splice(i..=i, parts);
                    i += k;
                    changed = true;
                    continue;
                }
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
}
