//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so neighbourhood
//! intersections and degree counts are single popcounts. Edges are always
//! enumerated in lexicographic order `(u, v)` with `u < v`; the incidence
//! matrix and the vertex order of the line graph follow that order.

use std::fmt;

use thiserror::Error;

use crate::linalg::IntMatrix;

/// Largest supported vertex count (one machine word per adjacency row).
pub const MAX_VERTICES: usize = 64;

/// Vertex set as a bitmask.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..=64")]
    BadOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("result would have {0} vertices, more than 64")]
    TooLarge(usize),
    #[error("edge list parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list, rejecting loops,
    /// duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mask = full_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 63 - (row & !mask).leading_zeros() as usize, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::Loop(u));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::NotAnEdge(v, u));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|r| r.count_ones()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|r| r.count_ones()).max().unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Number of edges sharing an endpoint with `uv`: `deg(u) + deg(v) - 2`.
    pub fn edge_degree(&self, u: usize, v: usize) -> Result<u32, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.degree(u) + self.degree(v) - 2)
    }

    /// Largest edge-degree, `None` for edgeless graphs.
    pub fn max_edge_degree(&self) -> Option<u32> {
        self.edges().into_iter().map(|(u, v)| self.degree(u) + self.degree(v) - 2).max()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == full_mask(self.n)
    }

    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen: u64 = 1 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::TwoColoring(_))
    }

    /// BFS 2-colouring, or an odd closed walk proving none exists.
    pub fn bipartition(&self) -> Bipartition {
        const UNSEEN: u8 = 2;
        let mut color = vec![UNSEEN; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if color[root] != UNSEEN {
                continue;
            }
            color[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in bits(self.adj[u]) {
                    if color[v] == UNSEEN {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        // root .. u, v .. root closes an odd walk
                        let mut walk = path_to_root(&parent, u);
                        walk.reverse();
                        walk.extend(path_to_root(&parent, v));
                        return Bipartition::OddClosedWalk(walk);
                    }
                }
            }
        }
        Bipartition::TwoColoring(color)
    }

    /// Subgraph induced on `verts`, relabelled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            if u >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
            }
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Appends a vertex adjacent to exactly `nbrs`. The new vertex gets index `n`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::TooLarge(self.n + 1));
        }
        if nbrs & !full_mask(self.n) != 0 {
            return Err(GraphError::VertexOutOfRange { vertex: 63 - nbrs.leading_zeros() as usize, n: self.n });
        }
        let mut adj = self.adj.clone();
        for v in bits(nbrs) {
            adj[v] |= 1 << self.n;
        }
        adj.push(nbrs);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Deletes vertex `v`; higher indices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let low = (1u64 << v) - 1;
        let adj = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let r = self.adj[u];
                (r & low) | ((r >> 1) & !low)
            })
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = 0;
            for v in bits(self.adj[u]) {
                row |= 1 << perm[v];
            }
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| self.has_edge(i, j) as i64)
    }

    /// Vertex-edge incidence matrix, columns in [`Graph::edges`] order.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let edges = self.edges();
        IntMatrix::from_fn(self.n, edges.len(), |v, e| (edges[e].0 == v || edges[e].1 == v) as i64)
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        let mut g = Graph::empty(edges.len()).map_err(|_| GraphError::TooLarge(edges.len()))?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Replaces every edge by a path of length two. Original vertices keep
    /// their indices; the midpoint of edge `i` is vertex `n + i`.
    pub fn subdivision(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        let total = self.n + edges.len();
        let mut g = Graph::empty(total).map_err(|_| GraphError::TooLarge(total))?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.set_edge(u, self.n + i);
            g.set_edge(v, self.n + i);
        }
        Ok(g)
    }

    /// Cartesian product; pair `(x, u)` is vertex `x * h.order() + u`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph, GraphError> {
        let m = h.n;
        let total = self.n * m;
        let mut g = Graph::empty(total).map_err(|_| GraphError::TooLarge(total))?;
        for x in 0..self.n {
            for (u, v) in h.edges() {
                g.set_edge(x * m + u, x * m + v);
            }
        }
        for (x, y) in self.edges() {
            for u in 0..m {
                g.set_edge(x * m + u, y * m + u);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1 << u);
        }
        Ok(g)
    }

    /// `K_{a,b}`: the first `a` vertices form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::BadOrder(n));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.set_edge(u, (u + 1) % n);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.set_edge(u - 1, u);
        }
        Ok(g)
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines `u v`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut tokens = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            let mut pos = 0;
            for tok in body.split(|c: char| c.is_ascii_whitespace()) {
                if !tok.is_empty() {
                    tokens.push((offset + pos, tok));
                }
                pos += tok.len() + 1;
            }
            offset += line.len();
        }
        let num = |i: usize| -> Result<usize, GraphError> {
            let (off, tok) = *tokens.get(i).ok_or(GraphError::Parse { offset: text.len(), msg: "unexpected end of input".into() })?;
            tok.parse::<usize>().map_err(|_| GraphError::Parse { offset: off, msg: format!("expected a non-negative integer, found {tok:?}") })
        };
        let n = num(0)?;
        let m = num(1)?;
        if tokens.len() != 2 + 2 * m {
            let off = tokens.get(2 + 2 * m).map_or(text.len(), |t| t.0);
            return Err(GraphError::Parse { offset: off, msg: format!("header announces {m} edges but {} endpoint tokens follow", tokens.len() - 2) });
        }
        let mut g = Graph::empty(n).map_err(|e| GraphError::Parse { offset: tokens[0].0, msg: e.to_string() })?;
        for e in 0..m {
            let (u, v) = (num(2 + 2 * e)?, num(3 + 2 * e)?);
            let err = |msg: String| GraphError::Parse { offset: tokens[2 + 2 * e].0, msg };
            if u >= n || v >= n {
                return Err(err(GraphError::VertexOutOfRange { vertex: u.max(v), n }.to_string()));
            }
            if u == v {
                return Err(err(GraphError::Loop(u).to_string()));
            }
            if g.has_edge(u, v) {
                return Err(err(GraphError::DuplicateEdge(u.min(v), u.max(v)).to_string()));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Graphviz DOT text, one node per vertex, edges in lexicographic order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Outcome of a bipartiteness test, with a checkable witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    TwoColoring(Vec<u8>),
    /// Closed walk `w[0], .., w[k]` with `w[0] == w[k]` and `k` odd.
    OddClosedWalk(Vec<usize>),
}

impl Bipartition {
    /// Checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Bipartition::TwoColoring(c) => c.len() == g.order() && c.iter().all(|&x| x < 2) && g.edges().iter().all(|&(u, v)| c[u] != c[v]),
            Bipartition::OddClosedWalk(w) => {
                w.len() >= 4
                    && (w.len() - 1) % 2 == 1
                    && w.first() == w.last()
                    && w.windows(2).all(|p| p[0] < g.order() && p[1] < g.order() && g.has_edge(p[0], p[1]))
            }
        }
    }
}

fn path_to_root(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut p = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        p.push(v);
    }
    p
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fish() -> Graph {
        // v1..v6 -> 0..5
        Graph::new(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::BadOrder(0)));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::BadOrder(65)));
    }

    #[test]
    fn build_examples() {
        let k3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let one = Graph::new(1, &[]).unwrap();
        assert_eq!((one.order(), one.size()), (1, 0));
        let f = fish();
        assert_eq!((f.order(), f.size()), (6, 8));
        assert_eq!(f.degrees(), vec![2, 2, 4, 3, 3, 2]);
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.is_connected());
        assert!(!k3.is_bipartite());
        let p3 = Graph::path(3).unwrap();
        assert!(p3.is_connected() && p3.is_bipartite());
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        for g in [k3, p3, two_edges, fish(), Graph::cycle(5).unwrap(), Graph::cycle(6).unwrap()] {
            assert!(g.bipartition().verify(&g));
        }
    }

    #[test]
    fn edge_degrees() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.edge_degree(0, 1), Ok(2));
        // v3v4 in 1-based labels
        assert_eq!(fish().edge_degree(2, 3), Ok(5));
        assert_eq!(Graph::complete(2).unwrap().edge_degree(0, 1), Ok(0));
        assert_eq!(k3.edge_degree(0, 0), Err(GraphError::NotAnEdge(0, 0)));
        assert_eq!(Graph::path(3).unwrap().edge_degree(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn incidence_products() {
        let k2 = Graph::complete(2).unwrap();
        let r = k2.incidence_matrix();
        assert_eq!(r.mul(&r.transpose()), IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]));
        let k3 = Graph::complete(3).unwrap();
        let r = k3.incidence_matrix();
        assert_eq!(r.mul(&r.transpose()), IntMatrix::from_rows(vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]));
        let p3 = Graph::path(3).unwrap();
        let r = p3.incidence_matrix();
        assert_eq!(r.transpose().mul(&r), IntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]));
    }

    #[test]
    fn constructions() {
        assert_eq!(Graph::path(3).unwrap().line_graph().unwrap(), Graph::complete(2).unwrap());
        assert_eq!(Graph::empty(3).unwrap().line_graph(), Err(GraphError::NoEdges));
        let s = Graph::complete(3).unwrap().subdivision().unwrap();
        assert_eq!((s.order(), s.size(), s.max_degree()), (6, 6, 2));
        assert!(s.is_connected());
        let prism = Graph::complete(3).unwrap().cartesian_product(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!((prism.order(), prism.size()), (6, 9));
        assert!(prism.degrees().iter().all(|&d| d == 3));
        let big = Graph::complete(8).unwrap();
        assert_eq!(big.cartesian_product(&big).map(|g| g.order()), Ok(64));
        assert_eq!(big.cartesian_product(&Graph::complete(9).unwrap()), Err(GraphError::TooLarge(72)));
        assert_eq!(Graph::complete_bipartite(2, 3).unwrap().size(), 6);
    }

    #[test]
    fn vertex_surgery() {
        let f = fish();
        let g = f.with_vertex(0b100001).unwrap();
        assert_eq!(g.order(), 7);
        assert!(g.has_edge(6, 0) && g.has_edge(5, 6));
        assert_eq!(g.without_vertex(6), f);
        let h = f.without_vertex(2);
        assert_eq!(h, f.induced(&[0, 1, 3, 4, 5]).unwrap());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let f = fish();
        assert_eq!(Graph::parse_edge_list(&f.to_edge_list()).unwrap(), f);
        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, GraphError::Parse { offset: 10, msg: "expected a non-negative integer, found \"x\"".into() });
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 1 2\n"), Err(GraphError::Parse { offset: 8, .. })));
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n1 0\n"), Err(GraphError::Parse { offset: 8, .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 3\n"), Err(GraphError::Parse { offset: 4, .. })));
    }

    #[test]
    fn dot_output() {
        let dot = Graph::complete(3).unwrap().to_dot("K3");
        assert_eq!(dot, "graph K3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
    }
}
