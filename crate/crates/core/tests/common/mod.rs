//! Shared generators and independent oracles for the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qint_core::graph::bits;
use qint_core::linalg::{IntMatrix, IntPolynomial};
use qint_core::{canonical_code, Graph, VertexColoring};

/// Graph on `n` vertices whose edges are chosen by the bits of `mask`,
/// taken over the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<(usize, usize)> = pairs.zip(mask).filter(|(_, &b)| b).map(|(p, _)| p).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |m| graph_from_mask(n, &m)))
}

/// Connected graph: a random spanning tree plus random extra edges.
pub fn arb_connected(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        (parents, proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2)).prop_map(move |(par, extra)| {
            let mut edges: HashSet<(usize, usize)> = par.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            edges.extend(pairs.zip(&extra).filter(|(_, &b)| b).map(|(p, _)| p));
            let mut edges: Vec<_> = edges.into_iter().collect();
            edges.sort_unstable();
            Graph::new(n, &edges).unwrap()
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// One representative of every connected graph on `n` vertices, by brute
/// force over all labelled graphs.
pub fn all_connected(n: usize) -> Vec<Graph> {
    let pairs = n * (n - 1) / 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in 0u64..(1 << pairs) {
        let mask: Vec<bool> = (0..pairs).map(|i| m >> i & 1 == 1).collect();
        let g = graph_from_mask(n, &mask);
        if g.is_connected() && seen.insert(canonical_code(&g, &VertexColoring::uniform(n))) {
            out.push(g);
        }
    }
    out
}

/// `det(x I - m)` by cofactor expansion along the first row.
pub fn cofactor_charpoly(m: &IntMatrix) -> IntPolynomial {
    let k = m.rows();
    let entry = |i: usize, j: usize| {
        let c = IntPolynomial::constant(BigInt::from(-m[(i, j)]));
        if i == j {
            c.add(&IntPolynomial::new(vec![BigInt::zero(), BigInt::one()]))
        } else {
            c
        }
    };
    let rows: Vec<usize> = (0..k).collect();
    let cols: Vec<usize> = (0..k).collect();
    det(&rows, &cols, &entry)
}

fn det(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> IntPolynomial) -> IntPolynomial {
    if rows.is_empty() {
        return IntPolynomial::constant(BigInt::one());
    }
    let mut acc = IntPolynomial::zero();
    for (x, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&y| y != c).collect();
        let term = entry(rows[0], c).mul(&det(&rows[1..], &rest, entry));
        acc = if x % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Integer determinant by cofactor expansion.
pub fn int_det(m: &IntMatrix) -> BigInt {
    let p = cofactor_charpoly(m);
    // det(-M) = p(0), and det(M) = (-1)^k det(-M)
    let c0 = p.coeff(0);
    if m.rows().is_multiple_of(2) {
        c0
    } else {
        -c0
    }
}

/// Subsets of `0..n` given as vertex lists, from a mask.
pub fn subset(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}
