mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qint_core::catalog::known_graph;
use qint_core::linalg::{charpoly, count_roots, IntMatrix, Relation};
use qint_core::{exact_q_spectrum, float_spectrum, q_matrix, q_submatrix, signless_laplacian, Graph, IntegerSpectrum, QGraph};

fn zero() -> BigRational {
    BigRational::from_integer(BigInt::from(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn zero_eigenvalue_exactly_for_bipartite(g in common::arb_connected(1, 10)) {
        let p = charpoly(&signless_laplacian(&g)).unwrap();
        let at_zero = count_roots(&p, &zero(), Relation::Eq).unwrap();
        // a connected graph has one zero Q-eigenvalue when bipartite and none otherwise
        prop_assert_eq!(at_zero, usize::from(g.is_bipartite()));
        prop_assert_eq!(count_roots(&p, &zero(), Relation::Lt).unwrap(), 0);
    }

    #[test]
    fn whole_vertex_set_submatrix_is_the_q_matrix(g in common::arb_graph(1, 10)) {
        let all: Vec<usize> = (0..g.order()).collect();
        let own = q_matrix(&QGraph::with_own_degrees(g.clone()));
        prop_assert_eq!(q_submatrix(&g, &all).unwrap(), own.clone());
        prop_assert_eq!(own, signless_laplacian(&g));
    }

    #[test]
    fn submatrix_is_principal(g in common::arb_graph(2, 10), mask in any::<u64>()) {
        let w = common::subset(mask & ((1 << g.order()) - 1));
        prop_assume!(!w.is_empty());
        prop_assert_eq!(q_submatrix(&g, &w).unwrap(), signless_laplacian(&g).principal(&w).unwrap());
    }

    #[test]
    fn integral_spectra_are_in_range(g in common::arb_graph(1, 9)) {
        let q = signless_laplacian(&g);
        if let Some(s) = exact_q_spectrum(&q).unwrap() {
            prop_assert_eq!(s.len(), g.order());
            let top = 2 * g.max_degree() as i64;
            prop_assert!(s.values().iter().all(|&x| (0..=top).contains(&x)));
            prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
            prop_assert_eq!(s.values().iter().sum::<i64>(), q.trace());
        }
    }
}

#[test]
fn q_matrix_examples() {
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(q_matrix(&QGraph::with_own_degrees(k3)), IntMatrix::from_rows(vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]));
    assert_eq!(q_matrix(&QGraph::with_own_degrees(Graph::empty(1).unwrap())), IntMatrix::from_rows(vec![vec![0]]));

    // T32 in the order x, y, x0, x1, y0, y1 with d = (4, 3, 2, 3, 2, 3)
    let t32 = Graph::new(6, &[(0, 2), (0, 3), (0, 5), (0, 1), (1, 4), (1, 5)]).unwrap();
    let want = IntMatrix::from_rows(vec![
        vec![4, 1, 1, 1, 0, 1],
        vec![1, 3, 0, 0, 1, 1],
        vec![1, 0, 2, 0, 0, 0],
        vec![1, 0, 0, 3, 0, 0],
        vec![0, 1, 0, 0, 2, 0],
        vec![1, 1, 0, 0, 0, 3],
    ]);
    assert_eq!(q_matrix(&QGraph::new(t32, vec![4, 3, 2, 3, 2, 3]).unwrap()), want);
}

#[test]
fn submatrix_examples() {
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(q_submatrix(&k3, &[0, 1]).unwrap(), IntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]));
    let p3 = Graph::path(3).unwrap();
    assert_eq!(q_submatrix(&p3, &[0, 2]).unwrap(), IntMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]));
    assert!(q_submatrix(&p3, &[]).is_err());
    let fish = known_graph("G8").unwrap().graph;
    let all: Vec<usize> = (0..fish.order()).collect();
    assert_eq!(q_submatrix(&fish, &all).unwrap(), signless_laplacian(&fish));
}

#[test]
fn float_examples() {
    let close = |got: Vec<f64>, want: &[f64]| {
        assert_eq!(got.len(), want.len());
        for (a, b) in got.iter().zip(want) {
            assert!((a - b).abs() < 1e-9, "{got:?} vs {want:?}");
        }
    };
    close(float_spectrum(&signless_laplacian(&Graph::complete(3).unwrap()), 1e-12).unwrap(), &[4.0, 1.0, 1.0]);
    close(float_spectrum(&signless_laplacian(&Graph::complete(4).unwrap()), 1e-12).unwrap(), &[6.0, 2.0, 2.0, 2.0]);
    assert_eq!(float_spectrum(&IntMatrix::from_rows(vec![vec![1, 0], vec![0, 3]]), 1e-12).unwrap(), vec![3.0, 1.0]);
    assert!(float_spectrum(&IntMatrix::from_rows(vec![vec![1, 2], vec![0, 3]]), 1e-12).is_err());
}

#[test]
fn exact_examples() {
    let spectrum = |g: &Graph| exact_q_spectrum(&signless_laplacian(g)).unwrap();
    let g2 = Graph::new(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
    assert_eq!(spectrum(&g2), Some(IntegerSpectrum::from_multiplicities(&[(5, 1), (4, 1), (2, 1), (1, 3)])));
    let diamond = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(spectrum(&diamond), None);
    let petersen = known_graph("G4").unwrap().graph;
    assert_eq!(spectrum(&petersen), Some(IntegerSpectrum::from_multiplicities(&[(6, 1), (4, 5), (1, 4)])));
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(spectrum(&c6), Some(IntegerSpectrum::new(vec![4, 3, 3, 1, 1, 0])));
}
