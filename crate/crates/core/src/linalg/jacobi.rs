/// Eigenvalues of a symmetric matrix (row-major, `n x n`) by cyclic Jacobi
/// rotations, stopping once the off-diagonal Frobenius norm drops below
/// `tol`. Returned in descending order.
pub fn jacobi_eigenvalues(a: &[f64], n: usize, tol: f64) -> Vec<f64> {
    let (mut ev, _) = rotate(a, n, tol, false);
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Eigenvalues in descending order with orthonormal eigenvectors:
/// `vectors[v * n + i]` is component `v` of the eigenvector for `values[i]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

pub fn jacobi_eigen(a: &[f64], n: usize, tol: f64) -> EigenDecomposition {
    let (vals, v) = rotate(a, n, tol, true);
    let v = v.expect("vectors requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
    let mut vectors = vec![0.0; n * n];
    for (new, &old) in order.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + new] = v[r * n + old];
        }
    }
    EigenDecomposition { values: order.iter().map(|&i| vals[i]).collect(), vectors }
}

fn rotate(a: &[f64], n: usize, tol: f64, want_vectors: bool) -> (Vec<f64>, Option<Vec<f64>>) {
    debug_assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += m[i * n + j] * m[i * n + j];
                }
            }
        }
        if off.sqrt() < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * kp - s * kq;
                    m[k * n + q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * pk - s * qk;
                    m[q * n + k] = s * pk + c * qk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (kp, kq) = (v[k * n + p], v[k * n + q]);
                        v[k * n + p] = c * kp - s * kq;
                        v[k * n + q] = s * kp + c * kq;
                    }
                }
            }
        }
    }
    ((0..n).map(|i| m[i * n + i]).collect(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_is_exact() {
        assert_eq!(jacobi_eigenvalues(&[3.0, 0.0, 0.0, 1.0], 2, 1e-12), vec![3.0, 1.0]);
        assert_eq!(jacobi_eigenvalues(&[1.0, 0.0, 0.0, 3.0], 2, 1e-12), vec![3.0, 1.0]);
    }

    #[test]
    fn two_by_two() {
        // [[2,1],[1,2]] -> 3, 1
        let ev = jacobi_eigenvalues(&[2.0, 1.0, 1.0, 2.0], 2, 1e-14);
        assert!((ev[0] - 3.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvectors_reconstruct_the_matrix() {
        let a = [4.0, 1.0, 1.0, 1.0, 1.0, 3.0, 0.0, 1.0, 1.0, 0.0, 2.0, 0.0, 1.0, 1.0, 0.0, 3.0];
        let n = 4;
        let e = jacobi_eigen(&a, n, 1e-14);
        for r in 0..n {
            for c in 0..n {
                let x: f64 = (0..n).map(|i| e.vectors[r * n + i] * e.values[i] * e.vectors[c * n + i]).sum();
                assert!((x - a[r * n + c]).abs() < 1e-12);
            }
        }
        assert_eq!(e.values, {
            let mut v = e.values.clone();
            v.sort_by(|a, b| b.total_cmp(a));
            v
        });
    }
}
