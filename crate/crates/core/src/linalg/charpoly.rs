use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{IntMatrix, IntPolynomial, LinalgError};

/// Largest order accepted by [`charpoly`].
pub const MAX_CHARPOLY_ORDER: usize = 24;

/// Exact `det(xI - M)` by the Faddeev-LeVerrier recurrence
///
/// ```text
/// N_1 = I,   c_{k-1} = -tr(M N_1) / 1
/// N_j = M N_{j-1} + c_{k-j+1} I,   c_{k-j} = -tr(M N_j) / j
/// ```
///
/// Every trace division is exact over the integers. The recurrence runs
/// in checked `i128` first and is redone in `BigInt` on overflow.
pub fn charpoly(m: &IntMatrix) -> Result<IntPolynomial, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let k = m.rows();
    if k > MAX_CHARPOLY_ORDER {
        return Err(LinalgError::TooLarge(k));
    }
    if let Some(c) = faddeev_i128(m) {
        return Ok(IntPolynomial::new(c.into_iter().map(BigInt::from).collect()));
    }
    Ok(IntPolynomial::new(faddeev_big(m)))
}

fn faddeev_i128(m: &IntMatrix) -> Option<Vec<i128>> {
    let k = m.rows();
    let a: Vec<i128> = (0..k * k).map(|idx| m[(idx / k, idx % k)] as i128).collect();
    let mut c = vec![0i128; k + 1];
    c[k] = 1;
    let mut n = vec![0i128; k * k];
    for j in 1..=k {
        // N_j = M N_{j-1} + c_{k-j+1} I
        let mut next = vec![0i128; k * k];
        for r in 0..k {
            for s in 0..k {
                let mut acc: i128 = 0;
                for t in 0..k {
                    let x = a[r * k + t];
                    if x != 0 {
                        acc = acc.checked_add(x.checked_mul(n[t * k + s])?)?;
                    }
                }
                next[r * k + s] = acc;
            }
            next[r * k + r] = next[r * k + r].checked_add(c[k - j + 1])?;
        }
        n = next;
        let mut tr: i128 = 0;
        for r in 0..k {
            for t in 0..k {
                let x = a[r * k + t];
                if x != 0 {
                    tr = tr.checked_add(x.checked_mul(n[t * k + r])?)?;
                }
            }
        }
        debug_assert_eq!(tr % j as i128, 0);
        c[k - j] = -(tr / j as i128);
    }
    Some(c)
}

fn faddeev_big(m: &IntMatrix) -> Vec<BigInt> {
    let k = m.rows();
    let a: Vec<BigInt> = (0..k * k).map(|idx| BigInt::from(m[(idx / k, idx % k)])).collect();
    let mut c = vec![BigInt::zero(); k + 1];
    c[k] = BigInt::from(1);
    let mut n = vec![BigInt::zero(); k * k];
    for j in 1..=k {
        let mut next = vec![BigInt::zero(); k * k];
        for r in 0..k {
            for s in 0..k {
                let mut acc = BigInt::zero();
                for t in 0..k {
                    if !a[r * k + t].is_zero() {
                        acc += &a[r * k + t] * &n[t * k + s];
                    }
                }
                next[r * k + s] = acc;
            }
            next[r * k + r] += &c[k - j + 1];
        }
        n = next;
        let mut tr = BigInt::zero();
        for r in 0..k {
            for t in 0..k {
                tr += &a[r * k + t] * &n[t * k + r];
            }
        }
        let (q, rem) = tr.div_rem(&BigInt::from(j));
        debug_assert!(rem.is_zero());
        c[k - j] = -q;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let q = IntMatrix::from_rows(vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
        assert_eq!(charpoly(&q).unwrap(), IntPolynomial::from_i64(&[-4, 9, -6, 1]));
        assert_eq!(charpoly(&IntMatrix::zeros(2, 2)).unwrap(), IntPolynomial::from_i64(&[0, 0, 1]));
        assert_eq!(charpoly(&IntMatrix::identity(3)).unwrap(), IntPolynomial::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(charpoly(&IntMatrix::zeros(2, 3)), Err(LinalgError::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(charpoly(&IntMatrix::zeros(25, 25)), Err(LinalgError::TooLarge(25)));
    }

    #[test]
    fn big_path_agrees_with_fast_path() {
        let m = IntMatrix::from_fn(7, 7, |i, j| ((i * 3 + j * 5) % 7) as i64 - 3);
        let fast = faddeev_i128(&m).unwrap();
        let big = faddeev_big(&m);
        assert_eq!(fast.into_iter().map(BigInt::from).collect::<Vec<_>>(), big);
    }

    #[test]
    fn falls_back_on_overflow() {
        let m = IntMatrix::from_fn(24, 24, |i, j| if i == j { 1_000_000_000 } else { ((i + j) % 5) as i64 });
        assert!(faddeev_i128(&m).is_none());
        let p = charpoly(&m).unwrap();
        assert_eq!(p.degree(), Some(24));
        assert_eq!(-p.coeff(23), BigInt::from(m.trace()));
    }
}
