//! Exact inertia of `M - tI` for a symmetric integer matrix `M` and integer
//! `t`, by symmetric elimination over the rationals.
//!
//! Each step takes a non-zero diagonal pivot, or, when the remaining
//! diagonal is all zero, a 2x2 pivot `[[0, a], [a, 0]]` (one positive and
//! one negative eigenvalue), and replaces the rest by its Schur complement.
//! Congruence preserves inertia, so the pivot signs count the eigenvalues
//! of `M` above and below `t`, and what is left when everything vanishes
//! counts those equal to `t`.
//!
//! The common case needs only diagonal pivots and runs fraction-free in
//! `i128`: after `k` steps every entry is a `(k+1)`-minor, and the pivot
//! ratio of consecutive leading minors carries the sign.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Eigenvalue counts relative to a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub above: usize,
    pub below: usize,
    pub at: usize,
}

/// Inertia of `m - t I`. `m` must be symmetric.
pub fn shifted_inertia(m: &IntMatrix, t: i64) -> Inertia {
    assert!(m.is_symmetric(), "inertia needs a symmetric matrix");
    let k = m.rows();
    let entry = |i: usize, j: usize| m[(i, j)] as i128 - if i == j { t as i128 } else { 0 };
    if let Some(r) = fraction_free((0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect()) {
        return r;
    }
    let small: Vec<Vec<Small>> = (0..k).map(|i| (0..k).map(|j| Small::int(entry(i, j))).collect()).collect();
    if let Some(r) = eliminate(small) {
        return r;
    }
    let big: Vec<Vec<BigRational>> = (0..k).map(|i| (0..k).map(|j| BigRational::from_integer(BigInt::from(entry(i, j)))).collect()).collect();
    eliminate(big).expect("arbitrary precision never overflows")
}

/// Diagonal-pivot elimination with exact integer division. `None` when a
/// 2x2 pivot would be needed or an intermediate overflows.
fn fraction_free(mut m: Vec<Vec<i128>>) -> Option<Inertia> {
    let mut active: Vec<usize> = (0..m.len()).collect();
    let mut out = Inertia { above: 0, below: 0, at: 0 };
    let mut prev: i128 = 1;
    while !active.is_empty() {
        let Some(p) = active.iter().copied().filter(|&i| m[i][i] != 0).min_by_key(|&i| m[i][i].unsigned_abs()) else {
            let all_zero = active.iter().all(|&i| active.iter().all(|&j| m[i][j] == 0));
            if !all_zero {
                return None;
            }
            out.at += active.len();
            break;
        };
        let pivot = m[p][p];
        if (pivot > 0) == (prev > 0) {
            out.above += 1;
        } else {
            out.below += 1;
        }
        active.retain(|&i| i != p);
        for (x, &i) in active.iter().enumerate() {
            for &j in &active[x..] {
                let num = pivot.checked_mul(m[i][j])?.checked_sub(m[i][p].checked_mul(m[p][j])?)?;
                debug_assert_eq!(num % prev, 0);
                let v = num / prev;
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        prev = pivot;
    }
    Some(out)
}

/// Field operations that may fail on overflow.
trait Field: Clone + Sized {
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn size(&self) -> u128;
    /// `self - a * b / c`
    fn sub_prod_div(&self, a: &Self, b: &Self, c: &Self) -> Option<Self>;
    /// `self - (a * b + c * d) / e`
    fn sub_two_prod_div(&self, a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

fn eliminate<F: Field>(mut m: Vec<Vec<F>>) -> Option<Inertia> {
    let mut active: Vec<usize> = (0..m.len()).collect();
    let mut out = Inertia { above: 0, below: 0, at: 0 };
    while !active.is_empty() {
        // smallest non-zero diagonal entry keeps the numbers short
        let pivot = active.iter().copied().filter(|&i| !m[i][i].is_zero()).min_by_key(|&i| m[i][i].size());
        if let Some(p) = pivot {
            if m[p][p].is_positive() {
                out.above += 1;
            } else {
                out.below += 1;
            }
            active.retain(|&i| i != p);
            for (x, &i) in active.iter().enumerate() {
                for &j in &active[x..] {
                    let v = m[i][j].sub_prod_div(&m[i][p], &m[p][j], &m[p][p])?;
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| active[x + 1..].iter().find(|&&j| !m[i][j].is_zero()).map(|&j| (i, j)));
        let Some((p, q)) = pair else {
            out.at += active.len();
            break;
        };
        out.above += 1;
        out.below += 1;
        active.retain(|&i| i != p && i != q);
        // inverse of [[0, a], [a, 0]] is [[0, 1/a], [1/a, 0]]
        for (x, &i) in active.iter().enumerate() {
            for &j in &active[x..] {
                let v = m[i][j].sub_two_prod_div(&m[i][p], &m[q][j], &m[i][q], &m[p][j], &m[p][q])?;
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
    }
    Some(out)
}

/// Reduced fraction with an `i128` numerator and positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Small {
    num: i128,
    den: i128,
}

impl Small {
    fn int(n: i128) -> Self {
        Small { num: n, den: 1 }
    }

    fn new(num: i128, den: i128) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = num.checked_neg()?;
            den = den.checked_neg()?;
        }
        Some(Small { num, den })
    }

    fn mul(self, o: Small) -> Option<Small> {
        let g1 = self.num.gcd(&o.den).max(1);
        let g2 = o.num.gcd(&self.den).max(1);
        Small::new((self.num / g1).checked_mul(o.num / g2)?, (self.den / g2).checked_mul(o.den / g1)?)
    }

    fn div(self, o: Small) -> Option<Small> {
        if o.num == 0 {
            return None;
        }
        self.mul(Small::new(o.den, o.num)?)
    }

    fn sub(self, o: Small) -> Option<Small> {
        let g = self.den.gcd(&o.den);
        let l = (self.den / g).checked_mul(o.den)?;
        let a = self.num.checked_mul(l / self.den)?;
        let b = o.num.checked_mul(l / o.den)?;
        Small::new(a.checked_sub(b)?, l)
    }

    fn add(self, o: Small) -> Option<Small> {
        self.sub(Small { num: o.num.checked_neg()?, den: o.den })
    }
}

impl Field for Small {
    fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn is_positive(&self) -> bool {
        self.num > 0
    }

    fn size(&self) -> u128 {
        self.num.unsigned_abs().saturating_add(self.den.unsigned_abs())
    }

    fn sub_prod_div(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        self.sub(a.mul(*b)?.div(*c)?)
    }

    fn sub_two_prod_div(&self, a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        self.sub(a.mul(*b)?.add(c.mul(*d)?)?.div(*e)?)
    }
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn size(&self) -> u128 {
        (self.numer().bits() + self.denom().bits()) as u128
    }

    fn sub_prod_div(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        Some(self - a * b / c)
    }

    fn sub_two_prod_div(&self, a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some(self - (a * b + c * d) / e)
    }
}
