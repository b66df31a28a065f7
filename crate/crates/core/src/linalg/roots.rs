use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPolynomial, LinalgError};

/// Comparison of a root against a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Gt,
    Lt,
    Eq,
}

/// Number of real roots `r` of `p` with `r <rel> t`, counted with multiplicity.
///
/// `p` is split into the square-free layers `p_0 = p`, `p_{j+1} = gcd(p_j, p_j')`;
/// a root of multiplicity `m` is a simple root of each of the first `m`
/// quotients `p_j / p_{j+1}`. Distinct roots of each quotient are counted with
/// a Sturm chain, after dividing out the root at `t` when there is one so the
/// chain is never evaluated at a root.
pub fn count_roots(p: &IntPolynomial, t: &BigRational, rel: Relation) -> Result<usize, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let mut total = 0;
    let mut layer = p.primitive_part();
    while layer.degree().unwrap_or(0) > 0 {
        let next = layer.gcd(&layer.derivative());
        let squarefree = layer.div_exact(&next).expect("gcd divides its argument");
        total += count_distinct(&squarefree, t, rel);
        layer = next;
    }
    Ok(total)
}

/// Distinct real roots of a square-free primitive polynomial relative to `t`.
fn count_distinct(s: &IntPolynomial, t: &BigRational, rel: Relation) -> usize {
    let at_t = s.sign_at(t) == Ordering::Equal;
    match rel {
        Relation::Eq => at_t as usize,
        Relation::Gt | Relation::Lt => {
            let s = if at_t {
                // divide by den*x - num, exact by Gauss's lemma
                let lin = IntPolynomial::new(vec![-t.numer().clone(), t.denom().clone()]);
                s.div_exact(&lin).expect("t is a root")
            } else {
                s.clone()
            };
            if s.degree().unwrap_or(0) == 0 {
                return 0;
            }
            let chain = sturm_chain(&s);
            let at = variations(chain.iter().map(|q| q.sign_at(t)));
            if rel == Relation::Gt {
                at - variations(chain.iter().map(IntPolynomial::sign_at_pos_inf))
            } else {
                variations(chain.iter().map(IntPolynomial::sign_at_neg_inf)) - at
            }
        }
    }
}

/// Sturm sequence `s, s', -rem(s, s'), ...` with every member scaled by a
/// positive constant to stay primitive.
fn sturm_chain(s: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![s.clone(), divide_content_keep_sign(&s.derivative())];
    loop {
        let b = chain.last().unwrap();
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let a = &chain[chain.len() - 2];
        let (r, e) = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^e * rem; flip once more when that factor is negative
        let factor_negative = b.leading().unwrap().is_negative() && e % 2 == 1;
        let mut next = divide_content_keep_sign(&r);
        if !factor_negative {
            next = next.neg();
        }
        chain.push(next);
    }
    chain
}

fn divide_content_keep_sign(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Integer roots of a monic polynomial whose roots are all real and lie in
/// `[lo, hi]`, in descending order with multiplicity. `None` when some root
/// is not an integer.
pub fn integer_root_multiset(p: &IntPolynomial, lo: i64, hi: i64) -> Result<Option<Vec<i64>>, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(LinalgError::NotMonic);
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    for r in (lo..=hi).rev() {
        let rb = BigInt::from(r);
        loop {
            if rest.degree() == Some(0) {
                break;
            }
            let (q, rem) = rest.div_linear(&rb);
            if !rem.is_zero() {
                break;
            }
            roots.push(r);
            rest = q;
        }
    }
    Ok((rest.degree() == Some(0)).then_some(roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn counts_with_multiplicity() {
        let k3 = p(&[-4, 9, -6, 1]); // (x-4)(x-1)^2
        assert_eq!(count_roots(&k3, &int(3), Relation::Gt), Ok(1));
        assert_eq!(count_roots(&k3, &int(1), Relation::Eq), Ok(2));
        assert_eq!(count_roots(&k3, &int(1), Relation::Gt), Ok(1));
        assert_eq!(count_roots(&k3, &int(1), Relation::Lt), Ok(0));
        assert_eq!(count_roots(&k3, &int(4), Relation::Lt), Ok(2));
        assert_eq!(count_roots(&k3, &int(5), Relation::Lt), Ok(3));
        assert_eq!(count_roots(&p(&[-2, 0, 1]), &int(0), Relation::Gt), Ok(1));
        assert_eq!(count_roots(&IntPolynomial::zero(), &int(0), Relation::Gt), Err(LinalgError::ZeroPolynomial));
    }

    #[test]
    fn rational_thresholds() {
        let q = p(&[-2, 0, 1]); // +-sqrt 2
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(count_roots(&q, &r(141, 100), Relation::Gt), Ok(1));
        assert_eq!(count_roots(&q, &r(142, 100), Relation::Gt), Ok(0));
        // (2x - 1)^2 (x + 3)
        let h = p(&[1, -4, 4]).mul(&p(&[3, 1]));
        assert_eq!(count_roots(&h, &r(1, 2), Relation::Eq), Ok(2));
        assert_eq!(count_roots(&h, &r(1, 2), Relation::Lt), Ok(1));
        assert_eq!(count_roots(&h, &r(1, 2), Relation::Gt), Ok(0));
    }

    #[test]
    fn negative_leading_coefficient() {
        let q = p(&[4, -9, 6, -1]); // -(x-4)(x-1)^2
        assert_eq!(count_roots(&q, &int(0), Relation::Gt), Ok(3));
        assert_eq!(count_roots(&q, &int(2), Relation::Lt), Ok(2));
    }

    #[test]
    fn integer_roots() {
        assert_eq!(integer_root_multiset(&p(&[-4, 9, -6, 1]), 0, 8), Ok(Some(vec![4, 1, 1])));
        assert_eq!(integer_root_multiset(&p(&[-2, 0, 1]), -2, 2), Ok(None));
        assert_eq!(integer_root_multiset(&p(&[0, 0, 2]), 0, 2), Err(LinalgError::NotMonic));
        assert_eq!(integer_root_multiset(&p(&[0, 0, 1]), 0, 2), Ok(Some(vec![0, 0])));
    }
}
