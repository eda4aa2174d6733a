//! Exact real-root counting with Sturm chains.
//!
//! The chain starts from the square-free part `p₀ = a / gcd(a, a′)`, so the
//! count is of distinct roots. Remainders use the signed convention
//! `p_{k+1} = −rem(p_{k−1}, p_k)`.

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

pub fn sturm_chain(a: &Polynomial) -> Result<Vec<Polynomial>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p0 = a.square_free();
    let p1 = p0.derivative();
    let mut chain = vec![p0, p1];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let next = -chain[n - 2].rem(&chain[n - 1]);
        chain.push(next);
    }
    Ok(chain)
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let nonzero: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign(r: &Rational) -> i32 {
    use num_traits::Signed;
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of `a`.
pub fn sturm_real_roots(a: &Polynomial) -> Result<usize> {
    let chain = sturm_chain(a)?;
    let at_neg = sign_changes(chain.iter().map(|p| p.sign_at_infinity(true)));
    let at_pos = sign_changes(chain.iter().map(|p| p.sign_at_infinity(false)));
    Ok(at_neg - at_pos)
}

/// Number of distinct roots in the half-open interval `(lo, hi]`.
pub fn sturm_roots_between(a: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    let chain = sturm_chain(a)?;
    let at = |x: &Rational| sign_changes(chain.iter().map(|p| sign(&p.eval(x))));
    Ok(at(lo).saturating_sub(at(hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn examples() {
        assert_eq!(sturm_real_roots(&p(&[2, 0, 4])).unwrap(), 0);
        assert_eq!(sturm_real_roots(&p(&[0, 2])).unwrap(), 1);
        assert_eq!(sturm_real_roots(&p(&[0, -12, 0, 8])).unwrap(), 3);
        assert_eq!(sturm_real_roots(&p(&[5])).unwrap(), 0);
        assert_eq!(
            sturm_real_roots(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x−1)²(x+2)³
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &(&(&p(&[2, 1]) * &p(&[2, 1])) * &p(&[2, 1]));
        assert_eq!(sturm_real_roots(&a).unwrap(), 2);
    }

    #[test]
    fn interval_counts() {
        // 8x³ − 12x has roots 0, ±√(3/2) ≈ ±1.22
        let h3 = p(&[0, -12, 0, 8]);
        let q = |n: i64| Rational::from_integer(n.into());
        assert_eq!(sturm_roots_between(&h3, &q(0), &q(2)).unwrap(), 1);
        assert_eq!(sturm_roots_between(&h3, &q(-1), &q(0)).unwrap(), 1);
        assert_eq!(sturm_roots_between(&h3, &q(-2), &q(2)).unwrap(), 3);
    }
}
