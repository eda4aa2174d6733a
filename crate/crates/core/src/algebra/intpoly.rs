//! Integer-coefficient helpers behind [`Polynomial::gcd`]: primitive parts,
//! exact division over ℤ and the heuristic gcd of Char, Geddes and Gonnet.
//!
//! The heuristic evaluates both inputs at a large integer `ξ`, takes the
//! integer gcd, and reads a candidate polynomial back off the `ξ`-adic digits.
//! A candidate that divides both inputs is their gcd once `ξ` exceeds twice the
//! smaller coefficient bound, so a failed trial division is the only way it can
//! be wrong, and that is checked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
#[cfg(test)]
use super::Rational;

/// Content-free integer coefficients (ascending) with positive leading term.
pub(crate) fn primitive_integer_part(p: &Polynomial) -> Vec<BigInt> {
    primitive(integer_parts(p).0)
}

/// `(A, d)` with `p = A/d`, `A` integer and `d` the least common denominator.
pub(crate) fn integer_parts(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let lcm = p.content_denominator();
    let ints = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.denom() == &lcm {
                c.numer().clone()
            } else {
                c.numer() * (&lcm / c.denom())
            }
        })
        .collect();
    (ints, lcm)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    let content = if ints.last().is_some_and(|c| c.is_negative()) {
        -content
    } else {
        content
    };
    if !content.is_one() {
        for c in &mut ints {
            *c = &*c / &content;
        }
    }
    ints
}

/// `a / b` over ℤ[x] when the division is exact, else `None`.
pub(crate) fn exact_quotient(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lead = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

fn eval(p: &[BigInt], xi: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * xi + c)
}

/// Digits of `v` in base `xi` taken in the symmetric range `(−xi/2, xi/2]`.
fn symmetric_digits(mut v: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        out.push(d);
    }
    out
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Primitive gcd of two nonzero primitive integer polynomials, or `None` when
/// the heuristic gives up.
pub(crate) fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let bound = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = bound * 2 + 2;
    for _ in 0..6 {
        let gamma = eval(a, &xi).gcd(&eval(b, &xi));
        if !gamma.is_zero() {
            let g = primitive(symmetric_digits(gamma, &xi));
            if !g.is_empty() && exact_quotient(a, &g).is_some() && exact_quotient(b, &g).is_some() {
                return Some(g);
            }
        }
        // grow by an irrational-looking factor so retries do not resonate
        xi = xi * 73794 / 27011 + 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn primitive_parts() {
        let p = Polynomial::new(vec![
            Rational::new(1.into(), 2.into()),
            Rational::from_integer((-3).into()),
        ]);
        // (1/2 − 3x) → −1 + 6x, leading term made positive
        assert_eq!(primitive_integer_part(&p), ints(&[-1, 6]));
        assert_eq!(
            primitive_integer_part(&Polynomial::from_ints(&[4, 0, 8])),
            ints(&[1, 0, 2])
        );
    }

    #[test]
    fn quotients() {
        assert_eq!(
            exact_quotient(&ints(&[-1, 0, 0, 1]), &ints(&[-1, 1])),
            Some(ints(&[1, 1, 1]))
        );
        assert_eq!(exact_quotient(&ints(&[1, 0, 1]), &ints(&[1, 1])), None);
        assert_eq!(exact_quotient(&ints(&[1, 2]), &ints(&[0, 2])), None);
    }

    #[test]
    fn digits() {
        let xi = BigInt::from(10);
        assert_eq!(symmetric_digits(BigInt::from(196), &xi), ints(&[-4, 0, 2]));
        assert_eq!(symmetric_digits(BigInt::from(-7), &xi), ints(&[3, -1]));
    }

    #[test]
    fn gcds() {
        // (x+1)(x−2) and (x+1)(x+3)
        assert_eq!(
            heuristic_gcd(&ints(&[-2, -1, 1]), &ints(&[3, 4, 1])),
            Some(ints(&[1, 1]))
        );
        assert_eq!(
            heuristic_gcd(&ints(&[1, 0, 2]), &ints(&[0, 1])),
            Some(ints(&[1]))
        );
    }
}
