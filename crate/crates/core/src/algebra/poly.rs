use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{intpoly, parse_rational, Rational};

/// Univariate polynomial over ℚ, coefficients ascending by degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// The constant value when the degree is at most 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) if !lead.is_one() => self.scale(&lead.recip()),
            _ => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[d].recip();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); n - d + 1];
        for i in (0..=n - d).rev() {
            let c = &rem[i + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Quotient of a division known to be exact.
    ///
    /// With `a = c_a·A` and `b = c_b·B` for primitive integer `A`, `B`, Gauss's
    /// lemma puts `A/B` in ℤ[x], so the division runs over the integers.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        if divisor.degree() == Some(0) || self.is_zero() {
            let (q, r) = self.div_rem(divisor);
            debug_assert!(r.is_zero(), "inexact division: remainder {r}");
            return q;
        }
        let a = intpoly::primitive_integer_part(self);
        let b = intpoly::primitive_integer_part(divisor);
        let scale = (self.leading().expect("nonzero")
            / Rational::from_integer(a.last().expect("nonzero").clone()))
            / (divisor.leading().expect("nonzero")
                / Rational::from_integer(b.last().expect("nonzero").clone()));
        match intpoly::exact_quotient(&a, &b) {
            Some(q) => Self::new(
                q.into_iter()
                    .map(|c| Rational::from_integer(c) * &scale)
                    .collect(),
            ),
            None => panic!("inexact division of {self} by {divisor}"),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return if self.is_zero() {
                other.monic()
            } else {
                self.monic()
            };
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return Self::one();
        }
        let a = intpoly::primitive_integer_part(self);
        let b = intpoly::primitive_integer_part(other);
        match intpoly::heuristic_gcd(&a, &b) {
            Some(g) => Self::new(g.into_iter().map(Rational::from_integer).collect()).monic(),
            None => self.gcd_euclid(other),
        }
    }

    /// Monic gcd by the Euclidean algorithm over ℚ.
    pub fn gcd_euclid(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// `a / gcd(a, a′)`, made monic.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }

    /// Sign of the polynomial as `x → +∞` (or `−∞` when `at_negative_infinity`).
    pub fn sign_at_infinity(&self, at_negative_infinity: bool) -> i32 {
        match (self.leading(), self.degree()) {
            (None, _) => 0,
            (Some(c), Some(d)) => {
                let s = if c.is_positive() { 1 } else { -1 };
                if at_negative_infinity && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            _ => unreachable!(),
        }
    }

    /// Lowest common denominator of the coefficients.
    pub fn content_denominator(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            let d = c.denom();
            if d.is_one() || d == &acc {
                acc
            } else {
                num_integer::Integer::lcm(&acc, d)
            }
        })
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Polynomial {
    let n = a.len().max(b.len());
    let coeffs = (0..n)
        .map(|i| {
            let x = a.get(i);
            let y = b.get(i);
            match (x, y) {
                (Some(x), Some(y)) if negate_b => x - y,
                (Some(x), Some(y)) => x + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) if negate_b => -y.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // multiply over ℤ after clearing denominators; normalize once per coefficient
        let (a, da) = intpoly::integer_parts(self);
        let (b, db) = intpoly::integer_parts(rhs);
        let den = da * db;
        let coeffs = intpoly::mul(&a, &b)
            .into_iter()
            .map(|c| Rational::new(c, den.clone()))
            .collect();
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl $imp for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Human form, descending: `8x^2+4`, `-2x`, `(3/2)x^3-x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str("-")?,
                (false, false) => f.write_str("+")?,
                (true, false) => {}
            }
            first = false;
            let abs = c.abs();
            if deg == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match deg {
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(Rational::to_string).collect();
        strs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strs
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[0, 2]) + &p(&[0, 2]), p(&[0, 4]));
        assert_eq!(&p(&[0, 2]) * &p(&[0, 2]), p(&[0, 0, 4]));
        assert!((&p(&[-2, 0, 4]) + &-&p(&[-2, 0, 4])).is_zero());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[-2, 0, 4]).derivative(), p(&[0, 8]));
        assert!(p(&[7]).derivative().is_zero());
        assert_eq!(p(&[0, -12, 0, 8]).derivative(), p(&[-12, 0, 24]));
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot, p(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (quot, rem) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(quot, Polynomial::new(vec![q(0, 1), q(1, 2)]));
        assert_eq!(rem, p(&[1]));
    }

    #[test]
    fn gcd_and_square_free() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let sq = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[0, 3]);
        assert_eq!(sq.square_free(), p(&[0, -1, 1]));
        assert!(Polynomial::zero().gcd(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[4, 0, 8]).to_string(), "8x^2+4");
        assert_eq!(p(&[0, -2]).to_string(), "-2x");
        assert_eq!(
            Polynomial::new(vec![q(0, 1), q(-1, 1), q(0, 1), q(3, 2)]).to_string(),
            "(3/2)x^3-x"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(q(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn json() {
        let a = Polynomial::new(vec![q(1, 2), q(0, 1), q(-4, 1)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["1/2","0","-4"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&s).unwrap(), a);
    }
}
