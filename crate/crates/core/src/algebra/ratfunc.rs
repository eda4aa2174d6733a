use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Polynomial, Rational};

/// `num / den` in lowest terms with a monic denominator.
///
/// Because the normal form is unique, structural equality is equality of
/// rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalJson")]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Deserialize)]
struct RationalJson {
    num: Polynomial,
    den: Polynomial,
}

impl TryFrom<RationalJson> for RationalFunction {
    type Error = &'static str;
    fn try_from(value: RationalJson) -> Result<Self, Self::Error> {
        if value.den.is_zero() {
            return Err("zero denominator");
        }
        Ok(RationalFunction::new(value.num, value.den))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        Self {
            num,
            den: Polynomial::one(),
        }
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Polynomial::zero().into()
    }

    pub fn one() -> Self {
        Polynomial::one().into()
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::constant(c).into()
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// Reduces to normal form. Panics on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            Self { num, den }
        } else {
            let inv = lead.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.as_polynomial().and_then(Polynomial::as_constant)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        if self.is_polynomial() {
            return (&self.num * p).into();
        }
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `(n′d − nd′)/d²`, reduced.
    pub fn derivative(&self) -> Self {
        if self.is_polynomial() {
            return self.num.derivative().into();
        }
        // With d = g·h where g = gcd(d, d′), the result is
        // (n′h − n·d′/g) / (d·h), which avoids squaring d.
        let dd = self.den.derivative();
        let g = self.den.gcd(&dd);
        let h = self.den.exact_div(&g);
        let num = &(&self.num.derivative() * &h) - &(&self.num * &dd.exact_div(&g));
        Self::new(num, &self.den * &h)
    }

    /// Degree of numerator minus degree of denominator (`None` for zero).
    pub fn degree(&self) -> Option<i64> {
        self.num
            .degree()
            .map(|n| n as i64 - self.den.degree().unwrap_or(0) as i64)
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

fn add_impl(a: &RationalFunction, b: &RationalFunction, negate: bool) -> RationalFunction {
    let combine = |x: &Polynomial, y: &Polynomial| if negate { x - y } else { x + y };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    if a.den == b.den {
        return RationalFunction::new(combine(&a.num, &b.num), a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        // already coprime to both denominators
        let num = combine(&(&a.num * &b.den), &(&b.num * &a.den));
        return RationalFunction {
            num,
            den: &a.den * &b.den,
        }
        .canonical_zero();
    }
    let a_rest = a.den.exact_div(&g);
    let b_rest = b.den.exact_div(&g);
    let num = combine(&(&a.num * &b_rest), &(&b.num * &a_rest));
    RationalFunction::new(num, &(&a_rest * &b_rest) * &g)
}

impl RationalFunction {
    fn canonical_zero(self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        self
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        add_impl(self, rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        add_impl(self, rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return (&self.num * &rhs.num).into();
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lead.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        self * &rhs.recip()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl $imp for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d))
    }

    #[test]
    fn normal_form() {
        let a = rf(&[2, 2], &[2, 0, 2]);
        assert!(a.den().is_monic());
        // (2x+2)/(2x²+2) stays since x+1 ∤ x²+1
        assert_eq!(a, rf(&[1, 1], &[1, 0, 1]));
        let b = rf(&[-1, 0, 1], &[2, 2]);
        assert_eq!(
            b,
            RationalFunction::from(Polynomial::new(vec![
                Rational::new((-1).into(), 2.into()),
                Rational::new(1.into(), 2.into()),
            ]))
        );
    }

    #[test]
    fn field_ops() {
        let a = rf(&[1], &[0, 1]);
        let b = rf(&[1], &[1, 1]);
        // 1/x − 1/(x+1) = 1/(x² + x)
        assert_eq!(&a - &b, rf(&[1], &[0, 1, 1]));
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        let c = rf(&[1], &[0, 1, 1]);
        let d = rf(&[1], &[0, 0, 1]);
        // 1/(x(x+1)) + 1/x² = (2x+1)/(x²(x+1))
        assert_eq!(&c + &d, rf(&[1, 2], &[0, 0, 1, 1]));
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/(2x²+1) = −4x/(2x²+1)²
        let g = rf(&[1], &[1, 0, 2]);
        assert_eq!(g.derivative(), rf(&[0, -4], &[1, 0, 4, 0, 4]));
        // d/dx x/(x+1)² = (1 − x)/(x+1)³
        let h = rf(&[0, 1], &[1, 2, 1]);
        assert_eq!(h.derivative(), rf(&[1, -1], &[1, 3, 3, 1]));
    }

    #[test]
    fn json() {
        let a = rf(&[1], &[1, 0, 2]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"num":["1/2"],"den":["1/2","0","1"]}"#);
        assert_eq!(serde_json::from_str::<RationalFunction>(&s).unwrap(), a);
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":["1"],"den":[]}"#).is_err());
    }
}
