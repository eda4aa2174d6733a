use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{GaugedRational, Polynomial, Rational, RationalFunction};

/// `Σ_j a_j(x) dʲ/dxʲ` with rational-function coefficients, stored densely by
/// derivative order. Trailing zero coefficients are trimmed, so derived
/// equality is operator equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<RationalFunction>", into = "Vec<RationalFunction>")]
pub struct DiffOperator {
    coeffs: Vec<RationalFunction>,
}

impl From<Vec<RationalFunction>> for DiffOperator {
    fn from(coeffs: Vec<RationalFunction>) -> Self {
        Self::new(coeffs)
    }
}

impl From<DiffOperator> for Vec<RationalFunction> {
    fn from(op: DiffOperator) -> Self {
        op.coeffs
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

impl DiffOperator {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::multiplication(RationalFunction::one())
    }

    /// `d/dx`.
    pub fn d() -> Self {
        Self::new(vec![RationalFunction::zero(), RationalFunction::one()])
    }

    /// Multiplication by `f`.
    pub fn multiplication(f: RationalFunction) -> Self {
        Self::new(vec![f])
    }

    pub fn scalar(c: Rational) -> Self {
        Self::multiplication(RationalFunction::constant(c))
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> RationalFunction {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RationalFunction> {
        self.coeffs.last()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_monic(&self) -> bool {
        self.leading()
            .is_some_and(|c| *c == RationalFunction::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// `self + c·identity`.
    pub fn plus_scalar(&self, c: &Rational) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(RationalFunction::zero());
        }
        coeffs[0] = &coeffs[0] + &RationalFunction::constant(c.clone());
        Self::new(coeffs)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
    ) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| f(&self.coeff(j), &other.coeff(j))).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    /// `self ∘ other` by the Leibniz rule
    /// `Dⁱ∘(b·Dʲ) = Σ_l C(i,l) b^{(l)} D^{i−l+j}`.
    pub fn compose(&self, other: &Self) -> Self {
        let (Some(m), Some(n)) = (self.order(), other.order()) else {
            return Self::zero();
        };
        // derivs[j][l] = l-th derivative of other's j-th coefficient
        let derivs: Vec<Vec<RationalFunction>> = other
            .coeffs
            .iter()
            .map(|b| {
                let mut ds = Vec::with_capacity(m + 1);
                let mut cur = b.clone();
                for l in 0..=m {
                    let next = if l < m && !cur.is_zero() {
                        cur.derivative()
                    } else {
                        RationalFunction::zero()
                    };
                    ds.push(std::mem::replace(&mut cur, next));
                }
                ds
            })
            .collect();
        let mut out = vec![RationalFunction::zero(); m + n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for l in 0..=i {
                let c = binomial(i, l);
                let ac = a.scale(&c);
                for (j, ds) in derivs.iter().enumerate() {
                    let b = &ds[l];
                    if b.is_zero() {
                        continue;
                    }
                    let k = i - l + j;
                    out[k] = &out[k] + &(&ac * b);
                }
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// `Σ a_j f^{(j)}`; the gauge of `f` is preserved.
    pub fn apply(&self, f: &GaugedRational) -> GaugedRational {
        let derivs = f.derivatives(self.coeffs.len());
        let body = self
            .coeffs
            .iter()
            .zip(&derivs)
            .filter(|(a, _)| !a.is_zero())
            .fold(RationalFunction::zero(), |acc, (a, df)| {
                &acc + &(a * &df.body)
            });
        GaugedRational::new(f.gauge, body)
    }

    /// Polynomial `p(op) = Σ c_i opⁱ` with coefficients ascending.
    pub fn polynomial_in(&self, p: &Polynomial) -> Self {
        let mut acc = Self::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.compose(self).plus_scalar(c);
        }
        acc
    }
}

impl fmt::Display for DiffOperator {
    /// `D^2+(x)D+(x^2+1)`; coefficients in parentheses unless ±1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let d = match j {
                0 => String::new(),
                1 => "D".to_string(),
                _ => format!("D^{j}"),
            };
            let one = RationalFunction::one();
            let term = if j > 0 && *a == one {
                d
            } else if j > 0 && *a == -&one {
                format!("-{d}")
            } else {
                format!("({a}){d}")
            };
            if !first && !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn mul(c: &[i64]) -> DiffOperator {
        DiffOperator::multiplication(p(c).into())
    }

    fn d_plus_x() -> DiffOperator {
        DiffOperator::d().add(&mul(&[0, 1]))
    }

    #[test]
    fn composition_examples() {
        let a = d_plus_x();
        assert_eq!(a.compose(&DiffOperator::identity()), a);
        // D∘x = xD + 1
        let expect = DiffOperator::new(vec![p(&[1]).into(), p(&[0, 1]).into()]);
        assert_eq!(DiffOperator::d().compose(&mul(&[0, 1])), expect);
        // (D + x)(D − x) = D² − x² − 1
        let b = DiffOperator::d().sub(&mul(&[0, 1]));
        let expect = DiffOperator::new(vec![
            p(&[-1, 0, -1]).into(),
            RationalFunction::zero(),
            RationalFunction::one(),
        ]);
        assert_eq!(a.compose(&b), expect);
    }

    #[test]
    fn equality_is_normalized() {
        let a = d_plus_x();
        assert_eq!(a, a.clone());
        let padded = DiffOperator::new(vec![
            RationalFunction::zero(),
            RationalFunction::one(),
            RationalFunction::zero(),
        ]);
        assert_eq!(DiffOperator::d(), padded);
        assert_ne!(a, DiffOperator::d().sub(&mul(&[0, 1])));
    }

    #[test]
    fn application() {
        let psi0 = GaugedRational::new(-1, p(&[1]));
        assert_eq!(DiffOperator::identity().apply(&psi0), psi0);
        assert!(d_plus_x().apply(&psi0).is_zero());
        // (D + x)ψ₂ = 4ψ₁ with ψ₂ = e^{−x²/2}(4x²−2), ψ₁ = e^{−x²/2}·2x
        let psi2 = GaugedRational::new(-1, p(&[-2, 0, 4]));
        assert_eq!(d_plus_x().apply(&psi2), GaugedRational::new(-1, p(&[0, 8])));
    }

    #[test]
    fn polynomial_in_operator() {
        // p(T) = 1 − T for T = −D² + x²
        let t = DiffOperator::new(vec![
            p(&[0, 0, 1]).into(),
            RationalFunction::zero(),
            RationalFunction::from_int(-1),
        ]);
        let one_minus_t = t.polynomial_in(&p(&[1, -1]));
        assert_eq!(one_minus_t, DiffOperator::identity().sub(&t));
        assert_eq!(t.pow(2), t.polynomial_in(&p(&[0, 0, 1])));
    }

    #[test]
    fn display() {
        assert_eq!(d_plus_x().to_string(), "D+(x)");
        assert_eq!(DiffOperator::zero().to_string(), "0");
    }
}
