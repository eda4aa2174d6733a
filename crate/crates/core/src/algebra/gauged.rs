use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Polynomial, Rational, RationalFunction};

/// `e^{c·x²/2} · R(x)` with integer gauge `c` and rational body `R`.
///
/// The class is closed under differentiation and multiplication, and every
/// seed function `ψ_n` lies in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaugedRational {
    pub gauge: i64,
    pub body: RationalFunction,
}

impl GaugedRational {
    pub fn new(gauge: i64, body: impl Into<RationalFunction>) -> Self {
        Self {
            gauge,
            body: body.into(),
        }
    }

    /// The unit `e^0 · 1`, also the empty Wronskian.
    pub fn one() -> Self {
        Self::new(0, RationalFunction::one())
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// `(c, R) ↦ (c, c·x·R + R′)`.
    pub fn derivative(&self) -> Self {
        let dbody = self.body.derivative();
        if self.gauge == 0 {
            return Self::new(0, dbody);
        }
        let cx = Polynomial::from_ints(&[0, self.gauge]);
        Self::new(self.gauge, &self.body.mul_poly(&cx) + &dbody)
    }

    /// `self, self′, …, self^{(count−1)}`.
    pub fn derivatives(&self, count: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(count);
        let mut cur = self.clone();
        for _ in 0..count {
            let next = cur.derivative();
            out.push(std::mem::replace(&mut cur, next));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.gauge, self.body.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.gauge + other.gauge, &self.body * &other.body)
    }

    /// Sum of two functions with the same gauge; `None` if gauges differ and
    /// neither is zero.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(other.clone());
        }
        (self.gauge == other.gauge).then(|| Self::new(self.gauge, &self.body + &other.body))
    }

    /// The constant `λ` with `self = λ·other`, if one exists.
    pub fn ratio_constant(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::from_integer(0.into()));
        }
        if self.gauge != other.gauge {
            return None;
        }
        (&self.body / &other.body).as_constant()
    }
}

impl fmt::Display for GaugedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gauge {
            0 => write!(f, "{}", self.body),
            c => write!(f, "exp({c}x^2/2)*[{}]", self.body),
        }
    }
}
