//! Exact univariate computer algebra over ℚ: polynomials, rational functions,
//! gauged rationals `e^{c x²/2}·R(x)`, determinants, Sturm chains and linear
//! differential operators.

mod det;
mod gauged;
mod intpoly;
mod operator;
mod poly;
mod ratfunc;
mod sturm;

pub use det::{
    det_poly, det_poly_cancellable, det_poly_leibniz, det_rational, det_rational_cancellable,
};
pub use gauged::GaugedRational;
pub use operator::DiffOperator;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use sturm::{sturm_chain, sturm_real_roots, sturm_roots_between};

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

/// Wronskian `det[f_i^{(j)}]` of gauged rationals, rows in the given order.
///
/// Row `i` carries the common factor `e^{c_i x²/2}`, so the result has gauge
/// `Σ c_i` and body the determinant of the bodies. The empty list gives the
/// unit.
pub fn wronskian(fs: &[GaugedRational]) -> GaugedRational {
    let n = fs.len();
    if n == 0 {
        return GaugedRational::one();
    }
    let gauge = fs.iter().map(|f| f.gauge).sum();
    let matrix: Vec<Vec<RationalFunction>> = fs
        .iter()
        .map(|f| f.derivatives(n).into_iter().map(|g| g.body).collect())
        .collect();
    let body = det_rational(&matrix).expect("square by construction");
    GaugedRational::new(gauge, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn gauged_derivatives() {
        let g = GaugedRational::new(-1, p(&[1]));
        assert_eq!(g.derivative(), GaugedRational::new(-1, p(&[0, -1])));
        let g = GaugedRational::new(1, p(&[1]));
        assert_eq!(g.derivative(), GaugedRational::new(1, p(&[0, 1])));
        // ψ₁ = e^{−x²/2}·2x → e^{−x²/2}(2 − 2x²)
        let g = GaugedRational::new(-1, p(&[0, 2]));
        assert_eq!(g.derivative(), GaugedRational::new(-1, p(&[2, 0, -2])));
    }

    #[test]
    fn wronskian_examples() {
        let psi0 = GaugedRational::new(-1, p(&[1]));
        let psi_m1 = GaugedRational::new(1, p(&[1]));
        let psi1 = GaugedRational::new(-1, p(&[0, 2]));
        let psi2 = GaugedRational::new(-1, p(&[-2, 0, 4]));
        assert_eq!(wronskian(&[]), GaugedRational::one());
        assert_eq!(wronskian(std::slice::from_ref(&psi0)), psi0);
        assert_eq!(
            wronskian(&[psi_m1, psi0]),
            GaugedRational::new(0, p(&[0, -2]))
        );
        assert_eq!(
            wronskian(&[psi1, psi2]),
            GaugedRational::new(-2, p(&[4, 0, 8]))
        );
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), integer(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
