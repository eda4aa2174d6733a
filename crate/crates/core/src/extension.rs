//! Rational extensions of the harmonic oscillator: the potential `U_M`, the
//! Hamiltonian `T_M = −D² + U_M`, its eigenfunctions `ψ_{M,k}`, and the
//! Krein–Adler regularity test.

use serde::Serialize;

use crate::algebra::{integer, DiffOperator, GaugedRational, Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::hermite::wronskian_polynomial;
use crate::maya::MayaDiagram;

/// `U_M = x² + 2σ_M + 2(H_M′/H_M)² − 2H_M″/H_M`.
///
/// This is `x² − 2 (log Wr)″` with `Wr = e^{−σ x²/2} H_M`, written through `H_M`.
pub fn potential(m: &MayaDiagram) -> RationalFunction {
    potential_from_h(&wronskian_polynomial(m), m.index())
}

fn potential_from_h(h: &Polynomial, sigma: i64) -> RationalFunction {
    let base = RationalFunction::from(Polynomial::from_ints(&[2 * sigma, 0, 1]));
    if h.degree() == Some(0) {
        return base;
    }
    let h_rf = RationalFunction::from(h.clone());
    let log_d = &RationalFunction::from(h.derivative()) / &h_rf;
    let second = &RationalFunction::from(h.derivative().derivative()) / &h_rf;
    let two = integer(2);
    &(&base + &(&log_d * &log_d).scale(&two)) - &second.scale(&two)
}

/// `U_M = x² − 2 (d²/dx²) log Wr[ψ_{k_1}, …, ψ_{k_p}]`, computed from the
/// gauged Wronskian directly. Agrees with [`potential`].
pub fn potential_from_wronskian(m: &MayaDiagram) -> RationalFunction {
    let seeds: Vec<GaugedRational> = m
        .index_set()
        .iter()
        .map(|&k| crate::hermite::psi(k))
        .collect();
    let w = crate::algebra::wronskian(&seeds);
    // log(e^{c x²/2} R)″ = c + R″/R − (R′/R)²
    let log_d = &w.body.derivative() / &w.body;
    let log_dd = &log_d.derivative();
    let x2 = RationalFunction::from(Polynomial::from_ints(&[0, 0, 1]));
    let second = &RationalFunction::from_int(w.gauge) + log_dd;
    &x2 - &second.scale(&integer(2))
}

/// `T_M = −D² + U_M`.
pub fn schrodinger(m: &MayaDiagram) -> DiffOperator {
    hamiltonian_from_potential(potential(m))
}

fn hamiltonian_from_potential(u: RationalFunction) -> DiffOperator {
    DiffOperator::new(vec![
        u,
        RationalFunction::zero(),
        RationalFunction::from_int(-1),
    ])
}

/// `2k + 1 − T` as an operator, the factor contributed by a repeated flip at `k`.
pub fn shifted_resolvent_factor(t: &DiffOperator, k: i64) -> DiffOperator {
    DiffOperator::scalar(integer(2 * k + 1)).sub(t)
}

/// A diagram together with its Wronskian polynomial, potential and Hamiltonian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalExtension {
    pub diagram: MayaDiagram,
    #[serde(rename = "H")]
    pub h: Polynomial,
    pub potential: RationalFunction,
    pub hamiltonian: DiffOperator,
}

impl RationalExtension {
    pub fn new(diagram: &MayaDiagram) -> Self {
        let h = wronskian_polynomial(diagram);
        let potential = potential_from_h(&h, diagram.index());
        let hamiltonian = hamiltonian_from_potential(potential.clone());
        Self {
            diagram: diagram.clone(),
            h,
            potential,
            hamiltonian,
        }
    }

    pub fn is_regular(&self) -> bool {
        is_regular(&self.diagram)
    }

    pub fn eigenfunction(&self, k: i64) -> EigenState {
        eigenfunction_with_h(&self.diagram, &self.h, k)
    }
}

/// `ψ_{M,k}` with its sign `ε` and whether it is a bound state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenState {
    pub k: i64,
    pub epsilon: i64,
    pub function: GaugedRational,
    pub bound: bool,
}

/// `ψ_{M,k} = e^{ε x²/2} H_{f_k(M)} / H_M`, `ε = +1` iff `k ∈ M`.
pub fn eigenfunction(m: &MayaDiagram, k: i64) -> EigenState {
    eigenfunction_with_h(m, &wronskian_polynomial(m), k)
}

fn eigenfunction_with_h(m: &MayaDiagram, h: &Polynomial, k: i64) -> EigenState {
    let member = m.contains(k);
    let epsilon = if member { 1 } else { -1 };
    let h_flipped = wronskian_polynomial(&m.flip(k));
    let body = RationalFunction::new(h_flipped, h.clone());
    EigenState {
        k,
        epsilon,
        function: GaugedRational::new(epsilon, body),
        bound: !member && is_regular(m),
    }
}

/// Krein–Adler: every finite filled run of `M` has even length.
pub fn is_regular(m: &MayaDiagram) -> bool {
    m.block_coordinates()
        .filled_run_lengths()
        .all(|len| len % 2 == 0)
}

/// `{ k ∈ [kmin, kmax] : k ∉ M }`, the bound-state labels of a regular extension.
pub fn bound_states(m: &MayaDiagram, kmin: i64, kmax: i64) -> Result<Vec<i64>> {
    if kmin > kmax {
        return Err(Error::EmptyWindow { lo: kmin, hi: kmax });
    }
    if !is_regular(m) {
        return Err(Error::NotRegular(m.to_string()));
    }
    Ok((kmin..=kmax).filter(|&k| !m.contains(k)).collect())
}

/// `H_{f_k(M)}`, the polynomial part of the bound state `ψ_{M,k}`.
pub fn exceptional_hermite(m: &MayaDiagram, k: i64) -> Result<Polynomial> {
    if m.contains(k) {
        return Err(Error::StateInDiagram(k));
    }
    if !is_regular(m) {
        return Err(Error::NotRegular(m.to_string()));
    }
    Ok(wronskian_polynomial(&m.flip(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, sturm_real_roots};
    use crate::hermite::{hermite, psi};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn k(set: &[i64]) -> MayaDiagram {
        MayaDiagram::from_index_set(set.iter().copied()).unwrap()
    }

    #[test]
    fn potentials() {
        let trivial = MayaDiagram::trivial();
        assert_eq!(potential(&trivial), p(&[0, 0, 1]).into());
        for n in -3..=3 {
            assert_eq!(potential(&trivial.translate(n)), p(&[2 * n, 0, 1]).into());
        }
        // H = 8x²+4, σ = 2: x² + 32x²/(2x²+1)² − 8/(2x²+1) + 4
        let h = RationalFunction::from(p(&[1, 0, 2]));
        let expect = &(&RationalFunction::from(p(&[4, 0, 1]))
            + &(&RationalFunction::from(p(&[0, 0, 32])) / &(&h * &h)))
            - &(&RationalFunction::from_int(8) / &h);
        assert_eq!(potential(&k(&[1, 2])), expect);
        assert_eq!(potential_from_wronskian(&k(&[1, 2])), expect);
    }

    #[test]
    fn hamiltonians() {
        let t = schrodinger(&MayaDiagram::trivial());
        assert_eq!(
            t,
            DiffOperator::new(vec![
                p(&[0, 0, 1]).into(),
                RationalFunction::zero(),
                RationalFunction::from_int(-1)
            ])
        );
        let m = k(&[-1, 2]);
        for n in [-2, 1, 3] {
            assert_eq!(
                schrodinger(&m.translate(n)),
                schrodinger(&m).plus_scalar(&integer(2 * n))
            );
        }
    }

    #[test]
    fn eigenfunctions() {
        let trivial = MayaDiagram::trivial();
        assert_eq!(eigenfunction(&trivial, 0).function, psi(0));
        for j in 0..6 {
            let state = eigenfunction(&trivial, j);
            assert!(state.bound);
            assert_eq!(state.function, psi(j));
        }
        let m = k(&[1, 2]);
        let state = eigenfunction(&m, 0);
        assert_eq!(state.epsilon, -1);
        let expect = RationalFunction::new(wronskian_polynomial(&k(&[0, 1, 2])), p(&[4, 0, 8]));
        assert_eq!(state.function, GaugedRational::new(-1, expect));
        let t = schrodinger(&m);
        for j in -3..6 {
            let f = eigenfunction(&m, j).function;
            assert_eq!(t.apply(&f), f.scale(&integer(2 * j + 1)), "k = {j}");
        }
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&MayaDiagram::trivial()));
        assert!(is_regular(&k(&[1, 2])));
        assert!(!is_regular(&k(&[1])));
        assert_eq!(
            sturm_real_roots(&wronskian_polynomial(&k(&[1, 2]))).unwrap(),
            0
        );
        assert_eq!(
            sturm_real_roots(&wronskian_polynomial(&k(&[1]))).unwrap(),
            1
        );
    }

    #[test]
    fn bound_state_lists() {
        assert_eq!(
            bound_states(&MayaDiagram::trivial(), 0, 3).unwrap(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(bound_states(&k(&[1, 2]), 0, 4).unwrap(), vec![0, 3, 4]);
        let hat3 = MayaDiagram::single_hole(3).translate(3);
        assert_eq!(bound_states(&hat3, 0, 4).unwrap(), vec![0, 3, 4]);
        let hat2 = MayaDiagram::single_hole(2).translate(2);
        assert!(matches!(
            bound_states(&hat2, 0, 3),
            Err(Error::NotRegular(_))
        ));
        assert!(matches!(
            bound_states(&k(&[1]), 0, 3),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn exceptional_polynomials() {
        let trivial = MayaDiagram::trivial();
        for j in 0..6 {
            let xh = exceptional_hermite(&trivial, j).unwrap();
            let ratio = (&RationalFunction::from(xh)
                / &RationalFunction::from(hermite(j as usize)))
                .as_constant();
            assert!(ratio.is_some_and(|r| r != rational(0, 1)));
        }
        let m = k(&[1, 2]);
        assert_eq!(
            exceptional_hermite(&m, 0).unwrap(),
            wronskian_polynomial(&k(&[0, 1, 2]))
        );
        assert_eq!(
            exceptional_hermite(&m, 3).unwrap(),
            wronskian_polynomial(&k(&[1, 2, 3]))
        );
        assert_eq!(exceptional_hermite(&m, 1), Err(Error::StateInDiagram(1)));
    }
}
