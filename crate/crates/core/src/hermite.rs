//! Hermite and conjugate Hermite polynomials, the seed functions `ψ_n`, and
//! the Wronskian polynomial `H_M` of a Maya diagram in both its Wronskian and
//! pseudo-Wronskian forms.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::algebra::{det_poly, integer, wronskian, GaugedRational, Polynomial, Rational};
use crate::maya::MayaDiagram;

/// Thread-safe memo table of `H_n` and `H̃_n`.
///
/// Entries are appended in degree order by the recurrence
/// `H_{n+1} = 2x·H_n − H_n′`; readers of already computed degrees only take a
/// shared lock.
#[derive(Debug, Default)]
pub struct HermiteCache {
    hermite: RwLock<Vec<Arc<Polynomial>>>,
    conjugate: RwLock<Vec<Arc<Polynomial>>>,
    wronskian: RwLock<HashMap<MayaDiagram, Arc<Polynomial>>>,
}

impl HermiteCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide cache used by the free functions of this module.
    pub fn global() -> &'static HermiteCache {
        static GLOBAL: OnceLock<HermiteCache> = OnceLock::new();
        GLOBAL.get_or_init(HermiteCache::new)
    }

    pub fn hermite(&self, n: usize) -> Arc<Polynomial> {
        if let Some(h) = self.hermite.read().expect("poisoned").get(n) {
            return h.clone();
        }
        let mut table = self.hermite.write().expect("poisoned");
        if table.is_empty() {
            table.push(Arc::new(Polynomial::one()));
        }
        while table.len() <= n {
            let last = table.last().expect("nonempty");
            let next = &(&Polynomial::from_ints(&[0, 2]) * last) - &last.derivative();
            table.push(Arc::new(next));
        }
        table[n].clone()
    }

    /// `H̃_n(x) = (−i)ⁿ H_n(ix)`.
    pub fn conjugate(&self, n: usize) -> Arc<Polynomial> {
        if let Some(h) = self.conjugate.read().expect("poisoned").get(n) {
            return h.clone();
        }
        // hermite() takes its own lock, so compute before locking this table
        let have = self.conjugate.read().expect("poisoned").len();
        let fresh: Vec<Arc<Polynomial>> = (have..=n)
            .map(|k| Arc::new(conjugate_transform(&self.hermite(k), k)))
            .collect();
        let mut table = self.conjugate.write().expect("poisoned");
        for (k, h) in (have..=n).zip(fresh) {
            if table.len() == k {
                table.push(h);
            }
        }
        table[n].clone()
    }
}

/// Coefficient of `x^j` in `(−i)ⁿ H(ix)` is `c_j · (−1)^{n + (n+j)/2}`, since
/// only `j ≡ n (mod 2)` occur in `H_n`.
fn conjugate_transform(h: &Polynomial, n: usize) -> Polynomial {
    Polynomial::new(
        h.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.is_zero() {
                    return c.clone();
                }
                debug_assert!((n + j).is_multiple_of(2));
                if (n + (n + j) / 2).is_multiple_of(2) {
                    c.clone()
                } else {
                    -c
                }
            })
            .collect(),
    )
}

impl HermiteCache {
    /// `H_M`, computed once per diagram.
    pub fn wronskian(&self, m: &MayaDiagram) -> Arc<Polynomial> {
        if let Some(h) = self.wronskian.read().expect("poisoned").get(m) {
            return h.clone();
        }
        let h = Arc::new(compute_wronskian_polynomial(m));
        self.wronskian
            .write()
            .expect("poisoned")
            .entry(m.clone())
            .or_insert(h)
            .clone()
    }
}

/// `H_n`, the Hermite polynomial of degree `n` (leading coefficient `2ⁿ`).
pub fn hermite(n: usize) -> Polynomial {
    (*HermiteCache::global().hermite(n)).clone()
}

/// `H̃_n`, the conjugate Hermite polynomial.
pub fn conjugate_hermite(n: usize) -> Polynomial {
    (*HermiteCache::global().conjugate(n)).clone()
}

/// `ψ_n = e^{−x²/2}H_n` for `n ≥ 0` and `e^{x²/2}H̃_{−n−1}` for `n < 0`.
pub fn psi(n: i64) -> GaugedRational {
    if n >= 0 {
        GaugedRational::new(-1, hermite(n as usize))
    } else {
        GaugedRational::new(1, conjugate_hermite((-n - 1) as usize))
    }
}

/// `H_M = e^{σ x²/2} Wr[ψ_{k_1}, …, ψ_{k_p}]` with `k_1 < ⋯ < k_p` the index set.
pub fn wronskian_polynomial(m: &MayaDiagram) -> Polynomial {
    (*HermiteCache::global().wronskian(m)).clone()
}

fn compute_wronskian_polynomial(m: &MayaDiagram) -> Polynomial {
    let seeds: Vec<GaugedRational> = m.index_set().iter().map(|&k| psi(k)).collect();
    let w = wronskian(&seeds);
    assert_eq!(
        w.gauge,
        -m.index(),
        "Wronskian gauge disagrees with the index of {m}"
    );
    w.body
        .as_polynomial()
        .cloned()
        .unwrap_or_else(|| panic!("Wronskian of {m} is not polynomial: {}", w.body))
}

/// The pseudo-Wronskian determinant built from the Frobenius symbol
/// `(s_1,…,s_r | t_q,…,t_1)`: rows `H̃_{s_i}, H̃_{s_i+1}, …` for each `s_i`,
/// then rows `H_{t_j}, H_{t_j}′, …` for `t_q, …, t_1`.
pub fn pseudo_wronskian(m: &MayaDiagram) -> Polynomial {
    let frob = m.frobenius_symbol();
    let n = frob.r() + frob.q();
    let mut rows = Vec::with_capacity(n);
    for &s in &frob.s {
        rows.push(
            (0..n)
                .map(|j| conjugate_hermite(s as usize + j))
                .collect::<Vec<_>>(),
        );
    }
    for &t in frob.t.iter().rev() {
        let mut row = Vec::with_capacity(n);
        let mut cur = hermite(t as usize);
        for _ in 0..n {
            let next = cur.derivative();
            row.push(std::mem::replace(&mut cur, next));
        }
        rows.push(row);
    }
    det_poly(&rows).expect("square by construction")
}

/// Scalar `(−1)^{rq} / (∏_{i<j} 2(s_j−s_i) · ∏_{i<j} 2(t_i−t_j))` relating
/// `H_M` to its translation-invariant normalization.
pub fn normalization_factor(m: &MayaDiagram) -> Rational {
    let frob = m.frobenius_symbol();
    let pairs = |xs: &[u64], sign: i64| {
        let mut acc = integer(1);
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                acc *= integer(2 * sign * (xs[j] as i64 - xs[i] as i64));
            }
        }
        acc
    };
    let denom = pairs(&frob.s, 1) * pairs(&frob.t, -1);
    let sign = if (frob.r() * frob.q()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    integer(sign) / denom
}

/// `Ĥ_M`, invariant under translation of `M`.
pub fn normalized_h(m: &MayaDiagram) -> Polynomial {
    pseudo_wronskian(m).scale(&normalization_factor(m))
}
