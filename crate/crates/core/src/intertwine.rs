//! Intertwining operators `A_{M,K}` between rational extensions, arrows of
//! the Maya-diagram category, ladder operators and their syzygies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    det_poly, integer, DiffOperator, GaugedRational, Polynomial, Rational, RationalFunction,
};
use crate::error::{Error, Result};
use crate::extension::{eigenfunction, schrodinger, shifted_resolvent_factor};
use crate::hermite::wronskian_polynomial;
use crate::maya::MayaDiagram;
use crate::multiset::IntegerMultiset;

/// Monic `A[y] = Wr[f_1, …, f_p, y] / Wr[f_1, …, f_p]` for functions with
/// polynomial bodies.
///
/// Expanding along the `y` row, the coefficient of `y^{(j)}` is
/// `(−1)^{p+j}` times the minor without column `j`, over the base Wronskian;
/// the row gauges cancel between the two.
fn wronskian_ratio_polynomial(fs: &[(i64, Polynomial)]) -> DiffOperator {
    let p = fs.len();
    if p == 0 {
        return DiffOperator::identity();
    }
    // rows: body of f_i^{(0..=p)}
    let rows: Vec<Vec<Polynomial>> = fs
        .iter()
        .map(|(gauge, body)| {
            GaugedRational::new(*gauge, body.clone())
                .derivatives(p + 1)
                .into_iter()
                .map(|g| {
                    g.body
                        .as_polynomial()
                        .expect("polynomial bodies stay polynomial")
                        .clone()
                })
                .collect()
        })
        .collect();
    let minor = |skip: usize| -> Polynomial {
        let m: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        det_poly(&m).expect("square")
    };
    let base = minor(p);
    assert!(!base.is_zero(), "linearly dependent seed functions");
    let coeffs = (0..=p)
        .map(|j| {
            if j == p {
                return RationalFunction::one();
            }
            let c = minor(j);
            let c = if (p + j).is_multiple_of(2) { c } else { -c };
            RationalFunction::new(c, base.clone())
        })
        .collect();
    DiffOperator::new(coeffs)
}

/// The same Wronskian-ratio operator for arbitrary gauged rationals, computed
/// directly over ℚ(x). Slower; kept as an independent route.
pub fn wronskian_ratio_operator(fs: &[GaugedRational]) -> DiffOperator {
    let p = fs.len();
    if p == 0 {
        return DiffOperator::identity();
    }
    let rows: Vec<Vec<RationalFunction>> = fs
        .iter()
        .map(|f| f.derivatives(p + 1).into_iter().map(|g| g.body).collect())
        .collect();
    let minor = |skip: usize| {
        let m: Vec<Vec<RationalFunction>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        crate::algebra::det_rational(&m).expect("square")
    };
    let base = minor(p);
    let coeffs = (0..=p)
        .map(|j| {
            let c = &minor(j) / &base;
            if (p + j).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();
    DiffOperator::new(coeffs)
}

/// `A_{M,K}[y] = Wr[ψ_{M,k_1}, …, ψ_{M,k_p}, y] / Wr[ψ_{M,k_1}, …, ψ_{M,k_p}]`
/// for a set `K`.
pub fn intertwiner(m: &MayaDiagram, flips: &[i64]) -> Result<DiffOperator> {
    let mut ks = flips.to_vec();
    ks.sort_unstable();
    if let Some(w) = ks.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedFlip(w[0]));
    }
    if ks.is_empty() {
        return Ok(DiffOperator::identity());
    }
    // With w = H_M, each w·ψ_{M,k} = e^{±x²/2} H_{f_k(M)} has a polynomial
    // body, and A = w⁻¹ ∘ A_{w·ψ} ∘ w.
    let w = wronskian_polynomial(m);
    let seeds: Vec<(i64, Polynomial)> = ks
        .iter()
        .map(|&k| {
            let eps = if m.contains(k) { 1 } else { -1 };
            (eps, wronskian_polynomial(&m.flip(k)))
        })
        .collect();
    let inner = wronskian_ratio_polynomial(&seeds);
    if w.degree() == Some(0) {
        return Ok(inner);
    }
    let w_rf = RationalFunction::from(w.clone());
    let conjugated = inner.compose(&DiffOperator::multiplication(w_rf.clone()));
    let inv = w_rf.recip();
    Ok(DiffOperator::new(
        conjugated.coeffs().iter().map(|c| c * &inv).collect(),
    ))
}

/// `A_{M,K} = A_{M,K_0} ∘ ∏_{k∈K_1} (2k+1 − T_M)` for `K = K_0 ∪ K_1 ∪ K_1`.
pub fn intertwiner_multiset(m: &MayaDiagram, flips: &IntegerMultiset) -> DiffOperator {
    let (odd, half) = flips.decompose();
    let primitive = intertwiner(m, &odd).expect("odd part is a set");
    if half.is_empty() {
        return primitive;
    }
    let t = schrodinger(m);
    half.elements().into_iter().fold(primitive, |acc, k| {
        acc.compose(&shifted_resolvent_factor(&t, k))
    })
}

/// A morphism `(M, K)` of Maya diagrams: source `M`, target `f_K(M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: MayaDiagram,
    pub flips: IntegerMultiset,
}

impl Arrow {
    pub fn new(source: MayaDiagram, flips: IntegerMultiset) -> Self {
        Self { source, flips }
    }

    pub fn identity(source: MayaDiagram) -> Self {
        Self::new(source, IntegerMultiset::new())
    }

    pub fn target(&self) -> MayaDiagram {
        self.source.multi_flip(&self.flips)
    }

    /// True when `K` is a set, i.e. the intertwiner has no `p(T_M)` factor.
    pub fn is_primitive(&self) -> bool {
        self.flips.is_set()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Arrow) -> Result<Arrow> {
        let target = self.target();
        if next.source != target {
            return Err(Error::ArrowMismatch {
                source_diagram: next.source.to_string(),
                target: target.to_string(),
            });
        }
        Ok(Arrow::new(
            self.source.clone(),
            self.flips.union(&next.flips),
        ))
    }

    /// The intertwiner `A_{M,K}` realizing this arrow.
    pub fn operator(&self) -> DiffOperator {
        intertwiner_multiset(&self.source, &self.flips)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.source, self.flips)
    }
}

/// `(M_2, K_2) ∘ (M_1, K_1) = (M_1, K_1 ∪ K_2)`, defined when `M_2 = f_{K_1}(M_1)`.
pub fn compose_arrows(second: &Arrow, first: &Arrow) -> Result<Arrow> {
    first.then(second)
}

/// `A_{M,K} T_M = T_{f_K(M)} A_{M,K}` as an exact operator identity.
pub fn verify_intertwining(m: &MayaDiagram, flips: &IntegerMultiset) -> bool {
    let a = intertwiner_multiset(m, flips);
    let t_source = schrodinger(m);
    let t_target = schrodinger(&m.multi_flip(flips));
    a.compose(&t_source) == t_target.compose(&a)
}

/// `A_{M_2,K_2} ∘ A_{M,K_1} = A_{M,K_1 ∪ K_2}` with `M_2 = f_{K_1}(M)`.
pub fn verify_functor(m: &MayaDiagram, first: &IntegerMultiset, second: &IntegerMultiset) -> bool {
    let mid = m.multi_flip(first);
    let lhs = intertwiner_multiset(&mid, second).compose(&intertwiner_multiset(m, first));
    lhs == intertwiner_multiset(m, &first.union(second))
}

/// The primitive ladder operator `L_n = A_{M,(M+n)⊖M}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderResult {
    pub operator: DiffOperator,
    pub order: usize,
    #[serde(rename = "flipSet")]
    pub flip_set: Vec<i64>,
    pub shift: i64,
}

pub fn ladder(m: &MayaDiagram, n: i64) -> Result<LadderResult> {
    let flip_set = m.ladder_flip_set(n)?;
    let operator = intertwiner(m, &flip_set)?;
    Ok(LadderResult {
        order: flip_set.len(),
        operator,
        flip_set,
        shift: n,
    })
}

/// `n + 2 Σ_i g_i` over the genera of the modular components `M_i`.
pub fn ladder_order(m: &MayaDiagram, n: i64) -> Result<usize> {
    let parts = m.modular_decompose(n)?;
    Ok(n as usize + 2 * parts.iter().map(MayaDiagram::genus).sum::<usize>())
}

/// The flip set `⋃_i (n·B_i + i)` assembled from the block coordinates of the
/// modular components, sorted.
pub fn ladder_flip_set_from_blocks(m: &MayaDiagram, n: i64) -> Result<Vec<i64>> {
    let parts = m.modular_decompose(n)?;
    let mut out: Vec<i64> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, part)| {
            part.block_coordinates()
                .coords()
                .iter()
                .map(|&b| n * b + i as i64)
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The relation `L_1ⁿ = L_n ∘ p(T_M)` with `p(T) = ∏_{k∈K_1}(2k+1−T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Syzygy {
    /// `⋃_{j<n} ((M+1)⊖M + j)`, the flips of the composed elementary ladders.
    pub multiset: IntegerMultiset,
    /// Odd-multiplicity part `K_0`; equals `(M+n)⊖M`.
    #[serde(rename = "oddPart")]
    pub odd_part: Vec<i64>,
    #[serde(rename = "evenPart")]
    pub even_part: IntegerMultiset,
    /// Roots `2k+1` of `p`, with multiplicity, ascending.
    #[serde(rename = "polynomialRoots")]
    pub polynomial_roots: Vec<i64>,
    #[serde(rename = "identityHolds")]
    pub identity_holds: bool,
}

impl Syzygy {
    /// `p(T)` as a polynomial in `T`, ascending coefficients.
    pub fn polynomial(&self) -> Polynomial {
        self.polynomial_roots
            .iter()
            .fold(Polynomial::one(), |acc, &r| {
                &acc * &Polynomial::from_ints(&[r, -1])
            })
    }
}

pub fn syzygy(m: &MayaDiagram, n: i64) -> Result<Syzygy> {
    if n < 1 {
        return Err(Error::NonPositiveModulus(n));
    }
    let step = m.ladder_flip_set(1)?;
    let multiset = (0..n).fold(IntegerMultiset::new(), |acc, j| {
        acc.union(&IntegerMultiset::from_elements(step.iter().map(|&k| k + j)))
    });
    let (odd_part, even_part) = multiset.decompose();
    let flip_set = m.ladder_flip_set(n)?;
    if odd_part != flip_set {
        return Err(Error::Internal(format!(
            "odd part {odd_part:?} of the composed ladder differs from (M+{n})⊖M = {flip_set:?}"
        )));
    }
    let polynomial_roots = even_part.elements().iter().map(|&k| 2 * k + 1).collect();

    let l1 = intertwiner(m, &step)?;
    let chain = l1.pow(n as u32);
    let t = schrodinger(m);
    let p_of_t = even_part
        .elements()
        .into_iter()
        .fold(DiffOperator::identity(), |acc, k| {
            acc.compose(&shifted_resolvent_factor(&t, k))
        });
    let rhs = intertwiner(m, &flip_set)?.compose(&p_of_t);
    Ok(Syzygy {
        multiset,
        odd_part,
        even_part,
        polynomial_roots,
        identity_holds: chain == rhs,
    })
}

/// `C_{M,n,k}` with `L_n[ψ_{M,k}] = C·ψ_{M,k−n}`, extracted as an exact quotient.
/// Zero when `k − n ∈ M`.
pub fn ladder_coefficient(m: &MayaDiagram, n: i64, k: i64) -> Result<Rational> {
    if m.contains(k) {
        return Err(Error::StateInDiagram(k));
    }
    let l = ladder(m, n)?.operator;
    let image = l.apply(&eigenfunction(m, k).function);
    if m.contains(k - n) {
        return if image.is_zero() {
            Ok(integer(0))
        } else {
            Err(Error::Internal(format!(
                "L_{n} ψ_{{M,{k}}} should vanish on {m}"
            )))
        };
    }
    image
        .ratio_constant(&eigenfunction(m, k - n).function)
        .ok_or_else(|| {
            Error::Internal(format!(
                "L_{n} ψ_{{M,{k}}} is not proportional to ψ_{{M,{}}}",
                k - n
            ))
        })
}

/// `(k−n+1)_n · 2ⁿ`, the coefficient for the trivial diagram.
pub fn pochhammer_coefficient(n: i64, k: i64) -> Rational {
    (0..n).fold(integer(1), |acc, i| acc * integer(2 * (k - n + 1 + i)))
}

/// Single-flip arrows `(M_0,{k_1}), (M_1,{k_2}), …` with `M_{i} = f_{k_i}(M_{i−1})`.
pub fn first_order_factorization(
    m: &MayaDiagram,
    flips: &[i64],
    order: &[i64],
) -> Result<Vec<Arrow>> {
    let mut a = flips.to_vec();
    let mut b = order.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b || a.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotAPermutation {
            order: order.to_vec(),
            set: flips.to_vec(),
        });
    }
    let mut current = m.clone();
    Ok(order
        .iter()
        .map(|&k| {
            let arrow = Arrow::new(current.clone(), IntegerMultiset::from_elements([k]));
            current = current.flip(k);
            arrow
        })
        .collect())
}

/// Ascending flip order, the default factorization.
pub fn ascending_factorization(m: &MayaDiagram, flips: &[i64]) -> Result<Vec<Arrow>> {
    let mut order = flips.to_vec();
    order.sort_unstable();
    first_order_factorization(m, flips, &order)
}

/// Composite operator of an arrow chain, last arrow outermost.
pub fn chain_operator(arrows: &[Arrow]) -> DiffOperator {
    arrows.iter().fold(DiffOperator::identity(), |acc, a| {
        a.operator().compose(&acc)
    })
}
