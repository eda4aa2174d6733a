//! The bounded invariant suite behind `verify-all`.
//!
//! Every diagram whose index set lies in a window `[-r, r]` with at most `s`
//! elements is checked against the combinatorial, Wronskian, spectral and
//! intertwining identities. Diagrams are independent, so they are checked in
//! parallel and the per-diagram tallies are merged in family order.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{integer, sturm_real_roots};
use crate::cancel::Cancellation;
use crate::error::Result;
use crate::extension::{eigenfunction, is_regular, schrodinger};
use crate::hermite::{normalized_h, pseudo_wronskian, wronskian_polynomial};
use crate::intertwine::{
    intertwiner, intertwiner_multiset, ladder, ladder_coefficient, ladder_flip_set_from_blocks,
    ladder_order, pochhammer_coefficient, syzygy, verify_functor,
};
use crate::maya::MayaDiagram;
use crate::multiset::IntegerMultiset;

/// Bounds of the verified family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Family {
    /// Index sets are drawn from `[-radius, radius]`.
    pub radius: i64,
    #[serde(rename = "maxSize")]
    pub max_size: usize,
    /// Ladder shifts `1 ≤ |n| ≤ max_shift`.
    #[serde(rename = "maxShift")]
    pub max_shift: i64,
    /// Eigenfunction labels `k` in `[kmin, kmax]`.
    #[serde(rename = "kRange")]
    pub k_range: (i64, i64),
    /// Functor-law flip sets are drawn from `[-functor_radius, functor_radius]`.
    #[serde(rename = "functorRadius")]
    pub functor_radius: i64,
}

impl Default for Family {
    fn default() -> Self {
        Self {
            radius: 4,
            max_size: 3,
            max_shift: 3,
            k_range: (-4, 6),
            functor_radius: 2,
        }
    }
}

impl Family {
    pub fn diagrams(&self) -> Vec<MayaDiagram> {
        subsets(-self.radius, self.radius, self.max_size)
            .into_iter()
            .map(|s| MayaDiagram::from_index_set(s).expect("distinct"))
            .collect()
    }
}

/// All subsets of `[lo, hi]` with at most `max` elements, each ascending,
/// ordered by size and then lexicographically.
pub fn subsets(lo: i64, hi: i64, max: usize) -> Vec<Vec<i64>> {
    fn extend(start: i64, hi: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=hi {
            cur.push(x);
            extend(x + 1, hi, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=max {
        extend(lo, hi, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Tally of one named identity over the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    /// At most [`MAX_LISTED`] failing cases, described in text.
    pub failures: Vec<String>,
    #[serde(rename = "failureCount")]
    pub failure_count: usize,
}

pub const MAX_LISTED: usize = 10;

impl CheckReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn record(&mut self, holds: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(describe());
            }
        }
    }

    fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_LISTED {
                self.failures.push(f);
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.failure_count == 0
    }
}

/// Names of the checks, in report order.
pub const CHECKS: [&str; 12] = [
    "flips",
    "block-coordinates",
    "translation",
    "pseudo-wronskian",
    "eigen-relation",
    "regularity",
    "intertwining",
    "intertwiner-translation",
    "functor-law",
    "ladders",
    "ladder-coefficients",
    "syzygies",
];

/// Diagrams on which syzygies are verified, as index sets.
pub fn syzygy_diagrams() -> Vec<MayaDiagram> {
    let mut out = vec![MayaDiagram::trivial()];
    out.extend((1..=3).map(MayaDiagram::single_hole));
    out.push(MayaDiagram::from_index_set([1, 2]).expect("distinct"));
    out
}

pub fn verify_family(family: &Family, cancel: &Cancellation) -> Result<Vec<CheckReport>> {
    let diagrams = family.diagrams();
    let flip_sets: Vec<IntegerMultiset> = subsets(-family.radius, family.radius, family.max_size)
        .into_iter()
        .map(IntegerMultiset::from_elements)
        .collect();
    let functor_sets: Vec<IntegerMultiset> = subsets(
        -family.functor_radius,
        family.functor_radius,
        family.max_size,
    )
    .into_iter()
    .filter(|s| !s.is_empty())
    .map(IntegerMultiset::from_elements)
    .collect();

    let per_diagram: Vec<Vec<CheckReport>> = diagrams
        .par_iter()
        .map(|m| {
            cancel.check()?;
            Ok(check_diagram(m, family, &flip_sets, &functor_sets, cancel))
        })
        .collect::<Result<_>>()?;

    let mut reports: Vec<CheckReport> = CHECKS.iter().map(|n| CheckReport::new(n)).collect();
    for batch in per_diagram {
        for (total, part) in reports.iter_mut().zip(batch) {
            total.merge(part);
        }
    }
    let syz = reports.last_mut().expect("nonempty");
    for m in syzygy_diagrams() {
        for n in 1..=family.max_shift {
            cancel.check()?;
            let outcome = syzygy(&m, n);
            syz.record(matches!(outcome, Ok(ref s) if s.identity_holds), || {
                format!("{m} n={n}")
            });
        }
    }
    Ok(reports)
}

fn check_diagram(
    m: &MayaDiagram,
    family: &Family,
    flip_sets: &[IntegerMultiset],
    functor_sets: &[IntegerMultiset],
    cancel: &Cancellation,
) -> Vec<CheckReport> {
    let mut r: Vec<CheckReport> = CHECKS.iter().map(|n| CheckReport::new(n)).collect();
    let sigma = m.index();
    let window = -(family.radius + 1)..=(family.radius + 1);

    for k in window.clone() {
        let f = m.flip(k);
        let expected = if m.contains(k) { sigma - 1 } else { sigma + 1 };
        r[0].record(f.flip(k) == *m && f.index() == expected, || {
            format!("{m} k={k}")
        });
        for j in window.clone().filter(|&j| j > k) {
            r[0].record(m.flip(k).flip(j) == m.flip(j).flip(k), || {
                format!("{m} k={k} j={j}")
            });
        }
    }

    let b = m.block_coordinates();
    r[1].record(b.diagram() == *m, || format!("{m} round trip"));
    r[1].record(m.flip_set(b.coords()) == m.translate(1), || {
        format!("{m} f_B(M)=M+1")
    });
    r[1].record(2 * b.genus() + 1 == b.coords().len(), || {
        format!("{m} genus")
    });

    let h_hat = normalized_h(m);
    for n in -family.max_shift..=family.max_shift {
        let t = m.translate(n);
        r[2].record(t.index() == sigma + n && t.is_translate_of(m), || {
            format!("{m} n={n}")
        });
        r[3].record(normalized_h(&t) == h_hat, || format!("{m} Ĥ shift n={n}"));
    }
    r[3].record(wronskian_polynomial(m) == pseudo_wronskian(m), || {
        format!("{m} H_M")
    });

    let t_m = schrodinger(m);
    for k in family.k_range.0..=family.k_range.1 {
        let f = eigenfunction(m, k).function;
        r[4].record(t_m.apply(&f) == f.scale(&integer(2 * k + 1)), || {
            format!("{m} k={k}")
        });
    }
    for n in [-1, 1] {
        let shifted = schrodinger(&m.translate(n));
        r[4].record(shifted == t_m.plus_scalar(&integer(2 * n)), || {
            format!("{m} covariance n={n}")
        });
    }

    let sturm = sturm_real_roots(&wronskian_polynomial(m)).unwrap_or(usize::MAX);
    r[5].record(is_regular(m) == (sturm == 0), || {
        format!("{m} Sturm count {sturm}")
    });

    if cancel.is_cancelled() {
        return r;
    }
    let shifted = m.translate(1);
    for k in flip_sets {
        let a = intertwiner_multiset(m, k);
        let target = schrodinger(&m.multi_flip(k));
        let holds = a.order() == Some(k.cardinality())
            && a.is_monic()
            && a.compose(&t_m) == target.compose(&a);
        r[6].record(holds, || format!("{m} K={k}"));
        let moved = intertwiner(&shifted, &k.translate(1).elements()).ok();
        r[7].record(moved.as_ref() == Some(&a), || format!("{m} K={k}"));
    }

    if cancel.is_cancelled() {
        return r;
    }
    for k1 in functor_sets {
        for k2 in functor_sets
            .iter()
            .filter(|k2| k1.cardinality() + k2.cardinality() <= family.max_size)
        {
            r[8].record(verify_functor(m, k1, k2), || format!("{m} K1={k1} K2={k2}"));
        }
    }

    for n in (-family.max_shift..=family.max_shift).filter(|&n| n != 0) {
        let Ok(l) = ladder(m, n) else {
            r[9].record(false, || format!("{m} n={n} construction"));
            continue;
        };
        let lhs = l.operator.compose(&t_m);
        let rhs = t_m.plus_scalar(&integer(2 * n)).compose(&l.operator);
        r[9].record(lhs == rhs && l.operator.order() == Some(l.order), || {
            format!("{m} n={n} identity")
        });
        if n > 0 {
            let by_blocks = ladder_flip_set_from_blocks(m, n).ok();
            r[9].record(
                ladder_order(m, n).ok() == Some(l.order)
                    && by_blocks.as_deref() == Some(l.flip_set.as_slice()),
                || format!("{m} n={n} order theorem"),
            );
        }
    }

    for n in 1..=family.max_shift {
        for k in (family.k_range.0..=family.k_range.1).filter(|&k| !m.contains(k)) {
            let c = ladder_coefficient(m, n, k);
            let holds = match &c {
                Ok(c) if m.contains(k - n) => *c == integer(0),
                Ok(c) if m.index_set().is_empty() => *c == pochhammer_coefficient(n, k),
                Ok(_) => true,
                Err(_) => false,
            };
            r[10].record(holds, || format!("{m} n={n} k={k}"));
        }
    }
    r
}

/// Convenience wrapper: the default family with no cancellation.
pub fn verify_all() -> Result<Vec<CheckReport>> {
    verify_family(&Family::default(), &Cancellation::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(-4, 4, 3).len(), 1 + 9 + 36 + 84);
        assert_eq!(subsets(0, 1, 2), vec![vec![], vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn tiny_family_holds() {
        let family = Family {
            radius: 1,
            max_size: 2,
            max_shift: 2,
            k_range: (-2, 3),
            functor_radius: 1,
        };
        let reports = verify_family(&family, &Cancellation::new()).unwrap();
        assert_eq!(reports.len(), CHECKS.len());
        for r in &reports {
            assert!(r.holds(), "{}: {:?}", r.name, r.failures);
            assert!(r.cases > 0, "{}", r.name);
        }
    }

    #[test]
    fn cancellation_stops_the_run() {
        let cancel = Cancellation::new();
        cancel.cancel();
        assert_eq!(
            verify_family(&Family::default(), &cancel),
            Err(Error::Cancelled)
        );
    }
}
