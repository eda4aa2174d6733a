//! Finite multisets of integers, the flip data of composed arrows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finite integer multiset, stored as element → multiplicity.
///
/// Multiplicities are always at least one; union adds multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerMultiset {
    entries: BTreeMap<i64, u32>,
}

impl IntegerMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from a list in which repetition means multiplicity.
    pub fn from_elements<I: IntoIterator<Item = i64>>(items: I) -> Self {
        let mut out = Self::new();
        for k in items {
            out.insert(k, 1);
        }
        out
    }

    /// Builds a multiset from `(element, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (i64, u32)>>(pairs: I) -> Self {
        let mut out = Self::new();
        for (k, m) in pairs {
            out.insert(k, m);
        }
        out
    }

    pub fn insert(&mut self, k: i64, multiplicity: u32) {
        if multiplicity > 0 {
            *self.entries.entry(k).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, k: i64) -> u32 {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    /// Total number of elements counted with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.entries.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when no element repeats.
    pub fn is_set(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// True when every multiplicity is even; such a multi-flip acts trivially.
    pub fn is_even(&self) -> bool {
        self.entries.values().all(|&m| m % 2 == 0)
    }

    /// Distinct elements in ascending order.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.entries.iter().map(|(&k, &m)| (k, m))
    }

    /// All elements ascending, each repeated by its multiplicity.
    pub fn elements(&self) -> Vec<i64> {
        self.pairs()
            .flat_map(|(k, m)| std::iter::repeat_n(k, m as usize))
            .collect()
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, m) in other.pairs() {
            out.insert(k, m);
        }
        out
    }

    pub fn translate(&self, n: i64) -> Self {
        Self::from_pairs(self.pairs().map(|(k, m)| (k + n, m)))
    }

    /// Splits `K` as `K0 ∪ K1 ∪ K1` where `K0` holds the odd-multiplicity
    /// elements (as a set) and `K1` the halved remainder.
    pub fn decompose(&self) -> (Vec<i64>, IntegerMultiset) {
        let odd = self
            .pairs()
            .filter(|&(_, m)| m % 2 == 1)
            .map(|(k, _)| k)
            .collect();
        let half = Self::from_pairs(self.pairs().map(|(k, m)| (k, m / 2)));
        (odd, half)
    }
}

impl FromIterator<i64> for IntegerMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        Self::from_elements(iter)
    }
}

impl fmt::Display for IntegerMultiset {
    /// `{-2,(-1)^2,0^2,1}`; the exponent marks repetition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, m)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match (m, k < 0) {
                (1, _) => write!(f, "{k}")?,
                (_, true) => write!(f, "({k})^{m}")?,
                (_, false) => write!(f, "{k}^{m}")?,
            }
        }
        f.write_str("}")
    }
}

impl Serialize for IntegerMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, u32)> = self.pairs().collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntegerMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, u32)>::deserialize(deserializer)?;
        Ok(Self::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_set() {
        let k = IntegerMultiset::from_elements([0, 1]);
        let (k0, k1) = k.decompose();
        assert_eq!(k0, vec![0, 1]);
        assert!(k1.is_empty());
    }

    #[test]
    fn decompose_even() {
        let k = IntegerMultiset::from_elements([0, 0]);
        assert!(k.is_even());
        let (k0, k1) = k.decompose();
        assert!(k0.is_empty());
        assert_eq!(k1, IntegerMultiset::from_elements([0]));
    }

    #[test]
    fn decompose_syzygy_multiset() {
        let k = IntegerMultiset::from_pairs([(-2, 1), (-1, 2), (0, 2), (1, 1)]);
        let (k0, k1) = k.decompose();
        assert_eq!(k0, vec![-2, 1]);
        assert_eq!(k1, IntegerMultiset::from_elements([-1, 0]));
        let rebuilt = IntegerMultiset::from_elements(k0).union(&k1).union(&k1);
        assert_eq!(rebuilt, k);
    }

    #[test]
    fn display_marks_repetition() {
        let k = IntegerMultiset::from_pairs([(-2, 1), (-1, 2), (0, 2), (1, 1)]);
        assert_eq!(k.to_string(), "{-2,(-1)^2,0^2,1}");
        assert_eq!(k.cardinality(), 6);
    }

    #[test]
    fn json_pairs() {
        let k = IntegerMultiset::from_elements([3, 0, 3]);
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, "[[0,1],[3,2]]");
        let back: IntegerMultiset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k);
    }
}
