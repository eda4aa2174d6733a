//! Maya diagrams: integer sets containing all sufficiently negative integers
//! and finitely many non-negative ones.
//!
//! A diagram is stored by its index set `K = M ⊖ ℤ₋`, so `m ∈ M` exactly when
//! one of `m < 0`, `m ∈ K` holds. Every operation here is a pure function on
//! that finite encoding.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::IntegerMultiset;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct MayaDiagram {
    index_set: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    #[serde(rename = "indexSet")]
    index_set: Vec<i64>,
}

impl TryFrom<DiagramJson> for MayaDiagram {
    type Error = Error;
    fn try_from(value: DiagramJson) -> Result<Self> {
        MayaDiagram::from_index_set(value.index_set)
    }
}

impl From<MayaDiagram> for DiagramJson {
    fn from(value: MayaDiagram) -> Self {
        DiagramJson {
            index_set: value.index_set,
        }
    }
}

impl MayaDiagram {
    /// The trivial diagram `ℤ₋`.
    pub fn trivial() -> Self {
        Self::default()
    }

    /// `f_K(ℤ₋)`. The elements may come in any order but must be distinct.
    pub fn from_index_set<I: IntoIterator<Item = i64>>(set: I) -> Result<Self> {
        let mut index_set: Vec<i64> = set.into_iter().collect();
        index_set.sort_unstable();
        if let Some(w) = index_set.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(Self { index_set })
    }

    fn from_sorted(index_set: Vec<i64>) -> Self {
        debug_assert!(index_set.windows(2).all(|w| w[0] < w[1]));
        Self { index_set }
    }

    /// `Ξ(B) = (−∞,b₀) ∪ [b₁,b₂) ∪ ⋯ ∪ [b_{2g−1},b_{2g})`.
    pub fn from_block_coordinates(coords: &[i64]) -> Result<Self> {
        if coords.len().is_multiple_of(2) {
            return Err(Error::EvenBlockLength(coords.len()));
        }
        if let Some(i) = coords.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingBlocks(i + 1));
        }
        let member = |m: i64| {
            // number of coordinates ≤ m: even ⇒ inside a filled run
            let passed = coords.partition_point(|&b| b <= m);
            passed % 2 == 0
        };
        let lo = coords[0].min(0);
        let hi = coords[coords.len() - 1].max(0);
        let index_set = (lo..hi).filter(|&m| member(m) != (m < 0)).collect();
        Ok(Self::from_sorted(index_set))
    }

    /// The `M̃_n = ℤ₋ ∖ {−n}` family (index set `{−n}`).
    pub fn single_hole(n: i64) -> Self {
        Self::from_sorted(vec![-n])
    }

    pub fn index_set(&self) -> &[i64] {
        &self.index_set
    }

    pub fn contains(&self, m: i64) -> bool {
        (m < 0) != self.index_set.binary_search(&m).is_ok()
    }

    /// The index `σ`: non-negative minus negative elements of the index set.
    pub fn index(&self) -> i64 {
        let negatives = self.index_set.partition_point(|&k| k < 0);
        (self.index_set.len() - negatives) as i64 - negatives as i64
    }

    pub fn flip(&self, k: i64) -> Self {
        let mut set = self.index_set.clone();
        match set.binary_search(&k) {
            Ok(i) => {
                set.remove(i);
            }
            Err(i) => set.insert(i, k),
        }
        Self::from_sorted(set)
    }

    /// `f_K(M)`; only the odd-multiplicity elements of `K` act.
    pub fn multi_flip(&self, flips: &IntegerMultiset) -> Self {
        let (odd, _) = flips.decompose();
        self.flip_set(&odd)
    }

    /// `f_K(M)` for a plain set `K` (duplicates cancel pairwise).
    pub fn flip_set(&self, flips: &[i64]) -> Self {
        let mut set: BTreeSet<i64> = self.index_set.iter().copied().collect();
        for &k in flips {
            if !set.remove(&k) {
                set.insert(k);
            }
        }
        Self::from_sorted(set.into_iter().collect())
    }

    /// `M ⊖ other`, the edge joining the two diagrams.
    pub fn symmetric_difference(&self, other: &Self) -> Vec<i64> {
        let a: BTreeSet<i64> = self.index_set.iter().copied().collect();
        let b: BTreeSet<i64> = other.index_set.iter().copied().collect();
        a.symmetric_difference(&b).copied().collect()
    }

    /// Half-open window `[lo, hi)` outside of which `M` agrees with `ℤ₋`.
    fn support_window(&self) -> (i64, i64) {
        let lo = self.index_set.first().map_or(0, |&k| k.min(0));
        let hi = self.index_set.last().map_or(0, |&k| (k + 1).max(0));
        (lo, hi)
    }

    /// `M + n = { m + n : m ∈ M }`.
    pub fn translate(&self, n: i64) -> Self {
        let (lo, hi) = self.support_window();
        let index_set = ((lo + n).min(lo)..(hi + n).max(hi))
            .filter(|&m| (m < 0) != self.contains(m - n))
            .collect();
        Self::from_sorted(index_set)
    }

    /// `B` with `Ξ(B) = M`, equivalently the unique set with `f_B(M) = M + 1`.
    pub fn block_coordinates(&self) -> BlockCoordinates {
        let coords = self.translate(1).symmetric_difference(self);
        BlockCoordinates::from_coords(coords)
    }

    pub fn genus(&self) -> usize {
        self.block_coordinates().genus()
    }

    pub fn frobenius_symbol(&self) -> FrobeniusSymbol {
        let negatives = self.index_set.partition_point(|&k| k < 0);
        let s = self.index_set[..negatives]
            .iter()
            .map(|&k| (-1 - k) as u64)
            .collect();
        let t = self.index_set[negatives..]
            .iter()
            .rev()
            .map(|&k| k as u64)
            .collect();
        FrobeniusSymbol { s, t }
    }

    /// `M_i = { m : m·n + i ∈ M }` for `i = 0, …, n−1`.
    pub fn modular_decompose(&self, n: i64) -> Result<Vec<MayaDiagram>> {
        if n <= 0 {
            return Err(Error::NonPositiveModulus(n));
        }
        let (lo, hi) = self.support_window();
        Ok((0..n)
            .map(|i| {
                let from = (lo - i).div_euclid(n) - 1;
                let to = (hi - i).div_euclid(n) + 2;
                let set = (from..to)
                    .filter(|&m| (m < 0) != self.contains(m * n + i))
                    .collect();
                Self::from_sorted(set)
            })
            .collect())
    }

    /// `(M + n) ⊖ M`, the flip set of the primitive ladder operator with shift `n`.
    pub fn ladder_flip_set(&self, n: i64) -> Result<Vec<i64>> {
        if n == 0 {
            return Err(Error::ZeroShift);
        }
        Ok(self.translate(n).symmetric_difference(self))
    }

    /// The translate with index 0, together with the shift that produced it.
    pub fn canonical_unlabelled(&self) -> (MayaDiagram, i64) {
        let shift = -self.index();
        (self.translate(shift), shift)
    }

    pub fn is_translate_of(&self, other: &Self) -> bool {
        self.canonical_unlabelled().0 == other.canonical_unlabelled().0
    }

    /// One glyph per cell of `[lo, hi]` with `|` at the origin (between −1 and 0).
    pub fn render(&self, lo: i64, hi: i64, glyphs: Glyphs) -> Result<String> {
        if lo > hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        let (filled, empty) = glyphs.pair();
        let mut out = String::new();
        for m in lo..=hi {
            if m == 0 {
                out.push('|');
            }
            out.push(if self.contains(m) { filled } else { empty });
        }
        if hi == -1 {
            out.push('|');
        }
        Ok(out)
    }
}

/// Glyph set for [`MayaDiagram::render`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Glyphs {
    #[default]
    Unicode,
    /// `#` for members, `.` otherwise.
    Ascii,
}

impl Glyphs {
    fn pair(self) -> (char, char) {
        match self {
            Glyphs::Unicode => ('●', '○'),
            Glyphs::Ascii => ('#', '.'),
        }
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K:{{{}}}", join(&self.index_set))
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Odd-length increasing tuple `(b₀, …, b_{2g})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockCoordinates {
    coords: Vec<i64>,
}

impl BlockCoordinates {
    fn from_coords(coords: Vec<i64>) -> Self {
        debug_assert!(coords.len() % 2 == 1);
        Self { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn genus(&self) -> usize {
        (self.coords.len() - 1) / 2
    }

    /// Lengths of the finite filled runs `b_{2j} − b_{2j−1}`, `j = 1, …, g`.
    pub fn filled_run_lengths(&self) -> impl Iterator<Item = i64> + '_ {
        self.coords[1..].chunks(2).map(|c| c[1] - c[0])
    }

    pub fn diagram(&self) -> MayaDiagram {
        MayaDiagram::from_block_coordinates(&self.coords).expect("validated on construction")
    }
}

impl fmt::Display for BlockCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B:({})", join(&self.coords))
    }
}

/// `(s₁,…,s_r | t_q,…,t₁)` with `K = {−1−s₁,…,−1−s_r, t_q,…,t₁}`.
///
/// Both lists are stored strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    pub s: Vec<u64>,
    pub t: Vec<u64>,
}

impl FrobeniusSymbol {
    pub fn r(&self) -> usize {
        self.s.len()
    }

    pub fn q(&self) -> usize {
        self.t.len()
    }

    pub fn diagram(&self) -> Result<MayaDiagram> {
        let negatives = self.s.iter().map(|&s| -1 - s as i64);
        MayaDiagram::from_index_set(negatives.chain(self.t.iter().map(|&t| t as i64)))
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let t_ascending: Vec<u64> = self.t.iter().rev().copied().collect();
        write!(f, "({} | {})", show(&self.s), show(&t_ascending))
    }
}

// Text grammar: `K:{k1,k2,...}` or `B:(b0,b1,...)`.

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos + 1,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => self.err(format!("expected '{c}', found '{found}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+')))
            .count();
        match rest[..len].parse() {
            Ok(v) => {
                self.pos += len;
                Ok(v)
            }
            Err(_) => self.err("expected an integer"),
        }
    }

    fn list(&mut self, open: char, close: char) -> Result<Vec<i64>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.integer()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(c) => return self.err(format!("expected ',' or '{close}', found '{c}'")),
                None => return self.err(format!("expected '{close}', found end of input")),
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing '{c}'")),
        }
    }
}

/// Parses `K:{…}` (index set) or `B:(…)` (block coordinates).
pub fn parse_diagram(s: &str) -> Result<MayaDiagram> {
    let mut cur = Cursor::new(s);
    let tag = cur.peek();
    let diagram = match tag {
        Some('K') => {
            cur.pos += 1;
            cur.expect(':')?;
            let start = cur.pos;
            let set = cur.list('{', '}')?;
            MayaDiagram::from_index_set(set).map_err(|e| match e {
                Error::DuplicateElement(k) => Error::Parse {
                    pos: start + 1,
                    msg: format!("duplicate element {k} in index set"),
                },
                other => other,
            })?
        }
        Some('B') => {
            cur.pos += 1;
            cur.expect(':')?;
            let coords = cur.list('(', ')')?;
            MayaDiagram::from_block_coordinates(&coords)?
        }
        _ => return cur.err("expected 'K:{...}' or 'B:(...)'"),
    };
    cur.finish()?;
    Ok(diagram)
}

/// Parses a flip multiset written `{k1,k2,...}`. Repetition is allowed, either
/// literally or as `k^m` (negative `k` may be parenthesized, as in `(-1)^2`),
/// and a `K:` prefix is accepted.
pub fn parse_multiset(s: &str) -> Result<IntegerMultiset> {
    let mut cur = Cursor::new(s);
    if cur.peek() == Some('K') {
        cur.pos += 1;
        cur.expect(':')?;
    }
    cur.expect('{')?;
    let mut out = IntegerMultiset::new();
    if cur.peek() == Some('}') {
        cur.pos += 1;
        cur.finish()?;
        return Ok(out);
    }
    loop {
        let k = if cur.peek() == Some('(') {
            cur.pos += 1;
            let k = cur.integer()?;
            cur.expect(')')?;
            k
        } else {
            cur.integer()?
        };
        let mut multiplicity = 1;
        if cur.peek() == Some('^') {
            cur.pos += 1;
            let at = cur.pos;
            multiplicity = match u32::try_from(cur.integer()?) {
                Ok(m) if m > 0 => m,
                _ => {
                    cur.pos = at;
                    return cur.err("multiplicity must be a positive integer");
                }
            };
        }
        out.insert(k, multiplicity);
        match cur.peek() {
            Some(',') => cur.pos += 1,
            Some('}') => {
                cur.pos += 1;
                break;
            }
            Some(c) => return cur.err(format!("expected ',' or '}}', found '{c}'")),
            None => return cur.err("expected '}', found end of input"),
        }
    }
    cur.finish()?;
    Ok(out)
}

impl FromStr for MayaDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Members of `M` inside `[lo, hi]`, computed by toggling a literal set.
    fn window_members(index_set: &[i64], lo: i64, hi: i64) -> BTreeSet<i64> {
        let mut set: BTreeSet<i64> = (lo..0).collect();
        for &k in index_set {
            if !set.remove(&k) {
                set.insert(k);
            }
        }
        set.into_iter().filter(|m| (lo..=hi).contains(m)).collect()
    }

    fn k(set: &[i64]) -> MayaDiagram {
        MayaDiagram::from_index_set(set.iter().copied()).unwrap()
    }

    fn fig1() -> MayaDiagram {
        k(&[0, 1, 3, 4, 7, 8, 9])
    }

    #[test]
    fn index_set_construction() {
        assert_eq!(MayaDiagram::trivial().index(), 0);
        assert_eq!(fig1().index(), 7);
        assert_eq!(MayaDiagram::single_hole(3).index(), -1);
        assert_eq!(
            MayaDiagram::from_index_set([1, 1]),
            Err(Error::DuplicateElement(1))
        );
    }

    #[test]
    fn membership() {
        let trivial = MayaDiagram::trivial();
        assert!(trivial.contains(-1));
        assert!(!trivial.contains(0));
        assert!(!MayaDiagram::single_hole(2).contains(-2));
        assert!(MayaDiagram::single_hole(2).contains(-3));
    }

    #[test]
    fn index_matches_tail_enumeration() {
        // σ is the offset with m_i = −i + σ for large i: enumerate members descending.
        for set in [vec![1, 2], vec![-2, 0], vec![-5, -1, 4], vec![]] {
            let m = k(&set);
            let members: Vec<i64> = window_members(&set, -30, 30).into_iter().rev().collect();
            let i = 25usize;
            let sigma = members[i - 1] + i as i64;
            assert_eq!(m.index(), sigma, "{set:?}");
        }
        assert_eq!(k(&[1, 2]).index(), 2);
        assert_eq!(k(&[-2, 0]).index(), 0);
    }

    #[test]
    fn flips() {
        let trivial = MayaDiagram::trivial();
        assert_eq!(trivial.flip(0), k(&[0]));
        assert_eq!(trivial.flip(-2), k(&[-2]));
        assert_eq!(fig1().flip(5).flip(5), fig1());
    }

    #[test]
    fn multi_flips() {
        let trivial = MayaDiagram::trivial();
        assert_eq!(
            trivial.multi_flip(&IntegerMultiset::from_elements([0, 1])),
            k(&[0, 1])
        );
        let even = IntegerMultiset::from_elements([3, 3, -1, -1]);
        assert_eq!(fig1().multi_flip(&even), fig1());
        let m = MayaDiagram::single_hole(2);
        assert_eq!(
            m.multi_flip(&IntegerMultiset::from_elements([-2, -1, 0])),
            m.translate(1)
        );
    }

    #[test]
    fn symmetric_differences() {
        assert!(fig1().symmetric_difference(&fig1()).is_empty());
        let trivial = MayaDiagram::trivial();
        assert_eq!(trivial.symmetric_difference(&trivial.translate(1)), vec![0]);
        let m = MayaDiagram::single_hole(2);
        assert_eq!(m.symmetric_difference(&m.translate(2)), vec![-2, 1]);
    }

    #[test]
    fn translation() {
        assert_eq!(MayaDiagram::trivial().translate(1), k(&[0]));
        for n in 1..6 {
            let hat: Vec<i64> = (1..n).collect();
            assert_eq!(MayaDiagram::single_hole(n).translate(n), k(&hat));
        }
        assert_eq!(k(&[1, 2]).translate(-2), k(&[-2, 0]));
        // agree with a literal shift of the member window
        let m = k(&[-3, 0, 2, 5]);
        for n in -4..=4 {
            let shifted: BTreeSet<i64> = window_members(m.index_set(), -40, 40)
                .into_iter()
                .map(|x| x + n)
                .filter(|x| (-30..=30).contains(x))
                .collect();
            let t = m.translate(n);
            assert_eq!(window_members(t.index_set(), -30, 30), shifted);
        }
    }

    #[test]
    fn block_coordinates_examples() {
        let b = MayaDiagram::trivial().block_coordinates();
        assert_eq!(b.coords(), &[0]);
        assert_eq!(b.genus(), 0);
        let b = fig1().block_coordinates();
        assert_eq!(b.coords(), &[2, 3, 5, 7, 10]);
        assert_eq!(b.genus(), 2);
        assert_eq!(b.diagram(), fig1());
        assert_eq!(
            MayaDiagram::single_hole(1).block_coordinates().coords(),
            &[-1]
        );
        for n in 2..6 {
            let b = MayaDiagram::single_hole(n).block_coordinates();
            assert_eq!(b.coords(), &[-n, -n + 1, 0]);
            assert_eq!(b.genus(), 1);
        }
    }

    #[test]
    fn block_construction_errors() {
        assert_eq!(
            MayaDiagram::from_block_coordinates(&[1, 2]),
            Err(Error::EvenBlockLength(2))
        );
        assert_eq!(
            MayaDiagram::from_block_coordinates(&[1, 3, 3]),
            Err(Error::NonIncreasingBlocks(2))
        );
    }

    #[test]
    fn frobenius_symbols() {
        let f = MayaDiagram::trivial().frobenius_symbol();
        assert_eq!((f.r(), f.q()), (0, 0));
        let f = k(&[-2, 0]).frobenius_symbol();
        assert_eq!((f.s.clone(), f.t.clone()), (vec![1], vec![0]));
        assert_eq!(f.to_string(), "(1 | 0)");
        let f = k(&[1, 2]).frobenius_symbol();
        assert_eq!((f.s.clone(), f.t.clone()), (vec![], vec![2, 1]));
        assert_eq!(f.diagram().unwrap(), k(&[1, 2]));
    }

    #[test]
    fn modular_decomposition() {
        assert_eq!(fig1().modular_decompose(1).unwrap(), vec![fig1()]);
        let parts = MayaDiagram::single_hole(2).modular_decompose(2).unwrap();
        // ℤ_{≤−2} has index set {−1}; ℤ₋ is trivial
        assert_eq!(parts, vec![k(&[-1]), MayaDiagram::trivial()]);
        assert!(parts.iter().all(|p| p.genus() == 0));
        assert_eq!(
            MayaDiagram::trivial().modular_decompose(3).unwrap(),
            vec![MayaDiagram::trivial(); 3]
        );
        assert_eq!(
            MayaDiagram::trivial().modular_decompose(0),
            Err(Error::NonPositiveModulus(0))
        );
    }

    #[test]
    fn ladder_flip_sets() {
        assert_eq!(MayaDiagram::trivial().ladder_flip_set(1).unwrap(), vec![0]);
        assert_eq!(
            MayaDiagram::single_hole(1).ladder_flip_set(1).unwrap(),
            vec![-1]
        );
        for n in 2..6 {
            let m = MayaDiagram::single_hole(n);
            assert_eq!(m.ladder_flip_set(1).unwrap(), vec![-n, -n + 1, 0]);
            let mut expect = vec![-n];
            expect.extend(1..n);
            assert_eq!(m.ladder_flip_set(n).unwrap(), expect);
        }
        assert_eq!(fig1().ladder_flip_set(0), Err(Error::ZeroShift));
    }

    #[test]
    fn canonical_forms() {
        let trivial = MayaDiagram::trivial();
        assert_eq!(trivial.canonical_unlabelled(), (trivial.clone(), 0));
        assert_eq!(k(&[1, 2]).canonical_unlabelled(), (k(&[-2, 0]), -2));
        let m = MayaDiagram::single_hole(4);
        assert_eq!(m.canonical_unlabelled(), (m.translate(1), 1));
        assert!(fig1().is_translate_of(&fig1().translate(-9)));
        assert!(!k(&[1]).is_translate_of(&k(&[2])));
    }

    #[test]
    fn rendering() {
        let trivial = MayaDiagram::trivial();
        assert_eq!(trivial.render(-2, 2, Glyphs::Unicode).unwrap(), "●●|○○○");
        assert_eq!(
            MayaDiagram::single_hole(2)
                .render(-3, 1, Glyphs::Unicode)
                .unwrap(),
            "●○●|○○"
        );
        assert_eq!(trivial.render(-2, 2, Glyphs::Ascii).unwrap(), "##|...");
        assert_eq!(
            fig1().render(-3, 11, Glyphs::Ascii).unwrap(),
            "###|##.##..###.."
        );
        assert_eq!(
            trivial.render(1, 0, Glyphs::Ascii),
            Err(Error::EmptyWindow { lo: 1, hi: 0 })
        );
    }

    #[test]
    fn grammar() {
        assert_eq!(parse_diagram("K:{}").unwrap(), MayaDiagram::trivial());
        assert_eq!(parse_diagram("B:(2,3,5,7,10)").unwrap(), fig1());
        assert_eq!(parse_diagram(" K: { -2 , 0 } ").unwrap(), k(&[-2, 0]));
        assert_eq!(fig1().to_string().parse::<MayaDiagram>().unwrap(), fig1());
        assert!(matches!(
            parse_diagram("K:{1,1}"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_diagram("K:{1;2}"),
            Err(Error::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            parse_diagram("X:{}"),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(matches!(parse_diagram("K:{1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_diagram("K:{} x"),
            Err(Error::Parse { pos: 6, .. })
        ));
        assert_eq!(parse_diagram("B:(1,2)"), Err(Error::EvenBlockLength(2)));
        assert_eq!(
            parse_diagram("B:(3,2,5)"),
            Err(Error::NonIncreasingBlocks(1))
        );
        assert_eq!(
            parse_multiset("{0,0,1}").unwrap(),
            IntegerMultiset::from_pairs([(0, 2), (1, 1)])
        );
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&k(&[-2, 0])).unwrap();
        assert_eq!(s, r#"{"indexSet":[-2,0]}"#);
        let back: MayaDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k(&[-2, 0]));
        assert!(serde_json::from_str::<MayaDiagram>(r#"{"indexSet":[1,1]}"#).is_err());
    }
}
