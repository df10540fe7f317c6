//! Free-group arithmetic on the rank-two free group generated by `a` and `b`.
//!
//! Words are stored as flat letter sequences and are kept freely reduced by
//! every constructor that is not explicitly `unchecked`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseWordError;

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

/// A generator or its inverse.
///
/// The derived order `a < A < b < B` is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    /// `a`
    A = 0,
    /// `A`, the inverse of `a`
    AInv = 1,
    /// `b`
    B = 2,
    /// `B`, the inverse of `b`
    BInv = 3,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn new(generator: Generator, inverse: bool) -> Self {
        match (generator, inverse) {
            (Generator::A, false) => Letter::A,
            (Generator::A, true) => Letter::AInv,
            (Generator::B, false) => Letter::B,
            (Generator::B, true) => Letter::BInv,
        }
    }

    #[inline]
    pub fn generator(self) -> Generator {
        match self {
            Letter::A | Letter::AInv => Generator::A,
            Letter::B | Letter::BInv => Generator::B,
        }
    }

    /// `+1` for a generator, `-1` for an inverse.
    #[inline]
    pub fn sign(self) -> i8 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        (self as u8) & 1 == 1
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter::ALL[(self as usize) ^ 1]
    }

    /// The automorphism exchanging the two generators.
    #[inline]
    pub fn swap(self) -> Letter {
        Letter::ALL[(self as usize) ^ 2]
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }

    /// Smallest letter that may follow `self` in a reduced word.
    #[inline]
    pub(crate) fn first_successor(prev: Option<Letter>) -> Letter {
        match prev {
            Some(Letter::AInv) => Letter::AInv,
            _ => Letter::A,
        }
    }

    /// Next letter after `self` in enumeration order that may follow `prev`.
    #[inline]
    pub(crate) fn next_successor(self, prev: Option<Letter>) -> Option<Letter> {
        let forbidden = prev.map(Letter::inverse);
        ((self as usize + 1)..4)
            .map(|i| Letter::ALL[i])
            .find(|&l| Some(l) != forbidden)
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reducing(&mut out, l);
        }
        Word(out)
    }

    /// Wraps letters already known to be freely reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_reduced(&letters));
        Word(letters)
    }

    /// `letter^exp`, for any integer exponent.
    pub fn power_of(letter: Letter, exp: i64) -> Self {
        let l = if exp < 0 { letter.inverse() } else { letter };
        Word(vec![l; exp.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reducing(&mut out, l);
        }
        Word(out)
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `u · self · u⁻¹`, reduced.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.multiply(self).multiply(&u.invert())
    }

    /// Image under the generator swap `a ↔ b`, an isometry of the word metric.
    pub fn swap(&self) -> Word {
        Word(self.0.iter().map(|l| l.swap()).collect())
    }

    pub fn cyclic_reduce(&self) -> CyclicDecomposition {
        let c = cancelling_prefix_len(&self.0);
        CyclicDecomposition {
            core: Word(self.0[c..self.0.len() - c].to_vec()),
            conjugator: Word(self.0[..c].to_vec()),
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&f), Some(&l)) => self.0.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }
}

/// `w = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub core: Word,
    pub conjugator: Word,
}

impl CyclicDecomposition {
    pub fn recompose(&self) -> Word {
        self.core.conjugate_by(&self.conjugator)
    }
}

#[inline]
fn push_reducing(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

pub(crate) fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| p[0] != p[1].inverse())
}

/// Length of the maximal prefix `u` with `letters = u · core · u⁻¹`.
#[inline]
pub(crate) fn cancelling_prefix_len(letters: &[Letter]) -> usize {
    let n = letters.len();
    let mut c = 0;
    // the middle letter of an odd word can never cancel against itself
    while 2 * c + 1 < n && letters[c] == letters[n - 1 - c].inverse() {
        c += 1;
    }
    c
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Parses `a`, `A`, `b`, `B` letters, optionally separated by whitespace.
    /// The result is freely reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, c) in s.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(ParseWordError { token: c, position }),
            }
        }
        Ok(Word::reduce(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Streams the reduced words of one sphere in `a < A < b < B` lexicographic
/// order, reusing a single buffer.
#[derive(Debug, Clone)]
pub struct SphereWalker {
    buf: Vec<Letter>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl SphereWalker {
    /// Walks the sphere of radius `n`, restricted to words that begin with
    /// `prefix`. A prefix longer than `n` yields nothing.
    pub fn new(n: usize, prefix: &Word) -> Self {
        let fixed = prefix.len();
        let mut buf = Vec::with_capacity(n);
        buf.extend_from_slice(prefix.letters());
        let done = fixed > n;
        if !done {
            while buf.len() < n {
                let next = Letter::first_successor(buf.last().copied());
                buf.push(next);
            }
        }
        SphereWalker {
            buf,
            fixed,
            started: false,
            done,
        }
    }

    /// Advances to the next word and returns it, or `None` when exhausted.
    pub fn advance(&mut self) -> Option<&[Letter]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.buf);
        }
        let n = self.buf.len();
        let mut i = n;
        loop {
            if i == self.fixed {
                self.done = true;
                return None;
            }
            i -= 1;
            let prev = if i == 0 { None } else { Some(self.buf[i - 1]) };
            if let Some(next) = self.buf[i].next_successor(prev) {
                self.buf[i] = next;
                for j in i + 1..n {
                    self.buf[j] = Letter::first_successor(Some(self.buf[j - 1]));
                }
                return Some(&self.buf);
            }
        }
    }
}

/// Owning iterator over a sphere; see [`SphereWalker`] for the allocation-free
/// form.
pub struct Sphere(SphereWalker);

impl Iterator for Sphere {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.0
            .advance()
            .map(|s| Word::from_reduced_unchecked(s.to_vec()))
    }
}

/// Every reduced word of length exactly `n` that starts with `prefix`.
pub fn enumerate_sphere(n: usize, prefix: Option<&Word>) -> Sphere {
    let empty = Word::identity();
    Sphere(SphereWalker::new(n, prefix.unwrap_or(&empty)))
}

/// All reduced words of a given length; used for work partitioning.
pub fn prefixes(depth: usize) -> Vec<Word> {
    enumerate_sphere(depth, None).collect()
}

/// `|sphere(n)|` in the free group of rank two.
pub fn sphere_size(n: usize) -> u64 {
    if n == 0 {
        1
    } else {
        4 * 3u64.pow(n as u32 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    use Letter::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(Word::reduce([A, AInv]), Word::identity());
        assert_eq!(Word::reduce([A, B, BInv, AInv]), Word::identity());
        assert_eq!(Word::reduce([A, A, BInv]).letters(), &[A, A, BInv]);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(Word::identity().multiply(&w("abA")), w("abA"));
        assert_eq!(w("ab").multiply(&w("Ba")), w("aa"));
        assert_eq!(w("a").multiply(&w("A")), Word::identity());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("ab").invert(), w("BA"));
        assert_eq!(Word::identity().invert(), Word::identity());
        assert_eq!(w("Aba").invert(), w("ABa"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let d = w("abA").cyclic_reduce();
        assert_eq!((d.core, d.conjugator), (w("b"), w("a")));
        let d = w("ab").cyclic_reduce();
        assert_eq!((d.core, d.conjugator), (w("ab"), Word::identity()));
        let d = w("Aba").cyclic_reduce();
        assert_eq!((d.core, d.conjugator), (w("b"), w("A")));
    }

    #[test]
    fn parse_reports_bad_token() {
        let err = "ab x".parse::<Word>().unwrap_err();
        assert_eq!(err.token, 'x');
        assert_eq!(err.position, 3);
        assert_eq!(w("a b  A"), w("abA"));
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("aA"), Word::identity());
    }

    #[test]
    fn small_spheres() {
        assert_eq!(enumerate_sphere(0, None).collect::<Vec<_>>(), vec![Word::identity()]);
        assert_eq!(enumerate_sphere(1, None).count(), 4);
        assert_eq!(enumerate_sphere(2, None).count(), 12);
        let two: Vec<String> = enumerate_sphere(2, None).map(|w| w.to_string()).collect();
        assert_eq!(two, ["aa", "ab", "aB", "AA", "Ab", "AB", "ba", "bA", "bb", "Ba", "BA", "BB"]);
    }

    #[test]
    fn sphere_sizes_and_order() {
        for n in 0..=9 {
            let words: Vec<Word> = enumerate_sphere(n, None).collect();
            assert_eq!(words.len() as u64, sphere_size(n));
            assert!(words.windows(2).all(|p| p[0] < p[1]), "not sorted at n={n}");
            assert!(words.iter().all(|w| w.len() == n && is_reduced(w.letters())));
        }
    }

    #[test]
    fn prefix_streams_partition_the_sphere() {
        for n in 1..=8 {
            for depth in 1..=n.min(3) {
                let mut seen = HashSet::new();
                for p in prefixes(depth) {
                    for w in enumerate_sphere(n, Some(&p)) {
                        assert!(w.letters().starts_with(p.letters()));
                        assert!(seen.insert(w));
                    }
                }
                assert_eq!(seen.len() as u64, sphere_size(n));
            }
        }
    }

    #[test]
    fn prefix_longer_than_radius_is_empty() {
        assert_eq!(enumerate_sphere(1, Some(&w("ab"))).count(), 0);
        assert_eq!(enumerate_sphere(2, Some(&w("ab"))).count(), 1);
    }

    pub(crate) fn letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..40)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(s in letters()) {
            let r = Word::reduce(s);
            prop_assert!(is_reduced(r.letters()));
            prop_assert_eq!(Word::reduce(r.letters().to_vec()), r);
        }

        #[test]
        fn multiply_length_parity(u in letters(), v in letters()) {
            let (u, v) = (Word::reduce(u), Word::reduce(v));
            let p = u.multiply(&v);
            prop_assert!(p.len() <= u.len() + v.len());
            prop_assert_eq!((u.len() + v.len() - p.len()) % 2, 0);
        }

        #[test]
        fn inverse_cancels(s in letters()) {
            let w = Word::reduce(s);
            prop_assert_eq!(w.invert().len(), w.len());
            prop_assert!(w.multiply(&w.invert()).is_empty());
        }

        #[test]
        fn cyclic_reduce_recomposes(s in letters()) {
            let w = Word::reduce(s);
            let d = w.cyclic_reduce();
            prop_assert!(d.core.is_cyclically_reduced());
            prop_assert_eq!(w.len(), d.core.len() + 2 * d.conjugator.len());
            prop_assert_eq!(d.recompose(), w);
        }

        #[test]
        fn swap_is_an_isometric_automorphism(u in letters(), v in letters()) {
            let (u, v) = (Word::reduce(u), Word::reduce(v));
            prop_assert_eq!(u.swap().len(), u.len());
            prop_assert_eq!(u.multiply(&v).swap(), u.swap().multiply(&v.swap()));
            prop_assert_eq!(u.invert().swap(), u.swap().invert());
        }

        #[test]
        fn display_parses_back(s in letters()) {
            let w = Word::reduce(s);
            prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
    }
}
