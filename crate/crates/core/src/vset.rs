//! Fixed-width vertex bitsets.
//!
//! Every graph handled by this crate has at most [`MAX_ORDER`] vertices, so a
//! set of vertices fits in eight machine words and is `Copy`. All set
//! predicates in the crate are written as word-parallel operations on this
//! type.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

const WORDS: usize = 8;

/// Largest supported graph order.
pub const MAX_ORDER: usize = WORDS * 64;

/// A set of vertex indices in `0..MAX_ORDER`.
///
/// Ordering is lexicographic on the ascending member sequence, so the
/// smallest set under `Ord` among sets of equal size is the one a
/// lexicographic search visits first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        let mut s = Self::new();
        let (whole, rest) = (n / 64, n % 64);
        for w in s.words.iter_mut().take(whole) {
            *w = u64::MAX;
        }
        if rest > 0 {
            s.words[whole] = (1u64 << rest) - 1;
        }
        s
    }

    /// Vertices `v` with `lo <= v < hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo >= hi {
            return Self::new();
        }
        Self::full(hi) - Self::full(lo)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        had
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_ORDER && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            idx: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// True when every member is below `n`.
    pub fn fits_order(&self, n: usize) -> bool {
        self.last().is_none_or(|v| v < n)
    }

    /// Parses a comma-separated list of indices such as `0,3,5`.
    /// An empty string (or `{}`) is the empty set.
    pub fn parse_list(text: &str) -> Result<Self, Error> {
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut s = Self::new();
        for (i, tok) in trimmed.split(',').enumerate() {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok.parse().map_err(|_| {
                Error::Precondition(format!("vertex list entry {i} ({tok:?}) is not an index"))
            })?;
            if v >= MAX_ORDER {
                return Err(Error::UnsupportedOrder(v + 1));
            }
            s.insert(v);
        }
        Ok(s)
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = &mut self.words[self.idx];
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $assign:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *a $assign *b;
                }
                self
            }
        }
    };
}

binop!(BitOr, bitor, |=);
binop!(BitAnd, bitand, &=);
binop!(BitXor, bitxor, ^=);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= !*b;
        }
        self
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a |= *b;
        }
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= *b;
        }
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= !*b;
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for VertexSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::parse_list(s)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(de)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds the supported order"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_range() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).last(), Some(64));
        assert_eq!(VertexSet::full(MAX_ORDER).len(), MAX_ORDER);
        assert_eq!(VertexSet::range(3, 7).to_vec(), vec![3, 4, 5, 6]);
        assert!(VertexSet::range(7, 3).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let s: VertexSet = "0, 3,5".parse().unwrap();
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.to_string(), "0,3,5");
        assert!(VertexSet::parse_list("").unwrap().is_empty());
        assert!(VertexSet::parse_list("{}").unwrap().is_empty());
        assert!(VertexSet::parse_list("1,x").is_err());
        assert!(VertexSet::parse_list("600").is_err());
    }

    #[test]
    fn lexicographic_order() {
        let a: VertexSet = [0, 5].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        let c: VertexSet = [0, 4, 9].into_iter().collect();
        assert!(a < b);
        assert!(c < a);
    }

    proptest! {
        #[test]
        fn matches_btreeset(xs in proptest::collection::vec(0usize..MAX_ORDER, 0..40),
                            ys in proptest::collection::vec(0usize..MAX_ORDER, 0..40)) {
            use std::collections::BTreeSet;
            let a: VertexSet = xs.iter().copied().collect();
            let b: VertexSet = ys.iter().copied().collect();
            let sa: BTreeSet<usize> = xs.iter().copied().collect();
            let sb: BTreeSet<usize> = ys.iter().copied().collect();
            prop_assert_eq!((a | b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!((a & b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!((a - b).to_vec(), sa.difference(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
            prop_assert_eq!(a.first(), sa.first().copied());
            prop_assert_eq!(a.last(), sa.last().copied());
            prop_assert_eq!(a.cmp(&b), sa.iter().cmp(sb.iter()));
        }
    }
}
