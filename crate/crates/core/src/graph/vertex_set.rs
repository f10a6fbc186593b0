use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of vertices of a graph with at most 64 vertices, stored as one word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All vertices `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Smallest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest vertex in the set.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when no member is `>= n`.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(VertexSet::full(n))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Parses a comma-separated list of 0-based indices, e.g. `0,2,12,17`.
    /// The empty string is the empty set. Members must be `< n`.
    pub fn parse_list(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let mut set = VertexSet::EMPTY;
        if text.is_empty() {
            return Ok(set);
        }
        for token in text.split(',') {
            let token = token.trim();
            let v: usize = token
                .parse()
                .map_err(|_| Error::Argument(format!("`{token}` is not a vertex index")))?;
            if v >= n {
                return Err(Error::Argument(format!(
                    "vertex {v} out of range for a graph on {n} vertices"
                )));
            }
            if set.contains(v) {
                return Err(Error::Argument(format!("vertex {v} listed twice")));
            }
            set.insert(v);
        }
        Ok(set)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            assert!(v < 64, "vertex index {v} exceeds the 64-vertex capacity");
            set.insert(v);
        }
        set
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = list.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds capacity 64"
            )));
        }
        Ok(list.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s = VertexSet::parse_list("0,2,12,17", 20).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_string(), "0,2,12,17");
        assert_eq!(VertexSet::parse_list(" ", 5).unwrap(), VertexSet::EMPTY);
        assert!(VertexSet::parse_list("0,5", 5).is_err());
        assert!(VertexSet::parse_list("1,1", 5).is_err());
        assert!(VertexSet::parse_list("a", 5).is_err());
    }

    #[test]
    fn full_and_bounds() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert!(VertexSet::singleton(9).fits(10));
        assert!(!VertexSet::singleton(10).fits(10));
        let s: VertexSet = [3, 63].into_iter().collect();
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(63));
    }

    #[test]
    fn json_is_an_index_list() {
        let s: VertexSet = [1, 4].into_iter().collect();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4]");
        let back: VertexSet = serde_json::from_str("[4,1]").unwrap();
        assert_eq!(back, s);
    }
}
