use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported universe; sets are stored as a single machine word.
pub const MAX_VERTICES: usize = 64;

pub(crate) fn universe_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_universe_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "vertex count {n} outside supported range 1..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// A subset of the vertex universe `{1..n}`.
///
/// Vertex `v` is stored in bit `v - 1`. Equality is extensional. The total
/// order compares the universe first and then the ascending member sequences
/// lexicographically, so `{} < {1} < {1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            bits: universe_mask(n),
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        check_universe_size(n)?;
        let mut set = VertexSet::empty(n);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    /// Builds a set from a raw bitmask; bits beyond the universe are dropped.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        VertexSet {
            n,
            bits: bits & universe_mask(n),
        }
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::from_vertices(n, [v])
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n && self.bits & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        self.check_vertex(v)?;
        self.bits |= 1 << (v - 1);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) -> Result<()> {
        self.check_vertex(v)?;
        self.bits &= !(1 << (v - 1));
        Ok(())
    }

    pub fn with(mut self, v: usize) -> Result<Self> {
        self.insert(v)?;
        Ok(self)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            n: self.n,
            bits: !self.bits & universe_mask(self.n),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSet {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSet {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn same_universe(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let low = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.bits.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the sorted member array; the universe travels out of band.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn lexicographic_order() {
        let mut sets = vec![
            set(3, &[2]),
            set(3, &[1, 3]),
            set(3, &[]),
            set(3, &[1]),
            set(3, &[1, 2]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                set(3, &[]),
                set(3, &[1]),
                set(3, &[1, 2]),
                set(3, &[1, 3]),
                set(3, &[2])
            ]
        );
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            VertexSet::from_vertices(3, [4]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(VertexSet::from_vertices(3, [0]).is_err());
        assert!(VertexSet::from_vertices(65, [1]).is_err());
    }

    #[test]
    fn complement_at_full_width() {
        let s = set(64, &[1, 64]);
        assert_eq!(s.complement().len(), 62);
        assert!(s.complement().contains(2) && !s.complement().contains(64));
    }

    #[test]
    fn display_and_json() {
        let s = set(5, &[4, 1, 3]);
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3,4]");
    }
}
