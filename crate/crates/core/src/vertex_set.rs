use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Maximum number of vertices a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices `0..64` stored as a bitmask.
///
/// The [`Ord`] implementation compares the ascending vertex lists
/// lexicographically, so `{0,1} < {0,1,2} < {0,2} < {1,2}`. This is the order
/// used for canonical edge lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// Vertices strictly greater than `v`.
    #[inline]
    pub fn above(v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            VertexSet(0)
        } else {
            VertexSet(!((1u64 << (v + 1)) - 1))
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
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
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn comparable(self, other: VertexSet) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `size` elements, in lexicographic order.
    pub fn subsets_of_size(self, size: usize) -> Vec<VertexSet> {
        fn rec(elems: &[usize], size: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
            if size == 0 {
                out.push(cur);
                return;
            }
            for i in 0..elems.len() {
                if elems.len() - i < size {
                    break;
                }
                rec(&elems[i + 1..], size - 1, cur.with(elems[i]), out);
            }
        }
        let elems = self.to_vec();
        let mut out = Vec::new();
        if size <= elems.len() {
            rec(&elems, size, VertexSet::EMPTY, &mut out);
        }
        out
    }

    /// Relabels the set by `map` (old vertex -> new vertex).
    pub fn map(self, map: &[usize]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let p = diff.trailing_zeros();
        // Both lists agree below p; the list containing p continues with p,
        // the other continues with its next element above p (if any).
        if self.0 >> p & 1 == 1 {
            if other.0 >> p == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 >> p == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone)]
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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
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

/// Serialized as the ascending vertex list.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds {MAX_VERTICES}")));
        }
        Ok(vs.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order_of_vertex_lists() {
        let mut sets = vec![set(&[1, 2]), set(&[0, 1, 2]), set(&[0, 2]), set(&[0, 1])];
        sets.sort();
        assert_eq!(sets, vec![set(&[0, 1]), set(&[0, 1, 2]), set(&[0, 2]), set(&[1, 2])]);
    }

    #[test]
    fn subsets_of_size_counts() {
        let s = set(&[0, 2, 3, 5, 7]);
        assert_eq!(s.subsets_of_size(2).len(), 10);
        assert_eq!(s.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(5), vec![s]);
        assert!(s.subsets_of_size(6).is_empty());
        let pairs = set(&[0, 1, 2]).subsets_of_size(2);
        assert_eq!(pairs, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
    }

    proptest! {
        #[test]
        fn order_matches_vec_order(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
