//! Fixed-width vertex sets.

use core::fmt;

/// Largest vertex count a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids `< MAX_VERTICES`, stored as a bit vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
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
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
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
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// The `k` smallest members (all of them if the set is smaller).
    pub fn take_smallest(self, k: usize) -> Self {
        let mut out = VertexSet::EMPTY;
        for v in self.iter().take(k) {
            out.insert(v);
        }
        out
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
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

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Formats as `{v1,v2,...}`, the notation used by match transcripts.
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

/// Calls `f` on every `k`-subset of `pool`, in lexicographic order of the
/// sorted member lists. Stops early and returns `true` if `f` does.
pub fn for_each_subset_of_size<F>(pool: VertexSet, k: usize, mut f: F) -> bool
where
    F: FnMut(VertexSet) -> bool,
{
    let items: alloc::vec::Vec<usize> = pool.iter().collect();
    if k > items.len() {
        return false;
    }
    fn rec<F: FnMut(VertexSet) -> bool>(items: &[usize], start: usize, left: usize, acc: VertexSet, f: &mut F) -> bool {
        if left == 0 {
            return f(acc);
        }
        for i in start..=items.len() - left {
            let mut next = acc;
            next.insert(items[i]);
            if rec(items, i + 1, left - 1, next, f) {
                return true;
            }
        }
        false
    }
    rec(&items, 0, k, VertexSet::EMPTY, &mut f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from([0, 2, 5]);
        let b = VertexSet::from([2, 3]);
        assert_eq!(a.union(b), VertexSet::from([0, 2, 3, 5]));
        assert_eq!(a.intersection(b), VertexSet::from([2]));
        assert_eq!(a.difference(b), VertexSet::from([0, 5]));
        assert!(VertexSet::from([2]).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(alloc::format!("{a}"), "{0,2,5}");
    }

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset_of_size(VertexSet::from([1, 4, 6, 7]), 2, |s| {
            seen.push(s.iter().collect::<Vec<_>>());
            false
        });
        assert_eq!(seen, [[1, 4], [1, 6], [1, 7], [4, 6], [4, 7], [6, 7]].map(|p| p.to_vec()));
    }
}
