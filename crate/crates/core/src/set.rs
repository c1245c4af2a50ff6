//! Vertex subsets of a base graph packed into one machine word.

use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

/// A subset of the vertices `0..n` of a base graph, bit `v` set iff `v` is a member.
///
/// Sets order by their mask value, which is the order every family and
/// reconfiguration graph in this crate is listed in.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
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

    /// `{0, 1, .., n-1}`.
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

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
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
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
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

    /// `(self \ other) ∪ (other \ self)`.
    #[inline]
    pub const fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// True when every member is below `n`.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(VertexSet::full(n))
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Formats as `{0,2,5}`.
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

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
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

impl ExactSizeIterator for Members {}

/// All `k`-element subsets of `{0..n}` as masks in ascending order (Gosper's hack).
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u128>,
    limit: u128,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= 64);
        let next = if k > n { None } else { Some((1u128 << k) - 1) };
        KSubsets {
            next,
            limit: 1u128 << n,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit && cur != 0 {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            if succ >= self.limit {
                None
            } else {
                Some(succ)
            }
        };
        Some(cur as u64)
    }
}

/// Scatter the low bits of `packed` onto the positions listed in `slots`.
#[inline]
pub(crate) fn deposit(packed: u64, slots: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = packed;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1u64 << slots[i];
        rest &= rest - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn k_subsets_counts_and_order() {
        for n in 0..=10usize {
            for k in 0..=n + 1 {
                let all: Vec<u64> = KSubsets::new(n, k).collect();
                let expected = if k > n { 0 } else { binom(n as u64, k as u64) };
                assert_eq!(all.len() as u64, expected, "n={n} k={k}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|m| m.count_ones() as usize == k && *m >> n == 0));
            }
        }
    }

    #[test]
    fn k_subsets_full_width() {
        assert_eq!(KSubsets::new(64, 64).collect::<Vec<_>>(), [u64::MAX]);
        assert_eq!(KSubsets::new(64, 1).count(), 64);
        assert_eq!(KSubsets::new(64, 2).count(), 2016);
    }

    #[test]
    fn display_and_ops() {
        let s = VertexSet::from_vertices([5, 0, 2]);
        assert_eq!(s.to_string(), "{0,2,5}");
        let t = VertexSet::from_vertices([2, 3]);
        assert_eq!(s.symmetric_difference(t), VertexSet::from_vertices([0, 3, 5]));
        assert_eq!((s - t).len(), 2);
        assert!(VertexSet::from_vertices([2]).is_subset(s));
        assert!(!s.fits(5) && s.fits(6));
    }

    #[test]
    fn deposit_scatters() {
        assert_eq!(deposit(0b101, &[1, 4, 7]), (1 << 1) | (1 << 7));
    }
}
