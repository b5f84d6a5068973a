//! Dense bit-matrix encoding of a binary relation on `0..n`.
//!
//! Row `i` holds the set `{ j : (i, j) ∈ R }` packed into `u64` words. Bits
//! past column `n - 1` in the last word of a row are always zero, so derived
//! equality is bit-exact equality of relations.

use smallvec::SmallVec;
use std::fmt;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 8]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    n: usize,
    wpr: usize,
    words: Words,
}

#[inline]
fn words_per_row(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Rel {
    /// The empty relation on `n` elements.
    pub fn empty(n: usize) -> Self {
        let wpr = words_per_row(n);
        Rel { n, wpr, words: SmallVec::from_elem(0, wpr * n) }
    }

    /// The diagonal `{(i, i)}`.
    pub fn identity(n: usize) -> Self {
        let mut r = Rel::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    /// Every pair.
    pub fn full(n: usize) -> Self {
        Rel::from_fn(n, |_, _| true)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Rel::empty(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut r = Rel::empty(n);
        for (i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            r.insert(i, j);
        }
        Ok(r)
    }

    /// Builds a relation on `n ≤ 64` elements from one bit mask per row.
    pub(crate) fn from_row_masks(n: usize, rows: &[u64]) -> Self {
        debug_assert!(n <= 64 && rows.len() == n);
        let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Rel { n, wpr: 1, words: rows.iter().map(|r| r & keep).collect() }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words_per_row(&self) -> usize {
        self.wpr
    }

    /// Membership test. Panics if either index is out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range for {}", self.n);
        self.words[i * self.wpr + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range for {}", self.n);
        self.words[i * self.wpr + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range for {}", self.n);
        self.words[i * self.wpr + j / 64] &= !(1 << (j % 64));
    }

    /// Packed words of row `i`.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.wpr..(i + 1) * self.wpr]
    }

    /// Successors of `i` in ascending order.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(i))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    /// The converse relation.
    pub fn transpose(&self) -> Rel {
        let mut t = Rel::empty(self.n);
        for (i, j) in self.pairs() {
            t.insert(j, i);
        }
        t
    }

    /// Bitwise intersection. Both relations must have the same dimension.
    pub fn intersection(&self, other: &Rel) -> Result<Rel> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(Rel { n: self.n, wpr: self.wpr, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() })
    }

    /// `true` if every pair of `self` is in `other`.
    pub fn is_subset(&self, other: &Rel) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Pulls the relation back along `img`: `(i, j)` is in the result iff
    /// `(img[i], img[j])` is in `self`.
    pub fn pull_back(&self, img: &[usize]) -> Rel {
        Rel::from_fn(img.len(), |i, j| self.get(img[i], img[j]))
    }

    /// Row `i` as a single word. Only meaningful when `n ≤ 64`.
    #[inline]
    pub(crate) fn row_mask(&self, i: usize) -> u64 {
        debug_assert_eq!(self.wpr, 1);
        self.words[i]
    }
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rel[{}]{{", self.n)?;
        for (k, (i, j)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// Set bit positions of a packed word slice, ascending.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            }
        })
    })
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_full() {
        let id = Rel::identity(3);
        assert_eq!(id.len(), 3);
        assert!(id.get(1, 1) && !id.get(0, 1));
        assert_eq!(Rel::full(3).len(), 9);
        assert!(id.is_subset(&Rel::full(3)));
    }

    #[test]
    fn wide_rows_span_words() {
        let mut r = Rel::empty(130);
        r.insert(0, 129);
        r.insert(129, 64);
        assert!(r.get(0, 129) && r.get(129, 64));
        assert_eq!(r.successors(0).collect::<Vec<_>>(), vec![129]);
        let t = r.transpose();
        assert!(t.get(129, 0) && t.get(64, 129));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn from_pairs_rejects_out_of_range() {
        assert_eq!(Rel::from_pairs(2, [(0, 2)]), Err(Error::IndexOutOfRange { index: 2, n: 2 }));
    }

    #[test]
    fn intersection_needs_equal_dimensions() {
        assert!(Rel::full(2).intersection(&Rel::full(3)).is_err());
        let r = Rel::full(2).intersection(&Rel::identity(2)).unwrap();
        assert_eq!(r, Rel::identity(2));
    }

    #[test]
    fn row_masks_are_trimmed() {
        let r = Rel::from_row_masks(2, &[u64::MAX, 0b10]);
        assert_eq!(r, Rel::from_pairs(2, [(0, 0), (0, 1), (1, 1)]).unwrap());
    }

    #[test]
    fn pull_back_along_swap() {
        let r = Rel::from_pairs(2, [(0, 1)]).unwrap();
        assert_eq!(r.pull_back(&[1, 0]), Rel::from_pairs(2, [(1, 0)]).unwrap());
    }
}
