//! Fixed-width bit sets over dense vertex ids.
//!
//! Adjacency rows and all "active subset" bookkeeping use this type, so the
//! hot operations (intersection, difference, popcount) are word-parallel.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

/// A subset of the vertex ids `0..capacity` of some fixed graph.
///
/// Sets created for the same graph have the same word width; binary
/// operations assume both operands match and debug-assert it.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; word_count(capacity)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut words = vec![u64::MAX; word_count(capacity)];
        let tail = capacity % WORD_BITS;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        VertexSet { words }
    }

    pub fn singleton(capacity: usize, v: u32) -> Self {
        let mut s = Self::empty(capacity);
        s.insert(v);
        s
    }

    pub fn from_slice(capacity: usize, verts: &[u32]) -> Self {
        let mut s = Self::empty(capacity);
        for &v in verts {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        let (w, b) = (v as usize / WORD_BITS, v as usize % WORD_BITS);
        w < self.words.len() && (self.words[w] >> b) & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        let (w, b) = (v as usize / WORD_BITS, v as usize % WORD_BITS);
        debug_assert!(w < self.words.len(), "vertex {v} out of capacity");
        self.words[w] |= 1u64 << b;
    }

    #[inline]
    pub fn remove(&mut self, v: u32) {
        let (w, b) = (v as usize / WORD_BITS, v as usize % WORD_BITS);
        if w < self.words.len() {
            self.words[w] &= !(1u64 << b);
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<u32> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((i * WORD_BITS) as u32 + w.trailing_zeros());
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn and(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn or(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// Overwrites `self` with a copy of `other` (same width).
    pub fn copy_from(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.copy_from_slice(&other.words);
    }

    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over set members.
pub struct SetIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for SetIter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros();
        self.current &= self.current - 1;
        Some((self.word_idx * WORD_BITS) as u32 + bit)
    }
}
