//! Multi-word bitmask vertex sets.
//!
//! Vertex sets up to 64 vertices fit in a single word; larger sets spill
//! into additional words transparently.

const WORD_BITS: usize = 64;

/// A set of vertex ids `0..capacity`, stored as a fixed-width bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    /// Empty set able to hold vertices `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        let n_words = capacity.div_ceil(WORD_BITS).max(1);
        VertexSet {
            words: vec![0; n_words],
            capacity,
        }
    }

    pub fn from_vertices(capacity: usize, vertices: &[usize]) -> Self {
        let mut s = VertexSet::new(capacity);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Number of vertices in the set.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `self ⊆ other`, assuming equal capacity.
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
