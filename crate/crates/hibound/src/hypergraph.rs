//! k-uniform hypergraphs: data model, validation, and instance generators.
//!
//! Vertices are 0-based contiguous integers. Edges are k-element subsets of
//! `{0, …, n−1}`, stored as sorted vertex lists in lexicographic order, with
//! a bitmask cache derived for fast subset tests. `n < k` is legal and forces
//! an edgeless hypergraph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {edge_index} has {size} distinct vertices, expected k = {k}")]
    EdgeWrongSize {
        edge_index: usize,
        size: usize,
        k: usize,
    },
    #[error("edge {edge_index} contains vertex {vertex}, out of range for n = {n}")]
    VertexOutOfRange {
        edge_index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("duplicate edge at index {edge_index}")]
    DuplicateEdge { edge_index: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("regular sampler gave up after {attempts} attempts")]
    AttemptsExhausted { attempts: usize },
}

/// A k-uniform hypergraph on vertex set `{0, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<VertexSet>,
}

/// Per-vertex edge-membership counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<u64>) -> Self {
        DegreeSequence { degrees }
    }

    /// All `n` vertices with the same degree `d`.
    pub fn uniform(n: usize, d: u64) -> Self {
        DegreeSequence {
            degrees: vec![d; n],
        }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// A set of vertices containing no edge of its hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    vertices: Vec<usize>,
}

impl IndependentSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        IndependentSet { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from an edge list, validating every invariant.
    ///
    /// Edges are canonicalized (vertices sorted, edges in lexicographic
    /// order). A repeated edge is an error, not a silent dedup.
    pub fn new(
        n: usize,
        k: usize,
        edges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, HypergraphError> {
        check_params(n, k)?;
        let mut canon: Vec<Vec<usize>> = Vec::new();
        for (edge_index, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(HypergraphError::EdgeWrongSize {
                    edge_index,
                    size: e.len(),
                    k,
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge_index,
                    vertex: v,
                    n,
                });
            }
            canon.push(e);
        }
        canon.sort();
        if let Some(w) = canon.windows(2).position(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge { edge_index: w + 1 });
        }
        let masks = canon
            .iter()
            .map(|e| VertexSet::from_vertices(n, e))
            .collect();
        Ok(Hypergraph {
            n,
            k,
            edges: canon,
            masks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn m(&self) -> u64 {
        self.edges.len() as u64
    }

    /// Edges as sorted vertex lists, in lexicographic order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Bitmask form of each edge, parallel to `edges()`.
    pub fn edge_masks(&self) -> &[VertexSet] {
        &self.masks
    }

    /// Re-checks every structural invariant of the stored representation.
    pub fn validate(&self) -> Result<(), HypergraphError> {
        check_params(self.n, self.k)?;
        for (edge_index, e) in self.edges.iter().enumerate() {
            let mut sorted = e.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != self.k || &sorted != e {
                return Err(HypergraphError::EdgeWrongSize {
                    edge_index,
                    size: sorted.len(),
                    k: self.k,
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= self.n) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge_index,
                    vertex: v,
                    n: self.n,
                });
            }
            if self.masks[edge_index] != VertexSet::from_vertices(self.n, e) {
                return Err(HypergraphError::InvalidParams(
                    "edge mask cache out of sync".into(),
                ));
            }
        }
        if let Some(w) = self.edges.windows(2).position(|w| w[0] >= w[1]) {
            return Err(HypergraphError::DuplicateEdge { edge_index: w + 1 });
        }
        Ok(())
    }

    /// Membership counts for every vertex; their sum is `k·m`.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees = vec![0u64; self.n];
        for e in &self.edges {
            for &v in e {
                degrees[v] += 1;
            }
        }
        DegreeSequence { degrees }
    }

    /// All `C(n,k)` k-subsets as edges.
    pub fn complete(n: usize, k: usize) -> Result<Self, HypergraphError> {
        check_params(n, k)?;
        if n < k {
            return Err(HypergraphError::InvalidParams(format!(
                "complete hypergraph needs n >= k, got n = {n}, k = {k}"
            )));
        }
        Hypergraph::new(n, k, k_subsets(n, k))
    }

    /// No edges at all.
    pub fn empty(n: usize, k: usize) -> Result<Self, HypergraphError> {
        Hypergraph::new(n, k, Vec::new())
    }

    /// The complete hypergraph minus its lexicographically first edge
    /// `{0, …, k−1}`.
    pub fn complete_minus_one_edge(n: usize, k: usize) -> Result<Self, HypergraphError> {
        check_params(n, k)?;
        if n < k {
            return Err(HypergraphError::InvalidParams(format!(
                "complete hypergraph needs n >= k, got n = {n}, k = {k}"
            )));
        }
        let removed: Vec<usize> = (0..k).collect();
        Hypergraph::new(n, k, k_subsets(n, k).into_iter().filter(|e| *e != removed))
    }

    /// A uniformly random set of `m` distinct edges, deterministic per seed.
    pub fn random_uniform(n: usize, k: usize, m: u64, seed: u64) -> Result<Self, HypergraphError> {
        check_params(n, k)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match binomial_u128(n as u64, k as u64) {
            Some(total) => {
                if m as u128 > total {
                    return Err(HypergraphError::InvalidParams(format!(
                        "m = {m} exceeds C({n},{k}) = {total}"
                    )));
                }
                // Floyd's algorithm: uniform m-subset of edge ranks.
                let mut ranks = std::collections::BTreeSet::new();
                for j in (total - m as u128)..total {
                    let t = rng.random_range(0..=j);
                    if !ranks.insert(t) {
                        ranks.insert(j);
                    }
                }
                let edges: Vec<Vec<usize>> =
                    ranks.iter().map(|&r| unrank_k_subset(n, k, r)).collect();
                Hypergraph::new(n, k, edges)
            }
            None => {
                // C(n,k) exceeds u128: m is tiny in comparison, rejection
                // sampling of fresh edges terminates quickly.
                let mut chosen = std::collections::BTreeSet::new();
                let mut scratch: Vec<usize> = (0..n).collect();
                while (chosen.len() as u64) < m {
                    for i in 0..k {
                        let j = rng.random_range(i..n);
                        scratch.swap(i, j);
                    }
                    let mut e = scratch[..k].to_vec();
                    e.sort_unstable();
                    chosen.insert(e);
                }
                Hypergraph::new(n, k, chosen.into_iter().collect::<Vec<_>>())
            }
        }
    }

    /// Samples a d-regular k-uniform hypergraph by shuffling vertex stubs and
    /// repairing collisions with randomized swaps. Fails explicitly after
    /// `max_attempts` restarts.
    pub fn random_regular(
        n: usize,
        k: usize,
        d: u64,
        seed: u64,
        max_attempts: usize,
    ) -> Result<Self, HypergraphError> {
        check_params(n, k)?;
        if !(n as u64 * d).is_multiple_of(k as u64) {
            return Err(HypergraphError::InfeasibleParams(format!(
                "n*d = {} not divisible by k = {k}",
                n as u64 * d
            )));
        }
        let max_degree = binomial_u128(n as u64 - 1, k as u64 - 1).unwrap_or(u128::MAX);
        if d as u128 > max_degree {
            return Err(HypergraphError::InfeasibleParams(format!(
                "degree {d} exceeds C(n-1,k-1) = {max_degree}"
            )));
        }
        if d == 0 {
            return Hypergraph::empty(n, k);
        }
        if d as u128 == max_degree {
            // Every incident k-subset is forced, so the instance is complete.
            return Hypergraph::complete(n, k);
        }
        let m = (n as u64 * d / k as u64) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..max_attempts {
            let mut stubs: Vec<usize> = (0..n)
                .flat_map(|v| std::iter::repeat_n(v, d as usize))
                .collect();
            stubs.shuffle(&mut rng);
            if let Some(groups) = repair_stubs(&mut stubs, m, k, &mut rng) {
                return Hypergraph::new(n, k, groups);
            }
        }
        Err(HypergraphError::AttemptsExhausted {
            attempts: max_attempts,
        })
    }
}

fn check_params(n: usize, k: usize) -> Result<(), HypergraphError> {
    if n == 0 {
        return Err(HypergraphError::InvalidParams(
            "vertex count n must be positive".into(),
        ));
    }
    if k < 2 {
        return Err(HypergraphError::InvalidParams(format!(
            "uniformity k must be at least 2, got {k}"
        )));
    }
    Ok(())
}

/// All k-subsets of `{0,…,n−1}` in lexicographic order. Empty when n < k.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// `C(n,r)` in u128, or None on overflow.
pub fn binomial_u128(n: u64, r: u64) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// The k-subset of `{0,…,n−1}` at position `rank` in lexicographic order.
fn unrank_k_subset(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut v = 0usize;
    let mut remaining = k;
    while remaining > 0 {
        let with_v = binomial_u128((n - 1 - v) as u64, (remaining - 1) as u64)
            .expect("binomial fits u128 whenever the total rank does");
        if rank < with_v {
            out.push(v);
            remaining -= 1;
        } else {
            rank -= with_v;
        }
        v += 1;
    }
    out
}

/// Local-search repair: swap stubs between groups until every group holds k
/// distinct vertices and no two groups form the same edge.
fn repair_stubs(
    stubs: &mut [usize],
    m: usize,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<usize>>> {
    let violations = |stubs: &[usize]| -> usize {
        let mut total = 0;
        let mut seen = std::collections::BTreeMap::new();
        for g in 0..m {
            let mut group = stubs[g * k..(g + 1) * k].to_vec();
            group.sort_unstable();
            let mut distinct = group.clone();
            distinct.dedup();
            total += k - distinct.len();
            *seen.entry(group).or_insert(0usize) += 1;
        }
        total + seen.values().map(|&c| c - 1).sum::<usize>()
    };
    let mut current = violations(stubs);
    let max_iters = 400 * stubs.len();
    for _ in 0..max_iters {
        if current == 0 {
            let mut groups: Vec<Vec<usize>> = (0..m)
                .map(|g| {
                    let mut e = stubs[g * k..(g + 1) * k].to_vec();
                    e.sort_unstable();
                    e
                })
                .collect();
            groups.sort();
            return Some(groups);
        }
        let a = rng.random_range(0..stubs.len());
        let b = rng.random_range(0..stubs.len());
        if a / k == b / k {
            continue;
        }
        stubs.swap(a, b);
        let next = violations(stubs);
        if next <= current {
            current = next;
        } else {
            stubs.swap(a, b);
        }
    }
    None
}
