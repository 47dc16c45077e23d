#![allow(dead_code)]

use hibound::hypergraph::{k_subsets, Hypergraph};

/// Independence number by full enumeration of all 2^n vertex subsets.
/// Deliberately independent of the branch-and-bound solver.
pub fn naive_alpha(h: &Hypergraph) -> usize {
    assert!(h.n() <= 20, "naive enumeration is for tiny instances");
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    let mut best = 0;
    for s in 0u64..(1u64 << h.n()) {
        if masks.iter().all(|&em| s & em != em) {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

/// The hypergraph whose edge set is the bit-selected subset of all
/// k-subsets of {0,…,n−1} in lexicographic order.
pub fn from_edge_mask(n: usize, k: usize, mask: u64) -> Hypergraph {
    let edges: Vec<Vec<usize>> = k_subsets(n, k)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Hypergraph::new(n, k, edges).expect("mask-selected edges are valid")
}
