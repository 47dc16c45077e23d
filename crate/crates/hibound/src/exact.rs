//! Exact independence number by branch and bound over vertex subsets.
//!
//! The solver is the ground-truth oracle behind every soundness check, so it
//! stays deliberately simple: static branch order (descending degree), a
//! cardinality cut, and an incremental independence test that looks only at
//! edges completed by the newly added vertex. Budget exhaustion is reported
//! explicitly, never silently.

use crate::bitset::VertexSet;
use crate::bounds::ell_bound;
use crate::hypergraph::{Hypergraph, IndependentSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of search-tree nodes to explore.
    pub node_budget: u64,
    /// Seed the cardinality cut with the edge-count lower bound.
    pub use_ell_pruning: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: 100_000_000,
            use_ell_pruning: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaResult {
    /// Size of the largest independent set found. Exact iff `exhausted`.
    pub alpha: usize,
    pub witness: IndependentSet,
    pub nodes_explored: u64,
    /// True iff the search completed within the node budget.
    pub exhausted: bool,
}

/// True iff no edge of `h` is fully contained in `vertices`.
pub fn is_independent(h: &Hypergraph, vertices: &[usize]) -> bool {
    let s = VertexSet::from_vertices(h.n(), vertices);
    h.edge_masks().iter().all(|e| !e.is_subset_of(&s))
}

struct Search {
    n: usize,
    /// Vertex at each branch position.
    order: Vec<usize>,
    /// For each branch position p, the residual masks `e \ {order[p]}` of
    /// edges whose last-ordered vertex is `order[p]`. An edge becomes fully
    /// contained in the current set exactly when that vertex is added.
    completions: Vec<Vec<VertexSet>>,
    current: VertexSet,
    current_list: Vec<usize>,
    best: Vec<usize>,
    prune_floor: usize,
    node_budget: u64,
    nodes: u64,
    stopped: bool,
}

impl Search {
    fn run(&mut self, pos: usize, size: usize) {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.stopped = true;
            return;
        }
        if pos == self.n {
            return;
        }
        let threshold = self.best.len().max(self.prune_floor);
        if size + (self.n - pos) <= threshold {
            return;
        }
        let v = self.order[pos];
        let completes_edge = self.completions[pos]
            .iter()
            .any(|residual| residual.is_subset_of(&self.current));
        if !completes_edge {
            self.current.insert(v);
            self.current_list.push(v);
            if self.current_list.len() > self.best.len() {
                self.best = self.current_list.clone();
            }
            self.run(pos + 1, size + 1);
            self.current.remove(v);
            self.current_list.pop();
            if self.stopped {
                return;
            }
        }
        self.run(pos + 1, size);
    }
}

/// Computes the independence number of `h` exactly, up to the node budget.
///
/// On a completed search (`exhausted = true`) `alpha` is exact and `witness`
/// attains it; otherwise both describe the best set found so far.
pub fn alpha_exact(h: &Hypergraph, cfg: &SolverConfig) -> AlphaResult {
    assert!(cfg.node_budget > 0, "node budget must be positive");
    let n = h.n();
    let degrees = h.degree_sequence();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees.degrees()[v]), v));
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }

    let mut completions: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for e in h.edges() {
        let &last = e
            .iter()
            .max_by_key(|&&v| position[v])
            .expect("edges are non-empty");
        let mut residual = VertexSet::from_vertices(n, e);
        residual.remove(last);
        completions[position[last]].push(residual);
    }

    let prune_floor = if cfg.use_ell_pruning {
        let ell =
            ell_bound(n as u64, h.m(), h.k() as u64).expect("valid hypergraph parameters") as usize;
        ell.saturating_sub(1)
    } else {
        0
    };

    let mut search = Search {
        n,
        order,
        completions,
        current: VertexSet::new(n),
        current_list: Vec::new(),
        best: Vec::new(),
        prune_floor,
        node_budget: cfg.node_budget,
        nodes: 0,
        stopped: false,
    };
    search.run(0, 0);

    AlphaResult {
        alpha: search.best.len(),
        witness: IndependentSet::new(search.best),
        nodes_explored: search.nodes,
        exhausted: !search.stopped,
    }
}
