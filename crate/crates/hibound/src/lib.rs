//! Lower bounds for the independence number of k-uniform hypergraphs.
//!
//! The crate computes an edge-count-only lower bound `ell` on the
//! independence number, four competitor bounds (Turan, Turan-Spencer,
//! Caro-Tuza, and the 3-uniform Csaba-Plick-Shokoufandeh bound), and an
//! exact branch-and-bound independence number for desk-scale instances.
//! Verification sweeps check every bound against the exact value over
//! exhaustive and randomized instance grids.
//!
//! Everything is a pure function of its inputs (plus explicit seeds), so the
//! whole API is safe for unrestricted concurrent use.

pub mod bitset;
pub mod bounds;
pub mod exact;
pub mod hypergraph;
pub mod io;
pub mod verify;

pub use bounds::{
    caro_tuza_bound, compute_report, cps_bound, ell_bound, ell_closed_form_k2, f_eval,
    falling_factorial, rising_factorial, turan_bound, turan_spencer_bound, BoundError,
    BoundOutcome, BoundReport, BoundSelection, Bounds, CpsBound, ExactRational,
};
pub use exact::{alpha_exact, is_independent, AlphaResult, SolverConfig};
pub use hypergraph::{DegreeSequence, Hypergraph, HypergraphError, IndependentSet};
pub use io::{parse_hypergraph, serialize_hypergraph, ParseError};
pub use verify::{
    reproduce_paper_examples, run_sweep, ExamplesReport, MPolicy, SweepResult, SweepSpec,
};
