//! Lower bounds on the independence number of a k-uniform hypergraph.
//!
//! Five bounds are implemented:
//!
//! * `ell_bound` — the edge-count-only bound obtained by scanning the
//!   decreasing rational function `f(i) = C(n,i+1)/C(n,i−k+1)` for the first
//!   `i` with `f(i) ≤ m`. Valid for every `k ≥ 2`.
//! * `turan_bound` — `⌈n²/(2m+n)⌉`, graphs (`k = 2`) only.
//! * `turan_spencer_bound` — `⌈((k−1)/k)·n·(n/(km))^{1/(k−1)}⌉`, defined for
//!   `m ≥ n/k`.
//! * `caro_tuza_bound` — degree-sequence bound with a fractional-argument
//!   binomial per vertex.
//! * `cps_bound` — `⌈(√π/2)·Σ_v (d(v)+1)^{−1/2}⌉`, 3-uniform only.
//!
//! Every ceiling and comparison that can be decided in integers is decided in
//! integers; floating point only seeds candidates or, for `cps_bound`, is
//! flagged when it lands near an integer boundary.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{alpha_exact, SolverConfig};
use crate::hypergraph::{DegreeSequence, Hypergraph};

pub use num_rational::BigRational as ExactRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("i = {i} outside the domain {{k-1, …, n}} for n = {n}, k = {k}")]
    DomainError { n: u64, k: u64, i: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("m = {m} below the applicability threshold n/k for n = {n}, k = {k}")]
    OutOfRange { n: u64, m: u64, k: u64 },
    #[error("bound defined only for {expected}-uniform hypergraphs, got k = {k}")]
    WrongUniformity { expected: u64, k: u64 },
}

/// `x·(x+1)·…·(x+count−1)`; 1 when `count = 0`.
pub fn rising_factorial(x: i64, count: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..count as i64 {
        acc *= x + j;
    }
    acc
}

/// `x·(x−1)·…·(x−count+1)`; 1 when `count = 0`.
pub fn falling_factorial(x: i64, count: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..count as i64 {
        acc *= x - j;
    }
    acc
}

/// Exact binomial coefficient, 0 when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn check_nk(n: u64, k: u64) -> Result<(), BoundError> {
    if k < 2 {
        return Err(BoundError::InvalidParams(format!(
            "uniformity k must be at least 2, got {k}"
        )));
    }
    if n < k {
        return Err(BoundError::InvalidParams(format!(
            "f is defined for n >= k, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Exact value of `f(i) = C(n,i+1)/C(n,i−k+1)`, computed in the
/// rising/falling-factorial form `(n−i)·…·(n−i+k−1) / ((i+1)·i·…·(i−k+2))`.
pub fn f_eval(n: u64, k: u64, i: u64) -> Result<ExactRational, BoundError> {
    check_nk(n, k)?;
    if i + 1 < k || i > n {
        return Err(BoundError::DomainError { n, k, i });
    }
    let num = rising_factorial((n - i) as i64, k as u32);
    let den = falling_factorial((i + 1) as i64, k as u32);
    Ok(ExactRational::new(num, den))
}

fn product_u128(start: u128, count: u64, step_down: bool) -> Option<u128> {
    let mut acc: u128 = 1;
    for j in 0..count as u128 {
        let factor = if step_down {
            start.checked_sub(j)?
        } else {
            start.checked_add(j)?
        };
        acc = acc.checked_mul(factor)?;
    }
    Some(acc)
}

/// Exact test `f(i) ≤ m`, i.e. `rising(n−i, k) ≤ m·falling(i+1, k)`.
/// Decided in u128 when it fits, otherwise in big integers.
fn f_at_most(n: u64, k: u64, i: u64, m: u64) -> bool {
    debug_assert!(i + 1 >= k && i <= n);
    let lhs = product_u128((n - i) as u128, k, false);
    let rhs = product_u128((i + 1) as u128, k, true).and_then(|f| f.checked_mul(m as u128));
    match (lhs, rhs) {
        (Some(l), Some(r)) => l <= r,
        _ => {
            rising_factorial((n - i) as i64, k as u32)
                <= m * falling_factorial((i + 1) as i64, k as u32)
        }
    }
}

/// The least `i` in `{k−1, …, n}` with `f(i) ≤ m`: a lower bound on the
/// independence number that depends only on the vertex and edge counts.
///
/// When `n < k` the hypergraph is necessarily edgeless and the bound is `n`.
pub fn ell_bound(n: u64, m: u64, k: u64) -> Result<u64, BoundError> {
    if k < 2 {
        return Err(BoundError::InvalidParams(format!(
            "uniformity k must be at least 2, got {k}"
        )));
    }
    if BigInt::from(m) > binomial(n, k) {
        return Err(BoundError::InvalidParams(format!(
            "m = {m} exceeds C({n},{k})"
        )));
    }
    if n < k {
        return Ok(n);
    }
    for i in (k - 1)..=n {
        if f_at_most(n, k, i, m) {
            return Ok(i);
        }
    }
    unreachable!("f(n) = 0 <= m always terminates the scan")
}

/// Closed-form route to `ell_bound(n, m, 2)`: a floating-point root of
/// `(m−1)i² + (m+2n+1)i = n² + n` seeds the candidate, then exact integer
/// inequalities settle it. `m = 0` and `m = 1` degenerate and are handled
/// directly.
pub fn ell_closed_form_k2(n: u64, m: u64) -> Result<u64, BoundError> {
    if n < 2 {
        return Err(BoundError::InvalidParams(format!(
            "closed form needs n >= 2, got {n}"
        )));
    }
    if m > n * (n - 1) / 2 {
        return Err(BoundError::InvalidParams(format!(
            "m = {m} exceeds C({n},2)"
        )));
    }
    if m == 0 {
        return Ok(n);
    }
    if m == 1 {
        return Ok(n.div_ceil(2));
    }
    let (a, b, c) = (
        (m - 1) as i128,
        (m + 2 * n + 1) as i128,
        (n * n + n) as i128,
    );
    let holds = |i: i128| a * i * i + b * i >= c;
    let disc = ((b * b + 4 * a * c) as f64).sqrt();
    let root = (disc - b as f64) / (2.0 * a as f64);
    let mut r = (root.ceil() as i128).clamp(1, n as i128);
    while r > 1 && holds(r - 1) {
        r -= 1;
    }
    while !holds(r) {
        r += 1;
    }
    Ok(r as u64)
}

/// `⌈n²/(2m+n)⌉` for graphs; exact integer ceiling.
pub fn turan_bound(n: u64, m: u64) -> u64 {
    assert!(n >= 1, "turan_bound needs at least one vertex");
    let n = n as u128;
    let m = m as u128;
    ((n * n).div_ceil(2 * m + n)) as u64
}

/// Exact test `TS ≤ r`, i.e. `r^{k−1}·k^k·m ≥ n^k·(k−1)^{k−1}`.
fn ts_at_most(r: u64, n: u64, m: u64, k: u64) -> bool {
    let lhs = (r as u128)
        .checked_pow(k as u32 - 1)
        .and_then(|x| x.checked_mul((k as u128).checked_pow(k as u32)?))
        .and_then(|x| x.checked_mul(m as u128));
    let rhs = (n as u128)
        .checked_pow(k as u32)
        .and_then(|x| x.checked_mul(((k - 1) as u128).checked_pow(k as u32 - 1)?));
    match (lhs, rhs) {
        (Some(l), Some(r)) => l >= r,
        _ => {
            BigInt::from(r).pow(k as u32 - 1) * BigInt::from(k).pow(k as u32) * m
                >= BigInt::from(n).pow(k as u32) * BigInt::from(k - 1).pow(k as u32 - 1)
        }
    }
}

/// `⌈((k−1)/k)·n·(n/(km))^{1/(k−1)}⌉`, defined for `m ≥ n/k`. The irrational
/// expression only seeds the candidate; the exact fraction-cleared sandwich
/// inequality settles the ceiling.
pub fn turan_spencer_bound(n: u64, m: u64, k: u64) -> Result<u64, BoundError> {
    if k < 2 {
        return Err(BoundError::InvalidParams(format!(
            "uniformity k must be at least 2, got {k}"
        )));
    }
    if n == 0 {
        return Err(BoundError::InvalidParams("n must be positive".into()));
    }
    if m * k < n {
        return Err(BoundError::OutOfRange { n, m, k });
    }
    let nf = n as f64;
    let kf = k as f64;
    let x = (kf - 1.0) / kf * nf * (nf / (kf * m as f64)).powf(1.0 / (kf - 1.0));
    let mut r = (x.ceil() as u64).clamp(1, n);
    while r > 1 && ts_at_most(r - 1, n, m, k) {
        r -= 1;
    }
    while !ts_at_most(r, n, m, k) {
        r += 1;
    }
    Ok(r)
}

/// Degree-sequence bound `⌈Σ_v 1/C(d(v)+1/(k−1), d(v))⌉`, where the
/// fractional-argument binomial is the product `∏_{j=1}^{d} (j+1/(k−1))/j`.
/// Each reciprocal is the exact rational `∏_{j=1}^{d} (k−1)j/((k−1)j+1)`;
/// the sum and its ceiling are exact. A degree-0 vertex contributes 1.
pub fn caro_tuza_bound(degrees: &DegreeSequence, k: u64) -> Result<u64, BoundError> {
    if k < 2 {
        return Err(BoundError::InvalidParams(format!(
            "uniformity k must be at least 2, got {k}"
        )));
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in degrees.degrees() {
        *counts.entry(d).or_default() += 1;
    }
    // One pass of the shared prefix products covers all distinct degrees.
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut j: u64 = 0;
    let mut sum = ExactRational::zero();
    for (d, count) in counts {
        while j < d {
            j += 1;
            num *= (k - 1) * j;
            den *= (k - 1) * j + 1;
        }
        sum += ExactRational::new(num.clone() * count, den.clone());
    }
    Ok(ceil_rational(&sum)
        .to_u64()
        .expect("bound is at most the vertex count"))
}

/// Exact ceiling of a non-negative rational.
pub fn ceil_rational(x: &ExactRational) -> BigInt {
    debug_assert!(!x.is_negative());
    x.ceil().to_integer()
}

/// Result of the 3-uniform degree-sequence bound: the ceiling of a
/// floating-point sum, plus the raw sum and a flag raised when the sum is
/// within 1e-9 of an integer (the ceiling is then not certifiable).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CpsBound {
    pub value: u64,
    pub raw: f64,
    pub boundary: bool,
}

const CPS_BOUNDARY_EPS: f64 = 1e-9;

pub(crate) fn near_integer(x: f64, eps: f64) -> bool {
    (x - x.round()).abs() < eps
}

/// `⌈(√π/2)·Σ_v 1/√(d(v)+1)⌉` for 3-uniform hypergraphs. The sum is
/// evaluated in compensated double precision; `boundary` reports when it
/// lands within 1e-9 of an integer.
pub fn cps_bound(degrees: &DegreeSequence, k: u64) -> Result<CpsBound, BoundError> {
    if k != 3 {
        return Err(BoundError::WrongUniformity { expected: 3, k });
    }
    // Kahan-compensated summation.
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for &d in degrees.degrees() {
        let term = 1.0 / ((d as f64) + 1.0).sqrt();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let raw = std::f64::consts::PI.sqrt() / 2.0 * sum;
    Ok(CpsBound {
        value: raw.ceil() as u64,
        raw,
        boundary: near_integer(raw, CPS_BOUNDARY_EPS),
    })
}

/// Which bounds to compute in a report. Defaults to all of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSelection {
    pub ell: bool,
    pub turan: bool,
    pub turan_spencer: bool,
    pub caro_tuza: bool,
    pub cps: bool,
}

impl Default for BoundSelection {
    fn default() -> Self {
        BoundSelection {
            ell: true,
            turan: true,
            turan_spencer: true,
            caro_tuza: true,
            cps: true,
        }
    }
}

impl BoundSelection {
    pub fn none() -> Self {
        BoundSelection {
            ell: false,
            turan: false,
            turan_spencer: false,
            caro_tuza: false,
            cps: false,
        }
    }

    /// Parses a comma-separated list of bound names: `ell`, `turan`, `ts`,
    /// `ct`, `cps`.
    pub fn parse_list(list: &str) -> Result<Self, String> {
        let mut sel = BoundSelection::none();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "ell" => sel.ell = true,
                "turan" => sel.turan = true,
                "ts" | "turan_spencer" => sel.turan_spencer = true,
                "ct" | "caro_tuza" => sel.caro_tuza = true,
                "cps" => sel.cps = true,
                other => return Err(format!("unknown bound name: {other}")),
            }
        }
        Ok(sel)
    }
}

/// A computed bound value, or the reason it does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundOutcome {
    Value(u64),
    NotApplicable { na: String },
}

impl BoundOutcome {
    fn na(reason: &str) -> Self {
        BoundOutcome::NotApplicable { na: reason.into() }
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            BoundOutcome::Value(v) => Some(*v),
            BoundOutcome::NotApplicable { .. } => None,
        }
    }
}

impl std::fmt::Display for BoundOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundOutcome::Value(v) => write!(f, "{v}"),
            BoundOutcome::NotApplicable { na } => write!(f, "na: {na}"),
        }
    }
}

/// The five bound slots of a report. `ell` applies to every instance; the
/// rest record why they are missing when they do not apply.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub ell: u64,
    pub turan: BoundOutcome,
    pub turan_spencer: BoundOutcome,
    pub caro_tuza: BoundOutcome,
    pub cps: BoundOutcome,
}

/// Per-instance record of all computed bounds plus the optional exact
/// independence number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub m: u64,
    pub k: u64,
    pub bounds: Bounds,
    pub alpha: Option<u64>,
    pub alpha_exhausted: bool,
    pub warnings: Vec<String>,
}

impl BoundReport {
    /// Values of all numeric bounds, by schema name.
    pub fn present_bounds(&self) -> Vec<(&'static str, u64)> {
        let mut out = vec![("ell", self.bounds.ell)];
        for (name, outcome) in [
            ("turan", &self.bounds.turan),
            ("turan_spencer", &self.bounds.turan_spencer),
            ("caro_tuza", &self.bounds.caro_tuza),
            ("cps", &self.bounds.cps),
        ] {
            if let Some(v) = outcome.value() {
                out.push((name, v));
            }
        }
        out
    }
}

/// Computes every requested, applicable bound for an instance; optionally
/// runs the exact solver. Inapplicable or unrequested bounds carry an
/// explicit reason.
pub fn compute_report(
    h: &Hypergraph,
    selection: &BoundSelection,
    with_alpha: bool,
    solver_cfg: &SolverConfig,
) -> BoundReport {
    let n = h.n() as u64;
    let m = h.m();
    let k = h.k() as u64;
    let mut warnings = Vec::new();

    let ell = ell_bound(n, m, k).expect("valid hypergraph parameters");

    let turan = if !selection.turan {
        BoundOutcome::na("not requested")
    } else if k == 2 {
        BoundOutcome::Value(turan_bound(n, m))
    } else {
        BoundOutcome::na("turan requires k=2")
    };

    let turan_spencer = if !selection.turan_spencer {
        BoundOutcome::na("not requested")
    } else if m * k >= n {
        BoundOutcome::Value(turan_spencer_bound(n, m, k).expect("applicability checked"))
    } else {
        BoundOutcome::na("turan_spencer requires m >= n/k")
    };

    let caro_tuza = if !selection.caro_tuza {
        BoundOutcome::na("not requested")
    } else {
        BoundOutcome::Value(
            caro_tuza_bound(&h.degree_sequence(), k).expect("k >= 2 on a valid hypergraph"),
        )
    };

    let cps = if !selection.cps {
        BoundOutcome::na("not requested")
    } else if k == 3 {
        let b = cps_bound(&h.degree_sequence(), k).expect("k checked");
        if b.boundary {
            warnings.push(format!(
                "cps sum {} is within 1e-9 of an integer; ceiling not certified",
                b.raw
            ));
        }
        BoundOutcome::Value(b.value)
    } else {
        BoundOutcome::na("cps requires k=3")
    };

    let (alpha, alpha_exhausted) = if with_alpha {
        let res = alpha_exact(h, solver_cfg);
        if !res.exhausted {
            warnings.push(format!(
                "exact solver budget exhausted after {} nodes; alpha is a lower estimate",
                res.nodes_explored
            ));
        }
        (Some(res.alpha as u64), res.exhausted)
    } else {
        (None, false)
    };

    BoundReport {
        n,
        m,
        k,
        bounds: Bounds {
            ell,
            turan,
            turan_spencer,
            caro_tuza,
            cps,
        },
        alpha,
        alpha_exhausted,
        warnings,
    }
}
