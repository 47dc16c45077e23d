//! Text file format for hypergraphs and machine-readable report rendering.
//!
//! The hypergraph format is line-oriented: a header `k n`, then one edge per
//! line as k whitespace-separated 0-based vertex indices. `#` starts a
//! comment line; blank lines are ignored. Serialization emits the canonical
//! form (sorted vertices, edges in lexicographic order), so parse/serialize
//! round-trips are identity on canonical files.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundOutcome, BoundReport};
use crate::exact::AlphaResult;
use crate::hypergraph::Hypergraph;
use crate::verify::SweepResult;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected two integers `k n` with k >= 2, n >= 1")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected {expected} distinct vertex indices")]
    EdgeArity { line: usize, expected: usize },
    #[error("line {line}: vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdgeLine { line: usize },
}

/// Parses the hypergraph text format with 0-based vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    parse_hypergraph_opts(text, false)
}

/// Parses the hypergraph text format; `one_based` shifts indices down by one
/// to accommodate external corpora.
pub fn parse_hypergraph_opts(text: &str, one_based: bool) -> Result<Hypergraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();

    for (line_index, raw) in text.lines().enumerate() {
        let line = line_index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(ParseError::MalformedHeader { line });
                }
                let k: usize = tokens[0]
                    .parse()
                    .map_err(|_| ParseError::MalformedHeader { line })?;
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| ParseError::MalformedHeader { line })?;
                if k < 2 || n == 0 {
                    return Err(ParseError::MalformedHeader { line });
                }
                header = Some((k, n));
            }
            Some((k, n)) => {
                if tokens.len() != k {
                    return Err(ParseError::EdgeArity { line, expected: k });
                }
                let mut edge = Vec::with_capacity(k);
                for tok in tokens {
                    let mut v: usize = tok
                        .parse()
                        .map_err(|_| ParseError::EdgeArity { line, expected: k })?;
                    if one_based {
                        if v == 0 {
                            return Err(ParseError::IndexOutOfRange { line, index: 0, n });
                        }
                        v -= 1;
                    }
                    if v >= n {
                        return Err(ParseError::IndexOutOfRange { line, index: v, n });
                    }
                    edge.push(v);
                }
                edge.sort_unstable();
                edge.dedup();
                if edge.len() != k {
                    return Err(ParseError::EdgeArity { line, expected: k });
                }
                if !seen.insert(edge.clone()) {
                    return Err(ParseError::DuplicateEdgeLine { line });
                }
                edges.push(edge);
            }
        }
    }

    let (k, n) = header.ok_or(ParseError::MalformedHeader { line: 1 })?;
    Hypergraph::new(n, k, edges).map_err(|_| ParseError::MalformedHeader { line: 1 })
}

/// Canonical text form: header, then one sorted edge per line in
/// lexicographic order.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.k(), h.n());
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn report_json(report: &BoundReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub const REPORT_CSV_HEADER: &str = "n,m,k,ell,turan,turan_spencer,caro_tuza,cps,alpha";

fn csv_outcome(outcome: &BoundOutcome) -> String {
    match outcome.value() {
        Some(v) => v.to_string(),
        None => "na".into(),
    }
}

/// One CSV document (header plus row) in the fixed column order.
pub fn report_csv(report: &BoundReport) -> String {
    let alpha = report.alpha.map(|a| a.to_string()).unwrap_or_default();
    format!(
        "{REPORT_CSV_HEADER}\n{},{},{},{},{},{},{},{},{}\n",
        report.n,
        report.m,
        report.k,
        report.bounds.ell,
        csv_outcome(&report.bounds.turan),
        csv_outcome(&report.bounds.turan_spencer),
        csv_outcome(&report.bounds.caro_tuza),
        csv_outcome(&report.bounds.cps),
        alpha,
    )
}

/// Human-oriented rendering; not a stability contract.
pub fn report_table(report: &BoundReport) -> String {
    let mut out = format!(
        "instance       n={} m={} k={}\n",
        report.n, report.m, report.k
    );
    out.push_str(&format!("ell            {}\n", report.bounds.ell));
    out.push_str(&format!("turan          {}\n", report.bounds.turan));
    out.push_str(&format!("turan_spencer  {}\n", report.bounds.turan_spencer));
    out.push_str(&format!("caro_tuza      {}\n", report.bounds.caro_tuza));
    out.push_str(&format!("cps            {}\n", report.bounds.cps));
    match report.alpha {
        Some(a) => out.push_str(&format!(
            "alpha          {a}{}\n",
            if report.alpha_exhausted {
                ""
            } else {
                " (lower estimate: budget exhausted)"
            }
        )),
        None => out.push_str("alpha          not computed\n"),
    }
    for w in &report.warnings {
        out.push_str(&format!("warning        {w}\n"));
    }
    out
}

#[derive(Serialize)]
struct AlphaJson<'a> {
    alpha: u64,
    witness: &'a [usize],
    nodes_explored: u64,
    exhausted: bool,
}

pub fn alpha_json(result: &AlphaResult) -> String {
    let mut s = serde_json::to_string_pretty(&AlphaJson {
        alpha: result.alpha as u64,
        witness: result.witness.vertices(),
        nodes_explored: result.nodes_explored,
        exhausted: result.exhausted,
    })
    .expect("alpha result serializes");
    s.push('\n');
    s
}

pub fn sweep_json(result: &SweepResult) -> String {
    let mut s = serde_json::to_string_pretty(result).expect("sweep result serializes");
    s.push('\n');
    s
}

fn csv_minmax(mm: &Option<crate::verify::MinMax>) -> String {
    match mm {
        Some(v) if v.min == v.max => v.min.to_string(),
        Some(v) => format!("{}..{}", v.min, v.max),
        None => String::new(),
    }
}

/// Per-cell CSV rows in the fixed column order; degree-dependent bounds show
/// `min..max` when instances in the cell differ.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::from(REPORT_CSV_HEADER);
    out.push('\n');
    for cell in &result.cells {
        let turan = cell
            .turan
            .map(|v| v.to_string())
            .unwrap_or_else(|| "na".into());
        let ts = cell
            .turan_spencer
            .map(|v| v.to_string())
            .unwrap_or_else(|| "na".into());
        let cps = match &cell.cps {
            Some(_) => csv_minmax(&cell.cps),
            None => "na".into(),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            cell.n,
            cell.m,
            cell.k,
            cell.ell,
            turan,
            ts,
            csv_minmax(&cell.caro_tuza),
            cps,
            csv_minmax(&cell.alpha),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let h = parse_hypergraph("3 6\n0 1 2\n0 1 3\n").unwrap();
        assert_eq!((h.n(), h.k(), h.m()), (6, 3, 2));
    }

    #[test]
    fn parse_comments_and_blanks() {
        let h = parse_hypergraph("# a comment\n\n3 6\n\n# another\n0 1 2\n").unwrap();
        assert_eq!(h.m(), 1);
    }

    #[test]
    fn parse_duplicate_edge_line() {
        let err = parse_hypergraph("3 6\n0 1 2\n0 2 1\n").unwrap_err();
        assert_eq!(err, ParseError::DuplicateEdgeLine { line: 3 });
    }

    #[test]
    fn parse_index_out_of_range() {
        let err = parse_hypergraph("2 4\n0 1\n1 5\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::IndexOutOfRange {
                line: 3,
                index: 5,
                n: 4
            }
        );
    }

    #[test]
    fn parse_arity_and_header_errors() {
        assert_eq!(
            parse_hypergraph("3 6\n0 1\n").unwrap_err(),
            ParseError::EdgeArity {
                line: 2,
                expected: 3
            }
        );
        assert_eq!(
            parse_hypergraph("3 6\n0 1 1\n").unwrap_err(),
            ParseError::EdgeArity {
                line: 2,
                expected: 3
            }
        );
        assert!(matches!(
            parse_hypergraph("nonsense\n").unwrap_err(),
            ParseError::MalformedHeader { line: 1 }
        ));
        assert!(matches!(
            parse_hypergraph("1 6\n").unwrap_err(),
            ParseError::MalformedHeader { line: 1 }
        ));
        assert!(matches!(
            parse_hypergraph("").unwrap_err(),
            ParseError::MalformedHeader { .. }
        ));
    }

    #[test]
    fn parse_one_based() {
        let h = parse_hypergraph_opts("3 6\n1 2 3\n", true).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
        assert_eq!(
            parse_hypergraph_opts("3 6\n0 1 2\n", true).unwrap_err(),
            ParseError::IndexOutOfRange {
                line: 2,
                index: 0,
                n: 6
            }
        );
    }

    #[test]
    fn round_trip_is_identity_on_canonical_form() {
        let h = Hypergraph::random_uniform(7, 3, 12, 99).unwrap();
        let text = serialize_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(h, back);
        assert_eq!(serialize_hypergraph(&back), text);
    }
}
