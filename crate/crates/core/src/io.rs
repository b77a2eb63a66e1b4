//! Text formats: graphs and matchings.
//!
//! A graph file is a header line `n m` followed by m lines `u v`; the
//! i-th edge line becomes edge id i. Lines starting with `#` and blank
//! lines are skipped on input. Canonical output has no comments, single
//! spaces, LF endings, so parse and format invert each other on it.
//! A matching file is one edge id per line, ascending.

use crate::graph::{CubicGraph, EdgeId, GraphError};
use std::error::Error;
use std::fmt;

#[derive(Debug)]
pub enum ParseError {
    MissingHeader,
    /// line numbers are 1-based physical lines
    BadHeader { line: usize },
    BadEdge { line: usize },
    WrongEdgeCount { want: usize, got: usize },
    TrailingData { line: usize },
    BadId { line: usize },
    DuplicateId { line: usize },
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing 'n m' header line"),
            ParseError::BadHeader { line } => write!(f, "line {}: header is not 'n m'", line),
            ParseError::BadEdge { line } => write!(f, "line {}: edge is not 'u v'", line),
            ParseError::WrongEdgeCount { want, got } => {
                write!(f, "header promises {} edges, file has {}", want, got)
            }
            ParseError::TrailingData { line } => write!(f, "line {}: data after the last edge", line),
            ParseError::BadId { line } => write!(f, "line {}: not an edge id", line),
            ParseError::DuplicateId { line } => write!(f, "line {}: repeated edge id", line),
            ParseError::Graph(e) => write!(f, "{}", e),
        }
    }
}

impl Error for ParseError {}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        ParseError::Graph(e)
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<CubicGraph, ParseError> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut it = header.split_ascii_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (
            a.parse::<usize>().map_err(|_| ParseError::BadHeader { line: hline })?,
            b.parse::<usize>().map_err(|_| ParseError::BadHeader { line: hline })?,
        ),
        _ => return Err(ParseError::BadHeader { line: hline }),
    };
    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        if pairs.len() == m {
            return Err(ParseError::TrailingData { line });
        }
        let mut it = text.split_ascii_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (
                a.parse::<usize>().map_err(|_| ParseError::BadEdge { line })?,
                b.parse::<usize>().map_err(|_| ParseError::BadEdge { line })?,
            ),
            _ => return Err(ParseError::BadEdge { line }),
        };
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(ParseError::WrongEdgeCount { want: m, got: pairs.len() });
    }
    Ok(CubicGraph::build(n, &pairs)?)
}

pub fn format_graph(g: &CubicGraph) -> String {
    let mut out = String::with_capacity(8 + 8 * g.m());
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Ids in any order on input; duplicates are rejected, the result is sorted.
pub fn parse_matching(text: &str) -> Result<Vec<EdgeId>, ParseError> {
    let mut ids = Vec::new();
    for (line, text) in significant_lines(text) {
        let id: EdgeId = text.parse().map_err(|_| ParseError::BadId { line })?;
        if ids.contains(&id) {
            return Err(ParseError::DuplicateId { line });
        }
        ids.push(id);
    }
    ids.sort_unstable();
    Ok(ids)
}

pub fn format_matching(ids: &[EdgeId]) -> String {
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    let mut out = String::with_capacity(8 * sorted.len());
    for id in sorted {
        out.push_str(&format!("{}\n", id));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use proptest::prelude::*;

    #[test]
    fn parses_the_canonical_form() {
        let text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, gen::k4());
        assert_eq!(format_graph(&g), text);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# complete graph on four vertices\n4 6\n\n0 1\n0 2\n # interior\n0 3\n1 2\n1 3\n2 3\n";
        assert_eq!(parse_graph(text).unwrap(), gen::k4());
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(matches!(parse_graph(""), Err(ParseError::MissingHeader)));
        assert!(matches!(parse_graph("x 6\n"), Err(ParseError::BadHeader { line: 1 })));
        assert!(matches!(parse_graph("4 6 9\n"), Err(ParseError::BadHeader { line: 1 })));
        assert!(matches!(
            parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 z\n"),
            Err(ParseError::BadEdge { line: 7 })
        ));
        assert!(matches!(
            parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n"),
            Err(ParseError::WrongEdgeCount { want: 6, got: 5 })
        ));
        assert!(matches!(
            parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 0\n"),
            Err(ParseError::TrailingData { line: 8 })
        ));
        // structural problems surface through graph construction
        assert!(matches!(parse_graph("3 4\n0 1\n0 2\n1 2\n0 0\n"), Err(ParseError::Graph(_))));
        assert!(matches!(parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 9\n"), Err(ParseError::Graph(_))));
    }

    #[test]
    fn matching_files_round_trip() {
        let text = "0\n4\n11\n";
        let ids = parse_matching(text).unwrap();
        assert_eq!(ids, vec![0, 4, 11]);
        assert_eq!(format_matching(&ids), text);
        assert_eq!(parse_matching("11\n# middle\n0\n4\n").unwrap(), vec![0, 4, 11]);
        assert!(matches!(parse_matching("1\n1\n"), Err(ParseError::DuplicateId { line: 2 })));
        assert!(matches!(parse_matching("7\nx\n"), Err(ParseError::BadId { line: 2 })));
        assert_eq!(parse_matching("").unwrap(), Vec::<EdgeId>::new());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_graphs_round_trip_bit_exactly(half in 2usize..30, seed in any::<u64>()) {
            let g = gen::random(2 * half, seed);
            let text = format_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(format_graph(&back), text);
        }

        #[test]
        fn matching_lists_round_trip(ids in proptest::collection::btree_set(0usize..10_000, 0..40)) {
            let v: Vec<EdgeId> = ids.into_iter().collect();
            let text = format_matching(&v);
            prop_assert_eq!(parse_matching(&text).unwrap(), v);
        }
    }
}
