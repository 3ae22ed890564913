//! Text format for graphs.
//!
//! ```text
//! c optional comment lines anywhere
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1-based, u < v, lexicographic on write)
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted from text input.
pub const MAX_PARSED_VERTICES: usize = 1 << 20;

pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

/// Yields `(1-based line number, tokens)` for every non-blank, non-comment line.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((idx + 1, tokens)),
        }
    })
}

pub(crate) fn parse_number(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse::<usize>().map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing `p edge` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "edge" {
        return Err(syntax(line, "expected `p edge <n> <m>`"));
    }
    let n = parse_number(line, header[2], "vertex count")?;
    let m = parse_number(line, header[3], "edge count")?;
    if n > MAX_PARSED_VERTICES {
        return Err(Error::SizeCapExceeded { n: n as u128, cap: MAX_PARSED_VERTICES });
    }

    let mut edges = Vec::new();
    for (line, tokens) in lines {
        if tokens[0] != "e" || tokens.len() != 3 {
            return Err(syntax(line, "expected `e <u> <v>`"));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens[1..]) {
            let x = parse_number(line, tok, "vertex")?;
            if x == 0 || x > n {
                return Err(Error::OutOfRangeVertex { vertex: x, n });
            }
            *slot = x - 1;
        }
        edges.push((ends[0], ends[1]));
    }
    if edges.len() != m {
        return Err(syntax(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

/// Canonical serialization; equal graphs produce identical bytes.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writes_c4() {
        let text = write_graph(&Graph::cycle(4));
        assert_eq!(text, "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
    }

    #[test]
    fn parses_with_comments_and_any_order() {
        let g = parse_graph("c hello\np edge 3 2\nc mid\ne 3 2\n\ne 1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 1 3\n"), Err(Error::OutOfRangeVertex { vertex: 3, .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 0 1\n"), Err(Error::OutOfRangeVertex { vertex: 0, .. })));
        assert!(matches!(parse_graph("p edge 2 2\ne 1 2\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 2 2\n"), Err(Error::SelfLoop(1))));
        assert!(matches!(parse_graph("p edge 2 1\nx 1 2\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_graph("p edge 99999999999 0\n"), Err(Error::SizeCapExceeded { .. })));
    }

    proptest! {
        #[test]
        fn write_parse_round_trip(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let edges: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph(&back), text);
        }
    }
}
