//! Text format for colorings.
//!
//! ```text
//! s color <n> <k>
//! v <vertex> <color>   (n lines, 1-based, sorted by vertex on write)
//! ```
//!
//! Input color labels may be any positive integers; they are renumbered to
//! dense ids and the original labels are kept in [`LoadedColoring`].

use std::fmt::Write as _;

use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_number, syntax, MAX_PARSED_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedColoring {
    pub coloring: Coloring,
    /// External label of each dense color id.
    pub labels: Vec<usize>,
}

impl LoadedColoring {
    /// True when the file's labels were not already `1..=k`.
    pub fn renumbered(&self) -> bool {
        self.labels.iter().enumerate().any(|(i, &l)| l != i + 1)
    }
}

pub fn parse_coloring(text: &str) -> Result<LoadedColoring> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing `s color` header"))?;
    if header.len() != 4 || header[0] != "s" || header[1] != "color" {
        return Err(syntax(line, "expected `s color <n> <k>`"));
    }
    let n = parse_number(line, header[2], "vertex count")?;
    let k = parse_number(line, header[3], "color count")?;
    if n > MAX_PARSED_VERTICES {
        return Err(Error::SizeCapExceeded { n: n as u128, cap: MAX_PARSED_VERTICES });
    }

    let mut labels: Vec<Option<usize>> = vec![None; n];
    for (line, tokens) in lines {
        if tokens[0] != "v" || tokens.len() != 3 {
            return Err(syntax(line, "expected `v <vertex> <color>`"));
        }
        let v = parse_number(line, tokens[1], "vertex")?;
        if v == 0 || v > n {
            return Err(Error::OutOfRangeVertex { vertex: v, n });
        }
        let color = parse_number(line, tokens[2], "color")?;
        if color == 0 {
            return Err(syntax(line, "colors are 1-based"));
        }
        if labels[v - 1].replace(color).is_some() {
            return Err(syntax(line, format!("vertex {v} colored twice")));
        }
    }
    if let Some(missing) = labels.iter().position(Option::is_none) {
        return Err(syntax(0, format!("vertex {} has no color", missing + 1)));
    }
    let raw: Vec<usize> = labels.into_iter().flatten().collect();
    let (coloring, labels) = Coloring::from_labels(&raw);
    if coloring.k() != k {
        return Err(syntax(0, format!("header declares {k} colors, found {}", coloring.k())));
    }
    Ok(LoadedColoring { coloring, labels })
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::with_capacity(16 + 10 * c.n());
    let _ = writeln!(out, "s color {} {}", c.n(), c.k());
    for (v, &color) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "v {} {}", v + 1, color + 1);
    }
    out
}
