//! The edge-list text format.
//!
//! ```text
//! # comment
//! 4          <- node count
//! 1 2 3.0    <- i j w, 1-based, one record per unordered pair
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use speclap::Graph;

use crate::error::{CliError, Result};

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_graph_str(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing node count"))?;
    let n: usize = header.parse().map_err(|_| {
        parse_err(
            header_line,
            format!("expected a node count, found '{header}'"),
        )
    })?;
    if n == 0 {
        return Err(parse_err(header_line, "node count must be positive"));
    }

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [i, j, w] = fields[..] else {
            return Err(parse_err(line, format!("expected 'i j w', found '{text}'")));
        };
        let index = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad node index '{s}'")))
        };
        let (i, j) = (index(i)?, index(j)?);
        let w: f64 = w
            .parse()
            .map_err(|_| parse_err(line, format!("bad weight '{w}'")))?;
        if !w.is_finite() {
            return Err(parse_err(line, "weight must be finite"));
        }
        if i == 0 || j == 0 || i > n || j > n {
            return Err(CliError::IndexOutOfRange { line, nodes: n });
        }
        if i == j {
            return Err(parse_err(line, "self-loop"));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(CliError::DuplicateEdge { line });
        }
        edges.push((i - 1, j - 1, w));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn parse_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph_str(&text)
}

/// Edge-list text for `g`; parsing it gives back the same weights.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.node_count());
    for (i, j, w) in g.edges() {
        let _ = writeln!(out, "{} {} {}", i + 1, j + 1, w);
    }
    out
}
