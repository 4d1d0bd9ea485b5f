//! Plain-text edge lists: a header line `n m`, then one `u v` pair per line.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            lines.push((offset, trimmed));
        }
        offset += line.len();
    }
    let mut lines = lines.into_iter();
    let (header_at, header) =
        lines.next().ok_or(Error::Parse { offset: 0, message: "missing `n m` header".into() })?;
    let (n, m) = pair(header_at, header)?;

    let mut edges = Vec::with_capacity(m);
    for (at, line) in lines {
        edges.push(pair(at, line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            offset: text.len(),
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn pair(offset: usize, line: &str) -> Result<(usize, usize)> {
    let bad =
        || Error::Parse { offset, message: format!("expected two non-negative integers, found {line:?}") };
    let mut parts = line.split_whitespace();
    let a = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}
