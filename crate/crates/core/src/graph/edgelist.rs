//! Plain edge-list text: a header line `n m`, then `m` lines `u v`
//! (0-based). Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("not a vertex index: {t:?}")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let head = numbers(header, hl)?;
    let [n, m] = head[..] else {
        return Err(Error::parse(hl, "header must be `n m`"));
    };

    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let nums = numbers(line, ln)?;
        let [u, v] = nums[..] else {
            return Err(Error::parse(ln, "edge line must be `u v`"));
        };
        if u >= n || v >= n {
            return Err(Error::parse(ln, format!("edge ({u},{v}) outside 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(ln, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
