//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Ids are 0-based. Anything after `#` on a line is ignored. The writer emits
//! the canonical form: header `n m`, then every edge once with `u < v`, in
//! ascending order, `\n`-terminated.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let line_no = lineno + 1;
        let mut fields = line.split_whitespace();
        let a = parse_field(fields.next(), line_no)?;
        let b = parse_field(fields.next(), line_no)?;
        if let Some(extra) = fields.next() {
            return Err(Error::Parse { line: line_no, msg: format!("unexpected trailing field `{extra}`") });
        }
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                for w in [a, b] {
                    if w >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex {w} out of range for n = {n}"),
                        });
                    }
                }
                if a == b {
                    return Err(Error::Parse { line: line_no, msg: format!("self-loop at {a}") });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing `n m` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("header announces {m} edges, found {}", edges.len()) });
    }
    Graph::from_edges(n, edges)
}

fn parse_field(field: Option<&str>, line: usize) -> Result<usize> {
    let field = field.ok_or(Error::Parse { line, msg: "expected two integers".into() })?;
    field.parse().map_err(|_| Error::Parse { line, msg: format!("`{field}` is not a vertex id") })
}

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn canonical_writer() {
        assert_eq!(write(&cycle(4)), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(write(&path(1)), "1 0\n");
    }

    #[test]
    fn parses_comments_and_unsorted_edges() {
        let text = "# a triangle\n3 3\n2 1 # back edge\n\n0 2\n1 0\n";
        let g = parse(text).unwrap();
        assert_eq!(write(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 1\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 1\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 1\n0 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse("2 2\n0 1\n1 0\n").unwrap();
        assert_eq!(write(&g), "2 1\n0 1\n");
    }
}
