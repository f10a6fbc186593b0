//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n=5
//! 0 1
//! 1 2
//! ```
//!
//! The optional `n=<k>` line must be the first non-comment line; without it
//! the vertex count is one more than the largest label.

use std::io::{BufRead, Write};
use std::path::Path;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_lines(text.lines().map(|l| Ok(l.to_owned())))
}

pub fn read_edge_list(path: &Path) -> Result<Graph> {
    let file = std::fs::File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("cannot open {}: {e}", path.display()),
        ))
    })?;
    parse_lines(std::io::BufReader::new(file).lines())
}

fn parse_lines<I>(lines: I) -> Result<Graph>
where
    I: IntoIterator<Item = std::io::Result<String>>,
{
    let mut declared: Option<usize> = None;
    let mut seen_content = false;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut rows = [0u64; MAX_VERTICES];
    let mut max_label: Option<usize> = None;

    for (idx, line) in lines.into_iter().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };

        if let Some(count) = trimmed.strip_prefix("n=") {
            if seen_content {
                return Err(parse_err("`n=` must be the first non-comment line".into()));
            }
            let n: usize = count
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad vertex count `{count}`")))?;
            if !(1..=MAX_VERTICES).contains(&n) {
                return Err(parse_err(format!(
                    "vertex count {n} outside 1..={MAX_VERTICES}"
                )));
            }
            declared = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;

        let mut fields = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(format!("expected `u v`, found `{trimmed}`")));
        };
        let label = |t: &str| -> Result<usize> {
            let v: usize = t
                .parse()
                .map_err(|_| parse_err(format!("`{t}` is not a vertex label")))?;
            let limit = declared.unwrap_or(MAX_VERTICES);
            if v >= limit {
                return Err(parse_err(format!(
                    "vertex {v} out of range (limit {limit})"
                )));
            }
            Ok(v)
        };
        let (u, v) = (label(a)?, label(b)?);
        if u == v {
            return Err(parse_err(format!("self-loop at vertex {u}")));
        }
        if rows[u] & (1 << v) != 0 {
            return Err(parse_err(format!("duplicate edge {u} {v}")));
        }
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        edges.push((u, v));
        max_label = Some(max_label.map_or(u.max(v), |m| m.max(u).max(v)));
    }

    let n = match (declared, max_label) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => {
            return Err(Error::Parse {
                line: 0,
                message: "no edges and no `n=` line; vertex count unknown".into(),
            })
        }
    };
    Graph::from_edges(n, edges)
}

/// Writes `n=<k>` followed by the edges in lexicographic order.
pub fn write_edge_list<W: Write>(g: &Graph, mut sink: W) -> Result<()> {
    writeln!(sink, "n={}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(sink, "{u} {v}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hoffman_singleton, build_petersen};

    #[test]
    fn parses_comments_and_count() {
        let g = parse_edge_list("# pentagon\nn=6\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count(), g.degree(5)), (6, 5, 0));
        let g = parse_edge_list("0 1\n\n# tail\n1 3\n").unwrap();
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn rejects_bad_lines_with_line_numbers() {
        let line_of = |text: &str| match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("0 1\n1 1\n"), 2);
        assert_eq!(line_of("# c\n0 1\n1 0\n"), 3);
        assert_eq!(line_of("0 1 2\n"), 1);
        assert_eq!(line_of("n=3\n0 3\n"), 2);
        assert_eq!(line_of("0 64\n"), 1);
        assert_eq!(line_of("0 1\nn=4\n"), 2);
        assert_eq!(line_of("x 1\n"), 1);
        assert_eq!(line_of("n=0\n"), 1);
        assert_eq!(line_of("# nothing\n"), 0);
    }

    #[test]
    fn write_then_parse_is_identity() {
        for g in [build_petersen(), build_hoffman_singleton().unwrap()] {
            let mut buf = Vec::new();
            write_edge_list(&g, &mut buf).unwrap();
            let back = parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn missing_file_mentions_cannot_open() {
        let err = read_edge_list(Path::new("/nonexistent/graph.txt")).unwrap_err();
        assert!(err.to_string().contains("cannot open"));
    }
}
