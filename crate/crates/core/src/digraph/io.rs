//! Plain-text edge lists and DOT export.
//!
//! ```text
//! # cyclic triangle
//! 3 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The first non-blank line is `n m`; each of the next `m` lines is an arc
//! `u v`. Everything after a `#` is a comment.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Builder, Digraph, GraphError};

/// Largest vertex count accepted by [`parse_edge_list`]. Adjacency is stored
/// as two `n × n` bit matrices, so this keeps a hostile header from
/// allocating gigabytes.
pub const MAX_VERTICES: usize = 1 << 15;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("line {line}: {n} vertices exceeds the limit of {max}")]
    TooManyVertices { line: usize, n: usize, max: usize },
    #[error("header declares {declared} arcs but {found} were listed")]
    ArcCountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// A parsed edge list together with its comment lines (text after `#`,
/// trimmed, in file order).
#[derive(Clone, Debug)]
pub struct EdgeListDocument {
    pub graph: Digraph,
    pub comments: Vec<String>,
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    parse_edge_list_document(text).map(|doc| doc.graph)
}

pub fn parse_edge_list_document(text: &str) -> Result<EdgeListDocument, ParseError> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<Builder> = None;
    let mut found = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = match raw.split_once('#') {
            Some((before, comment)) => {
                comments.push(comment.trim().to_string());
                before
            }
            None => raw,
        };
        if body.trim().is_empty() {
            continue;
        }
        let (a, b) = parse_pair(body).ok_or_else(|| ParseError::BadLine {
            line,
            text: raw.to_string(),
        })?;
        match &mut builder {
            None => {
                if a > MAX_VERTICES {
                    return Err(ParseError::TooManyVertices {
                        line,
                        n: a,
                        max: MAX_VERTICES,
                    });
                }
                header = Some((a, b));
                builder = Some(Builder::new(a));
            }
            Some(bld) => {
                bld.add_arc(a, b).map_err(|source| ParseError::Graph { line, source })?;
                found += 1;
            }
        }
    }

    let (_, declared) = header.ok_or(ParseError::MissingHeader)?;
    if declared != found {
        return Err(ParseError::ArcCountMismatch { declared, found });
    }
    Ok(EdgeListDocument {
        graph: builder.expect("header seen").finish(),
        comments,
    })
}

fn parse_pair(body: &str) -> Option<(usize, usize)> {
    let mut it = body.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Canonical edge list: header, then arcs in lexicographic order.
pub fn write_edge_list(d: &Digraph) -> String {
    write_edge_list_with_comments(d, &[])
}

/// Edge list preceded by `# `-prefixed comment lines.
pub fn write_edge_list_with_comments(d: &Digraph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        let _ = writeln!(s, "# {c}");
    }
    let _ = writeln!(s, "{} {}", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Graphviz `digraph`; optional per-vertex labels.
pub fn to_dot(d: &Digraph, labels: Option<&[String]>) -> String {
    let mut s = String::from("digraph D {\n");
    for v in d.vertices() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(s, "  {v} [label=\"{escaped}\"];");
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "  {u} -> {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::cyclic_triangle;

    #[test]
    fn round_trip() {
        let d = cyclic_triangle();
        let text = write_edge_list(&d);
        assert_eq!(text, "3 3\n0 1\n1 2\n2 0\n");
        assert_eq!(parse_edge_list(&text).unwrap(), d);
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = parse_edge_list_document("# hello\n\n2 1 # header\n0 1\n").unwrap();
        assert_eq!(doc.graph.arc_count(), 1);
        assert_eq!(doc.comments, vec!["hello", "header"]);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_edge_list(""), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(ParseError::BadLine { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(ParseError::Graph {
                line: 3,
                source: GraphError::DuplicateOppositeArc { u: 1, v: 0 }
            })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::ArcCountMismatch { declared: 2, found: 1 })
        );
        assert!(matches!(
            parse_edge_list("99999999 0\n"),
            Err(ParseError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn dot_keeps_direction() {
        let dot = to_dot(&cyclic_triangle(), None);
        assert!(dot.contains("2 -> 0;"));
        assert!(!dot.contains("0 -> 2;"));
    }
}
