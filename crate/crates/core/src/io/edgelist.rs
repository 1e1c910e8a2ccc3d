//! Signed edge lists:
//!
//! ```text
//! n 3
//! 0 1 -
//! 1 2 +
//! ```
//!
//! Vertices are 0-based. Blank lines and lines starting with `#` are ignored.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::signed::{Sign, Signature, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing \"n <vertex-count>\" header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn parse_signed_edgelist(text: &str) -> Result<SignedGraph, EdgeListError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().map_err(|e| EdgeListError::Syntax {
            line: header_line,
            message: format!("bad vertex count {count:?}: {e}"),
        })?,
        _ => return Err(EdgeListError::MissingHeader),
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    for (line, text) in lines {
        let syntax = |message: String| EdgeListError::Syntax { line, message };
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v, s] = fields.as_slice() else {
            return Err(syntax(format!("expected \"u v sign\", got {text:?}")));
        };
        let u: usize = u.parse().map_err(|_| syntax(format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| syntax(format!("bad vertex {v:?}")))?;
        let sign = match *s {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(syntax(format!("bad sign token {other:?}"))),
        };
        let graph_error = |source| EdgeListError::Graph { line, source };
        for w in [u, v] {
            if w >= n {
                return Err(graph_error(GraphError::VertexOutOfRange { vertex: w, vertex_count: n }));
            }
        }
        if u == v {
            return Err(graph_error(GraphError::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(graph_error(GraphError::DuplicateEdge(u.min(v), u.max(v))));
        }
        edges.push((u, v));
        signs.push(sign);
    }
    let graph = Graph::new(n, edges).expect("edges checked line by line");
    Ok(SignedGraph::new(graph, Signature::new(signs)).expect("one sign per edge"))
}

pub fn emit_signed_edgelist(sg: &SignedGraph) -> String {
    let mut out = format!("n {}\n", sg.vertex_count());
    for (&(u, v), s) in sg.graph().edges().iter().zip(sg.signature().signs()) {
        out.push_str(&format!("{u} {v} {}\n", s.as_char()));
    }
    out
}
