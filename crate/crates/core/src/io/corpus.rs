//! Input detection for command-line corpora: a signed edge list (first
//! meaningful line starts with `n `) or graph6 records, one per line.

use thiserror::Error;

use crate::graph::Graph;
use crate::io::edgelist::{parse_signed_edgelist, EdgeListError};
use crate::io::graph6::{encode_graph6, parse_graph6, Graph6Error};
use crate::signed::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("input contains no graphs")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// graph6 text of the underlying graph.
    pub id: String,
    /// 1-based line of the record (1 for an edge list).
    pub line: usize,
    pub graph: Graph,
    pub signature: Option<Signature>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    let entries = match first {
        None => Vec::new(),
        Some(l) if l.starts_with("n ") || l == "n" => {
            let (graph, signature) = parse_signed_edgelist(text)?.into_parts();
            vec![CorpusEntry { id: encode_graph6(&graph), line: 1, graph, signature: Some(signature) }]
        }
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'))
            .map(|(i, l)| {
                let graph = parse_graph6(l.trim()).map_err(|source| CorpusError::Graph6 { line: i + 1, source })?;
                Ok(CorpusEntry { id: encode_graph6(&graph), line: i + 1, graph, signature: None })
            })
            .collect::<Result<_, CorpusError>>()?,
    };
    if entries.is_empty() {
        return Err(CorpusError::Empty);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_edge_lists() {
        let entries = parse_corpus("# triangle\nn 3\n0 1 -\n1 2 -\n0 2 -\n").unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].id, "Bw");
        assert_eq!(entries[0].signature.as_ref().unwrap().to_string(), "---");
    }

    #[test]
    fn reads_graph6_lines() {
        let entries = parse_corpus(">>graph6<<Bw\n\nA_\n").unwrap();
        assert_eq!(entries.iter().map(|e| (e.id.as_str(), e.line)).collect::<Vec<_>>(), vec![("Bw", 1), ("A_", 3)]);
        assert!(entries.iter().all(|e| e.signature.is_none()));
        assert!(matches!(parse_corpus("Bw\nB!\n"), Err(CorpusError::Graph6 { line: 2, .. })));
        assert_eq!(parse_corpus("\n# nothing\n"), Err(CorpusError::Empty));
    }
}
