//! Vertex-deletion criticality and extraction of induced critical subgraphs.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{chromatic_number, chromatic_number_at_least, Model};
use crate::signed::{SignedGraph, SignedGraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("target {target} outside 1..={chi}")]
    TargetOutOfRange { target: usize, chi: usize },
    #[error("graph is not critical")]
    NotCritical,
    #[error("{0}-critical graphs have no structural classification")]
    Unclassified(usize),
    #[error("{k}-critical graph in the {model} model has unexpected structure: {detail}")]
    StructureMismatch { k: usize, model: Model, detail: String },
    #[error(transparent)]
    Signed(#[from] SignedGraphError),
}

/// Chromatic number of a signed graph and of each single-vertex deletion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityCertificate {
    pub model: Model,
    pub k: usize,
    pub per_vertex: Vec<usize>,
}

impl CriticalityCertificate {
    pub fn is_critical(&self) -> bool {
        self.per_vertex.iter().all(|&v| v + 1 == self.k)
    }

    /// Every deletion keeps the value or lowers it by exactly one.
    pub fn drops_by_at_most_one(&self) -> bool {
        self.per_vertex.iter().all(|&v| v == self.k || v + 1 == self.k)
    }
}

pub fn criticality_certificate(sg: &SignedGraph, model: Model) -> Result<CriticalityCertificate, CriticalError> {
    if sg.vertex_count() == 0 {
        return Err(CriticalError::EmptyGraph);
    }
    let k = chromatic_number(sg, model);
    let per_vertex = (0..sg.vertex_count())
        .map(|u| chromatic_number(&sg.delete_vertex(u).expect("vertex in range").0, model))
        .collect();
    Ok(CriticalityCertificate { model, k, per_vertex })
}

pub fn is_critical(sg: &SignedGraph, model: Model) -> Result<(bool, CriticalityCertificate), CriticalError> {
    let cert = criticality_certificate(sg, model)?;
    Ok((cert.is_critical(), cert))
}

/// Vertex set (original indices, ascending) of an induced `target`-critical
/// subgraph, found by repeatedly deleting the smallest vertex whose removal
/// keeps the chromatic number at least `target`.
pub fn extract_critical_subgraph(sg: &SignedGraph, target: usize, model: Model) -> Result<Vec<usize>, CriticalError> {
    let chi = chromatic_number(sg, model);
    if target == 0 || target > chi {
        return Err(CriticalError::TargetOutOfRange { target, chi });
    }
    let mut kept: Vec<usize> = (0..sg.vertex_count()).collect();
    let mut current = sg.clone();
    'descent: loop {
        for u in 0..kept.len() {
            let (smaller, _) = current.delete_vertex(u)?;
            if chromatic_number_at_least(&smaller, model, target) {
                kept.remove(u);
                current = smaller;
                continue 'descent;
            }
        }
        return Ok(kept);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalClass {
    K1,
    K2,
    OddCircuit,
    BalancedOddCircuit,
    UnbalancedEvenCircuit,
}

impl CriticalClass {
    pub fn name(self) -> &'static str {
        match self {
            CriticalClass::K1 => "K1",
            CriticalClass::K2 => "K2",
            CriticalClass::OddCircuit => "odd-circuit",
            CriticalClass::BalancedOddCircuit => "balanced-odd-circuit",
            CriticalClass::UnbalancedEvenCircuit => "unbalanced-even-circuit",
        }
    }
}

/// Connected and 2-regular.
pub fn is_circuit(sg: &SignedGraph) -> bool {
    let g = sg.graph();
    g.vertex_count() >= 3 && (0..g.vertex_count()).all(|v| g.degree(v) == 2) && g.component_count() == 1
}

/// Structural class of a 1-, 2- or 3-critical signed graph. Any other
/// structure contradicts the known classification and is reported as
/// [`CriticalError::StructureMismatch`].
pub fn classify_small_critical(sg: &SignedGraph, model: Model) -> Result<CriticalClass, CriticalError> {
    let (critical, cert) = is_critical(sg, model)?;
    if !critical {
        return Err(CriticalError::NotCritical);
    }
    let g = sg.graph();
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mismatch = |detail: String| CriticalError::StructureMismatch { k: cert.k, model, detail };
    match cert.k {
        1 if n == 1 => Ok(CriticalClass::K1),
        2 if n == 2 && m == 1 => Ok(CriticalClass::K2),
        3 if is_circuit(sg) => {
            let balanced = sg.is_balanced();
            match (model, n % 2 == 1, balanced) {
                (Model::Cyclic, true, _) => Ok(CriticalClass::OddCircuit),
                (Model::Symmetric, true, true) => Ok(CriticalClass::BalancedOddCircuit),
                (Model::Symmetric, false, false) => Ok(CriticalClass::UnbalancedEvenCircuit),
                _ => Err(mismatch(format!(
                    "{} {}-circuit",
                    if balanced { "balanced" } else { "unbalanced" },
                    if n % 2 == 1 { "odd" } else { "even" }
                ))),
            }
        }
        1..=3 => Err(mismatch(format!("{n} vertices, {m} edges, circuit: {}", is_circuit(sg)))),
        k => Err(CriticalError::Unclassified(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::signed::Signature;

    fn signed(g: Graph, negative: &[usize]) -> SignedGraph {
        let m = g.edge_count();
        SignedGraph::new(g, Signature::with_negative_edges(m, negative)).unwrap()
    }

    #[test]
    fn criticality_examples() {
        assert!(is_critical(&SignedGraph::all_positive(Graph::cycle(5)), Model::Cyclic).unwrap().0);
        assert!(is_critical(&signed(Graph::cycle(4), &[0]), Model::Symmetric).unwrap().0);
        let (crit, cert) = is_critical(&SignedGraph::all_positive(Graph::cycle(4)), Model::Symmetric).unwrap();
        assert!(!crit);
        assert_eq!(cert.k, 2);
        assert_eq!(cert.per_vertex, vec![2; 4]);
        assert!(is_critical(&SignedGraph::all_positive(Graph::empty(0)), Model::Cyclic).is_err());
    }

    #[test]
    fn extraction_examples() {
        let k4 = SignedGraph::all_positive(Graph::complete(4));
        let tri = extract_critical_subgraph(&k4, 3, Model::Cyclic).unwrap();
        assert_eq!(tri, vec![1, 2, 3]);
        let (h, _) = k4.induced(&tri).unwrap();
        assert!(is_circuit(&h) && h.vertex_count() % 2 == 1);

        assert_eq!(extract_critical_subgraph(&k4, 1, Model::Symmetric).unwrap().len(), 1);
        let c5 = SignedGraph::all_positive(Graph::cycle(5));
        assert_eq!(extract_critical_subgraph(&c5, 3, Model::Cyclic).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(
            extract_critical_subgraph(&c5, 4, Model::Cyclic),
            Err(CriticalError::TargetOutOfRange { target: 4, chi: 3 })
        );
        assert!(extract_critical_subgraph(&c5, 0, Model::Cyclic).is_err());
    }

    #[test]
    fn classification_examples() {
        let k2 = SignedGraph::all_positive(Graph::complete(2));
        for model in Model::ALL {
            assert_eq!(classify_small_critical(&k2, model), Ok(CriticalClass::K2));
            assert_eq!(
                classify_small_critical(&SignedGraph::all_positive(Graph::empty(1)), model),
                Ok(CriticalClass::K1)
            );
        }
        assert_eq!(
            classify_small_critical(&SignedGraph::all_negative(Graph::cycle(7)), Model::Cyclic),
            Ok(CriticalClass::OddCircuit)
        );
        assert_eq!(
            classify_small_critical(&SignedGraph::all_positive(Graph::cycle(3)), Model::Symmetric),
            Ok(CriticalClass::BalancedOddCircuit)
        );
        assert_eq!(
            classify_small_critical(&signed(Graph::cycle(6), &[2]), Model::Symmetric),
            Ok(CriticalClass::UnbalancedEvenCircuit)
        );
        assert_eq!(
            classify_small_critical(&SignedGraph::all_positive(Graph::cycle(4)), Model::Cyclic),
            Err(CriticalError::NotCritical)
        );
        assert_eq!(
            classify_small_critical(&SignedGraph::all_positive(Graph::complete(4)), Model::Cyclic),
            Err(CriticalError::Unclassified(4))
        );
    }
}
