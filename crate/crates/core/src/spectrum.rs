//! Switching classes of signatures and the chromatic spectrum of a graph.
//!
//! Signing the co-tree edges of the breadth-first spanning forest while
//! keeping the forest positive picks exactly one signature from every
//! switching class, so a graph with cyclomatic number `r` has `2^r` classes.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{chromatic_number, Model};
use crate::graph::Graph;
use crate::signed::{Signature, SignedGraph};

pub const DEFAULT_MAX_COTREE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("graph has {cotree} co-tree edges ({classes} switching classes); the cap is {cap}", classes = 1u128 << cotree)]
    TooManyClasses { cotree: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// One switching class and its chromatic number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassValue {
    #[serde(serialize_with = "crate::io::report::serialize_signature")]
    pub signature: Signature,
    pub chi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub graph: String,
    pub model: Model,
    pub classes: Vec<ClassValue>,
    pub spectrum: Vec<usize>,
    pub m: usize,
    #[serde(rename = "M")]
    pub max: usize,
    pub interval_ok: bool,
}

impl SpectrumReport {
    fn from_classes(graph: String, model: Model, classes: Vec<ClassValue>) -> Self {
        let mut spectrum: Vec<usize> = classes.iter().map(|c| c.chi).collect();
        spectrum.sort_unstable();
        spectrum.dedup();
        let m = spectrum.first().copied().unwrap_or(0);
        let max = spectrum.last().copied().unwrap_or(0);
        let interval_ok = spectrum.iter().copied().eq(m..=max);
        SpectrumReport { graph, model, classes, spectrum, m, max, interval_ok }
    }

    pub fn contains(&self, k: usize) -> bool {
        self.spectrum.binary_search(&k).is_ok()
    }
}

/// Representative signatures, one per switching class, in binary counting
/// order over the co-tree edges (lowest edge index is the lowest bit, a set
/// bit means negative).
pub fn signature_class_representatives(graph: &Graph, max_cotree: usize) -> Result<Vec<Signature>, SpectrumError> {
    let cotree = graph.spanning_forest().cotree_edges();
    if cotree.len() > max_cotree || cotree.len() >= 64 {
        return Err(SpectrumError::TooManyClasses { cotree: cotree.len(), cap: max_cotree });
    }
    Ok((0..1u64 << cotree.len()).map(|bits| class_representative(graph.edge_count(), &cotree, bits)).collect())
}

fn class_representative(edge_count: usize, cotree: &[usize], bits: u64) -> Signature {
    let negative: Vec<usize> = cotree.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
    Signature::with_negative_edges(edge_count, &negative)
}

/// Chromatic number of every switching class. Classes are evaluated on the
/// current rayon pool; the report lists them in enumeration order.
pub fn chromatic_spectrum(
    graph: &Graph,
    descriptor: impl Into<String>,
    model: Model,
    max_cotree: usize,
) -> Result<SpectrumReport, SpectrumError> {
    let reps = signature_class_representatives(graph, max_cotree)?;
    let classes = reps
        .into_par_iter()
        .map(|signature| {
            let sg = SignedGraph::new(graph.clone(), signature).expect("representative matches graph");
            let chi = chromatic_number(&sg, model);
            ClassValue { signature: sg.into_parts().1, chi }
        })
        .collect();
    Ok(SpectrumReport::from_classes(descriptor.into(), model, classes))
}

/// Minimum of the spectrum from the graph structure alone: no edges gives 1;
/// otherwise the symmetric model gives 2, and the cyclic model gives 2 for
/// bipartite graphs and 3 for the rest.
pub fn min_chromatic_shortcut(graph: &Graph, model: Model) -> Result<usize, SpectrumError> {
    if graph.vertex_count() == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    Ok(match (graph.edge_count(), model) {
        (0, _) => 1,
        (_, Model::Symmetric) => 2,
        (_, Model::Cyclic) if graph.is_bipartite() => 2,
        (_, Model::Cyclic) => 3,
    })
}
