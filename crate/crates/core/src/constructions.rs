//! Constructive steps behind the one-step-drop and reachability results:
//! extending a colouring of `G - u` to `G` with one extra colour, lifting a
//! signature of an induced subgraph to the whole graph without changing the
//! chromatic number, and the pipeline that combines them to realise `k - 1`
//! from a signature achieving `k`.

use thiserror::Error;

use crate::coloring::{
    chromatic_number, find_coloring, validate_coloring, Color, Coloring, ColoringError, Model, Palette,
};
use crate::critical::{extract_critical_subgraph, CriticalError};
use crate::graph::{Graph, GraphError};
use crate::signed::{Sign, Signature, SignedGraph, SignedGraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("palette size {k} is below the minimum {min} for this construction")]
    PaletteTooSmall { k: usize, min: usize },
    #[error("input colouring is not proper")]
    InvalidColoring,
    #[error("extended colouring failed validation: {0:?}")]
    ExtensionFailed(Vec<Color>),
    #[error("subgraph has chromatic number {found}, expected {expected}")]
    WrongChromaticNumber { expected: usize, found: usize },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Signed(#[from] SignedGraphError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Critical(#[from] CriticalError),
}

/// Turn a proper colouring `phi` of `G - u` with palette size `k - 2` into a
/// proper colouring of `G` with palette size `k - 1`. `phi` is indexed by the
/// compacted vertex order of [`SignedGraph::delete_vertex`].
///
/// Cyclic model: colours from the upper half shift up by one, which frees a
/// self-inverse residue (odd `k`) or a residue whose inverse is the old
/// self-inverse one (even `k`) for `u`; in the even case, negative
/// neighbours of `u` holding the old self-inverse colour take `u`'s colour.
///
/// Symmetric model: for even `k`, `u` takes the new colour 0. For odd `k`,
/// `u` takes `(k-1)/2`, and every vertex coloured 0 (which is no longer in
/// the palette) moves to `±(k-1)/2` so that it avoids `u`.
pub fn extend_coloring(
    sg: &SignedGraph,
    u: usize,
    phi: &Coloring,
    k: usize,
    model: Model,
) -> Result<Coloring, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::PaletteTooSmall { k, min: 3 });
    }
    let (rest, map) = sg.delete_vertex(u)?;
    if !validate_coloring(&rest, &Palette::new(model, k - 2)?, phi)? {
        return Err(ConstructionError::InvalidColoring);
    }
    let g = sg.graph();
    let mut colors = vec![0; g.vertex_count()];
    for (i, &c) in phi.colors().iter().enumerate() {
        colors[map.parent_of(i)] = c;
    }
    let half = (k / 2) as Color;
    match model {
        Model::Cyclic => {
            // odd k: (k-1)/2 == k/2 in integer division
            for (v, c) in colors.iter_mut().enumerate() {
                if v != u && *c >= half {
                    *c += 1;
                }
            }
            colors[u] = half;
            if k.is_multiple_of(2) {
                for &e in g.incident_edges(u) {
                    let v = g.other_end(e, u);
                    if sg.sign(e) == Sign::Negative && colors[v] == half - 1 {
                        colors[v] = half;
                    }
                }
            }
        }
        Model::Symmetric if k.is_multiple_of(2) => colors[u] = 0,
        Model::Symmetric => {
            colors[u] = half;
            let mut toward_u = vec![None; g.vertex_count()];
            for &e in g.incident_edges(u) {
                toward_u[g.other_end(e, u)] = Some(sg.sign(e));
            }
            for (v, c) in colors.iter_mut().enumerate() {
                if v != u && *c == 0 {
                    *c = match toward_u[v] {
                        Some(Sign::Positive) => -half,
                        Some(Sign::Negative) | None => half,
                    };
                }
            }
        }
    }
    let extended = Coloring::new(colors);
    if validate_coloring(sg, &Palette::new(model, k - 1)?, &extended)? {
        Ok(extended)
    } else {
        Err(ConstructionError::ExtensionFailed(extended.into_inner()))
    }
}

fn min_lift_value(model: Model) -> usize {
    match model {
        Model::Cyclic => 3,
        Model::Symmetric => 2,
    }
}

/// Signature of `graph` with chromatic number `k`, built from a signature
/// `sigma_h` of the induced subgraph on `subset` that has chromatic number
/// `k` and a proper `k`-colouring `phi` of it. Edges inside the subset keep
/// their sign, edges outside it become negative, and an edge leaving the
/// subset is negative exactly when its inner end has colour 1. Colouring
/// every outside vertex 1 then extends `phi`.
///
/// `sigma_h` and `phi` use the indexing of [`Graph::induced_subgraph`].
pub fn lift_signature(
    graph: &Graph,
    subset: &[usize],
    sigma_h: &Signature,
    phi: &Coloring,
    k: usize,
    model: Model,
) -> Result<Signature, ConstructionError> {
    let min = min_lift_value(model);
    if k < min {
        return Err(ConstructionError::PaletteTooSmall { k, min });
    }
    let (sub, map, origin) = graph.induced_subgraph(subset)?;
    let h = SignedGraph::new(sub, sigma_h.clone())?;
    if !validate_coloring(&h, &Palette::new(model, k)?, phi)? {
        return Err(ConstructionError::InvalidColoring);
    }
    let found = chromatic_number(&h, model);
    if found != k {
        return Err(ConstructionError::WrongChromaticNumber { expected: k, found });
    }
    let mut inner_edge = vec![None; graph.edge_count()];
    for (i, &e) in origin.iter().enumerate() {
        inner_edge[e] = Some(i);
    }
    let signs = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| match (inner_edge[e], map.sub_of(a), map.sub_of(b)) {
            (Some(i), _, _) => sigma_h.get(i),
            (None, None, None) => Sign::Negative,
            (None, Some(x), None) | (None, None, Some(x)) => {
                if phi.get(x) == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            }
            (None, Some(_), Some(_)) => unreachable!("edge between subset vertices is induced"),
        })
        .collect();
    Ok(Signature::new(signs))
}

/// Intermediate objects of one reachability step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityStep {
    /// Vertex set of the induced `k`-critical subgraph.
    pub critical: Vec<usize>,
    /// Vertex removed from it (original index).
    pub removed: usize,
    pub phi: Coloring,
    /// Signature of the whole graph with chromatic number `k - 1`.
    pub signature: Signature,
}

/// From a signed graph with chromatic number `k` (at least 4 in the cyclic
/// model, 3 in the symmetric one), produce a signature of the same
/// underlying graph with chromatic number `k - 1`: extract an induced
/// `k`-critical subgraph, drop its smallest vertex, colour the rest with
/// `k - 1` colours and lift.
pub fn reachability_step(sg: &SignedGraph, model: Model) -> Result<ReachabilityStep, ConstructionError> {
    let k = chromatic_number(sg, model);
    let min = min_lift_value(model) + 1;
    if k < min {
        return Err(ConstructionError::PaletteTooSmall { k, min });
    }
    let critical = extract_critical_subgraph(sg, k, model)?;
    let removed = critical[0];
    let rest: Vec<usize> = critical[1..].to_vec();
    let (h, _) = sg.induced(&rest)?;
    let found = chromatic_number(&h, model);
    if found != k - 1 {
        return Err(ConstructionError::WrongChromaticNumber { expected: k - 1, found });
    }
    let phi = find_coloring(&h, &Palette::new(model, k - 1)?).expect("chromatic number was just computed");
    let signature = lift_signature(sg.graph(), &rest, h.signature(), &phi, k - 1, model)?;
    Ok(ReachabilityStep { critical, removed, phi, signature })
}
