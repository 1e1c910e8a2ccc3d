//! Corpus verification: run every structural check on one underlying graph
//! and collect violations. Any violation means the implementation disagrees
//! with a known theorem about signed colourings.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{chromatic_number, find_coloring, Model, Palette};
use crate::constructions::{extend_coloring, reachability_step};
use crate::critical::{criticality_certificate, extract_critical_subgraph, is_circuit, is_critical};
use crate::graph::Graph;
use crate::signed::{are_equivalent, Signature, SignedGraph};
use crate::spectrum::{chromatic_spectrum, min_chromatic_shortcut, signature_class_representatives, SpectrumError};

/// Largest edge count for which all `2^m` signatures are partitioned by
/// brute force.
pub const BRUTE_FORCE_MAX_EDGES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Interval,
    MinimumShortcut,
    ModelGap,
    DeletionDrop,
    ColoringExtension,
    CriticalExtraction,
    ClassCount,
    Reachability,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Interval,
        Check::MinimumShortcut,
        Check::ModelGap,
        Check::DeletionDrop,
        Check::ColoringExtension,
        Check::CriticalExtraction,
        Check::ClassCount,
        Check::Reachability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Interval => "interval",
            Check::MinimumShortcut => "minimum-shortcut",
            Check::ModelGap => "model-gap",
            Check::DeletionDrop => "deletion-drop",
            Check::ColoringExtension => "coloring-extension",
            Check::CriticalExtraction => "critical-extraction",
            Check::ClassCount => "class-count",
            Check::Reachability => "reachability",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphVerification {
    pub id: String,
    pub classes: usize,
    /// Number of individual assertions evaluated per check, in [`Check::ALL`] order.
    pub evaluated: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl GraphVerification {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    evaluated: [usize; 8],
    violations: Vec<Violation>,
}

impl Tally {
    fn check(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        self.evaluated[Check::ALL.iter().position(|&c| c == check).unwrap()] += 1;
        if !ok {
            self.violations.push(Violation { check, detail: detail() });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.evaluated.iter_mut().zip(other.evaluated) {
            *a += b;
        }
        self.violations.extend(other.violations);
        self
    }
}

/// Check a single signed graph under one model: deletion drops, colouring
/// extension, critical extraction for every target, and the reachability
/// step when it applies.
fn check_signed(sg: &SignedGraph, model: Model, label: &str) -> Tally {
    let mut t = Tally::default();
    if sg.vertex_count() == 0 {
        return t;
    }
    let cert = criticality_certificate(sg, model).expect("non-empty graph");
    let k = cert.k;
    t.check(Check::DeletionDrop, cert.drops_by_at_most_one(), || {
        format!("{label} {model}: k={k}, deletions {:?}", cert.per_vertex)
    });

    for u in 0..sg.vertex_count() {
        let (rest, _) = sg.delete_vertex(u).unwrap();
        let j = cert.per_vertex[u];
        if j == 0 {
            continue;
        }
        let phi = find_coloring(&rest, &Palette::new(model, j).unwrap()).expect("chromatic number is attainable");
        let extended = extend_coloring(sg, u, &phi, j + 2, model);
        t.check(Check::ColoringExtension, extended.is_ok(), || {
            format!("{label} {model}: extending at vertex {u} from {j} colours: {extended:?}")
        });
    }

    for target in 1..=k {
        let subset = extract_critical_subgraph(sg, target, model).expect("target in range");
        let (h, _) = sg.induced(&subset).unwrap();
        let (critical, hc) = is_critical(&h, model).unwrap();
        let mut ok = critical && hc.k == target;
        if model == Model::Cyclic && target == 3 {
            ok &= is_circuit(&h) && h.vertex_count() % 2 == 1;
        }
        t.check(Check::CriticalExtraction, ok, || {
            format!("{label} {model}: target {target} gave {subset:?} with value {}", hc.k)
        });
    }

    let reachable_from = match model {
        Model::Cyclic => 4,
        Model::Symmetric => 3,
    };
    if k >= reachable_from {
        let outcome = reachability_step(sg, model)
            .map(|step| chromatic_number(&SignedGraph::new(sg.graph().clone(), step.signature).unwrap(), model));
        t.check(Check::Reachability, outcome == Ok(k - 1), || {
            format!("{label} {model}: from k={k} the pipeline gave {outcome:?}")
        });
    }
    t
}

fn brute_force_class_count(graph: &Graph, reps: &[Signature]) -> Result<(), String> {
    let m = graph.edge_count();
    let mut class_of: Vec<Option<usize>> = vec![None; 1 << m];
    let mut count = 0;
    for mask in 0..1u64 << m {
        if class_of[mask as usize].is_some() {
            continue;
        }
        let first = Signature::from_mask(m, mask);
        for other in mask..1u64 << m {
            if class_of[other as usize].is_none()
                && are_equivalent(graph, &first, &Signature::from_mask(m, other)).unwrap()
            {
                class_of[other as usize] = Some(count);
            }
        }
        count += 1;
    }
    if count != reps.len() {
        return Err(format!("{count} classes by brute force, {} representatives", reps.len()));
    }
    let mut hit = vec![false; count];
    for rep in reps {
        let mask = rep.negative_edges().iter().fold(0usize, |acc, &e| acc | 1 << e);
        let c = class_of[mask].unwrap();
        if std::mem::replace(&mut hit[c], true) {
            return Err(format!("two representatives in class {c}"));
        }
    }
    Ok(())
}

/// Run every check on `graph`. Classes are processed on the current rayon
/// pool; the result does not depend on scheduling order.
pub fn verify_graph(graph: &Graph, id: &str, max_cotree: usize) -> Result<GraphVerification, SpectrumError> {
    let reps = signature_class_representatives(graph, max_cotree)?;
    let mut t = Tally::default();

    if graph.vertex_count() > 0 {
        let mut per_model = Vec::new();
        for model in Model::ALL {
            let report = chromatic_spectrum(graph, id, model, max_cotree)?;
            t.check(Check::Interval, report.interval_ok, || format!("{id} {model}: spectrum {:?}", report.spectrum));
            let shortcut = min_chromatic_shortcut(graph, model)?;
            t.check(Check::MinimumShortcut, shortcut == report.m, || {
                format!("{id} {model}: shortcut {shortcut}, enumerated {}", report.m)
            });
            per_model.push(report);
        }
        for (cyc, sym) in per_model[0].classes.iter().zip(&per_model[1].classes) {
            t.check(Check::ModelGap, cyc.chi.abs_diff(sym.chi) <= 1, || {
                format!("{id} {}: cyclic {} vs symmetric {}", cyc.signature, cyc.chi, sym.chi)
            });
        }
    }

    if graph.edge_count() <= BRUTE_FORCE_MAX_EDGES {
        let outcome = brute_force_class_count(graph, &reps);
        t.check(Check::ClassCount, outcome.is_ok(), || format!("{id}: {}", outcome.unwrap_err()));
    }

    let per_class = reps
        .par_iter()
        .map(|signature| {
            let sg = SignedGraph::new(graph.clone(), signature.clone()).unwrap();
            let label = format!("{id}[{signature}]");
            Model::ALL.iter().map(|&m| check_signed(&sg, m, &label)).fold(Tally::default(), Tally::merge)
        })
        .collect::<Vec<_>>();
    let t = per_class.into_iter().fold(t, Tally::merge);

    Ok(GraphVerification {
        id: id.to_string(),
        classes: reps.len(),
        evaluated: t.evaluated.to_vec(),
        violations: t.violations,
    })
}
