//! Chromatic numbers and chromatic spectra of signed graphs.
//!
//! Two colouring models are supported: colours in the cyclic group `Z_k`
//! ([`Model::Cyclic`]) and colours in the symmetric integer set
//! `{0, ±1, …}` ([`Model::Symmetric`]). In both, a colouring is proper when
//! `c(v) != σ(e)·c(w)` on every edge `e = vw`. Both chromatic numbers are
//! invariant under switching, so the spectrum of a graph is computed over
//! one representative per switching class.

pub mod coloring;
pub mod constructions;
pub mod critical;
pub mod graph;
pub mod io;
pub mod signed;
pub mod spectrum;
pub mod verify;

pub use coloring::{
    chromatic_number, find_coloring, oracle_chromatic_number, validate_coloring, Color, Coloring, ColoringError, Model,
    Palette,
};
pub use constructions::{extend_coloring, lift_signature, reachability_step, ConstructionError};
pub use critical::{
    classify_small_critical, extract_critical_subgraph, is_critical, CriticalClass, CriticalError,
    CriticalityCertificate,
};
pub use graph::{Graph, GraphError, VertexMap};
pub use signed::{are_equivalent, BalanceWitness, Sign, Signature, SignedGraph, SignedGraphError};
pub use spectrum::{
    chromatic_spectrum, min_chromatic_shortcut, signature_class_representatives, SpectrumError, SpectrumReport,
};
