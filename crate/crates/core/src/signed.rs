//! Signatures, switching, balance and switching-class canonical forms.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignedGraphError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("signature has {found} signs but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("circuit needs at least 3 vertices, got {0}")]
    CircuitTooShort(usize),
    #[error("no edge between consecutive circuit vertices {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("bad sign character {0:?}")]
    BadSign(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Edge-indexed signs. The negative edge set is the set of indices holding
/// [`Sign::Negative`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<Sign>);

impl Signature {
    pub fn new(signs: Vec<Sign>) -> Self {
        Signature(signs)
    }

    pub fn all_positive(edge_count: usize) -> Self {
        Signature(vec![Sign::Positive; edge_count])
    }

    pub fn all_negative(edge_count: usize) -> Self {
        Signature(vec![Sign::Negative; edge_count])
    }

    /// Negative exactly on the given edge indices.
    pub fn with_negative_edges(edge_count: usize, negative: &[usize]) -> Self {
        let mut signs = vec![Sign::Positive; edge_count];
        for &e in negative {
            signs[e] = Sign::Negative;
        }
        Signature(signs)
    }

    /// Bit `e` of `mask` set means edge `e` is negative.
    pub fn from_mask(edge_count: usize, mask: u64) -> Self {
        Signature((0..edge_count).map(|e| if mask >> e & 1 == 1 { Sign::Negative } else { Sign::Positive }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, e: usize) -> Sign {
        self.0[e]
    }

    pub fn negative_edges(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, s)| s.is_negative()).map(|(e, _)| e).collect()
    }

    pub fn negated(&self) -> Signature {
        Signature(self.0.iter().map(|&s| -s).collect())
    }

    /// Edgewise product; both signatures must have the same length.
    pub fn product(&self, other: &Signature) -> Signature {
        Signature(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for Signature {
    type Err = SignedGraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Positive),
                '-' => Ok(Sign::Negative),
                other => Err(SignedGraphError::BadSign(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Signature)
    }
}

/// Evidence for the outcome of a balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceWitness {
    /// Switching at these vertices makes every edge positive.
    SwitchingSet(Vec<usize>),
    /// Vertex sequence of a circuit with an odd number of negative edges.
    UnbalancedCircuit(Vec<usize>),
}

impl BalanceWitness {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceWitness::SwitchingSet(_))
    }

    pub fn vertices(&self) -> &[usize] {
        match self {
            BalanceWitness::SwitchingSet(v) | BalanceWitness::UnbalancedCircuit(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Graph,
    signature: Signature,
}

impl SignedGraph {
    pub fn new(graph: Graph, signature: Signature) -> Result<Self, SignedGraphError> {
        if signature.len() != graph.edge_count() {
            return Err(SignedGraphError::LengthMismatch { expected: graph.edge_count(), found: signature.len() });
        }
        Ok(SignedGraph { graph, signature })
    }

    pub fn all_positive(graph: Graph) -> Self {
        let signature = Signature::all_positive(graph.edge_count());
        SignedGraph { graph, signature }
    }

    pub fn all_negative(graph: Graph) -> Self {
        let signature = Signature::all_negative(graph.edge_count());
        SignedGraph { graph, signature }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.signature.get(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn into_parts(self) -> (Graph, Signature) {
        (self.graph, self.signature)
    }

    /// Switch at every vertex of `set`. Repeated entries count once.
    pub fn switch(&self, set: &[usize]) -> Result<SignedGraph, SignedGraphError> {
        let mut in_set = vec![false; self.vertex_count()];
        for &v in set {
            self.graph.check_vertex(v)?;
            in_set[v] = true;
        }
        let signs = self
            .graph
            .edges()
            .iter()
            .zip(self.signature.signs())
            .map(|(&(u, v), &s)| if in_set[u] != in_set[v] { -s } else { s })
            .collect();
        Ok(SignedGraph { graph: self.graph.clone(), signature: Signature(signs) })
    }

    /// Product of the signs along a circuit given as a vertex sequence
    /// (without repeating the first vertex at the end).
    pub fn circuit_sign(&self, circuit: &[usize]) -> Result<Sign, SignedGraphError> {
        if circuit.len() < 3 {
            return Err(SignedGraphError::CircuitTooShort(circuit.len()));
        }
        let mut seen = vec![false; self.vertex_count()];
        for &v in circuit {
            self.graph.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::RepeatedVertex(v).into());
            }
        }
        let mut sign = Sign::Positive;
        for (i, &u) in circuit.iter().enumerate() {
            let v = circuit[(i + 1) % circuit.len()];
            let e = self.graph.edge_between(u, v).ok_or(SignedGraphError::MissingEdge(u, v))?;
            sign = sign * self.signature.get(e);
        }
        Ok(sign)
    }

    /// Two-marking traversal over the breadth-first forest. Each vertex gets a
    /// mark such that marks of tree-edge endpoints multiply to the edge sign;
    /// any non-tree edge violating that rule closes an unbalanced circuit.
    pub fn balance(&self) -> BalanceWitness {
        let forest = self.graph.spanning_forest();
        let n = self.vertex_count();
        let mut mark = vec![Sign::Positive; n];
        for &v in &forest.order {
            if let Some((p, e)) = forest.parent[v] {
                mark[v] = mark[p] * self.signature.get(e);
            }
        }
        for e in forest.cotree_edges() {
            let (u, v) = self.graph.edge(e);
            if mark[u] * mark[v] != self.signature.get(e) {
                return BalanceWitness::UnbalancedCircuit(tree_circuit(&forest.parent, u, v));
            }
        }
        BalanceWitness::SwitchingSet((0..n).filter(|&v| mark[v].is_negative()).collect())
    }

    pub fn is_balanced(&self) -> bool {
        self.balance().is_balanced()
    }

    pub fn is_antibalanced(&self) -> bool {
        SignedGraph { graph: self.graph.clone(), signature: self.signature.negated() }.is_balanced()
    }

    /// Equivalent signed graph whose breadth-first spanning forest edges are
    /// all positive, together with the switching set that produced it.
    pub fn canonical_form(&self) -> (SignedGraph, Vec<usize>) {
        let forest = self.graph.spanning_forest();
        let mut mark = vec![Sign::Positive; self.vertex_count()];
        for &v in &forest.order {
            if let Some((p, e)) = forest.parent[v] {
                mark[v] = mark[p] * self.signature.get(e);
            }
        }
        let set: Vec<usize> = (0..self.vertex_count()).filter(|&v| mark[v].is_negative()).collect();
        (self.switch(&set).expect("marks are in range"), set)
    }

    /// Remove `u`; remaining vertices keep their relative order.
    pub fn delete_vertex(&self, u: usize) -> Result<(SignedGraph, VertexMap), SignedGraphError> {
        self.graph.check_vertex(u)?;
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&v| v != u).collect();
        self.induced(&keep)
    }

    /// Induced signed subgraph on `vertices`, signs restricted.
    pub fn induced(&self, vertices: &[usize]) -> Result<(SignedGraph, VertexMap), SignedGraphError> {
        let (graph, map, origin) = self.graph.induced_subgraph(vertices)?;
        let signature = Signature(origin.iter().map(|&e| self.signature.get(e)).collect());
        Ok((SignedGraph { graph, signature }, map))
    }
}

/// Circuit through the non-tree edge `u-v`: tree path from `u` up to the
/// lowest common ancestor, then down to `v`.
fn tree_circuit(parent: &[Option<(usize, usize)>], u: usize, v: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while let Some((p, _)) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let up_u = ancestors(u);
    let up_v = ancestors(v);
    let on_v: std::collections::HashSet<usize> = up_v.iter().copied().collect();
    let lca_pos_u = up_u.iter().position(|x| on_v.contains(x)).expect("same component");
    let lca = up_u[lca_pos_u];
    let lca_pos_v = up_v.iter().position(|&x| x == lca).unwrap();
    let mut circuit: Vec<usize> = up_u[..=lca_pos_u].to_vec();
    circuit.extend(up_v[..lca_pos_v].iter().rev());
    circuit
}

/// Whether two signatures of `graph` lie in the same switching class, i.e.
/// their edgewise product is balanced.
pub fn are_equivalent(graph: &Graph, a: &Signature, b: &Signature) -> Result<bool, SignedGraphError> {
    for s in [a, b] {
        if s.len() != graph.edge_count() {
            return Err(SignedGraphError::LengthMismatch { expected: graph.edge_count(), found: s.len() });
        }
    }
    Ok(SignedGraph { graph: graph.clone(), signature: a.product(b) }.is_balanced())
}
