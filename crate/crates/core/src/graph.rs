//! Simple finite undirected graphs.
//!
//! Edges are stored once, as normalized pairs `(u, v)` with `u < v`, in the
//! order they were supplied. Every vertex keeps the indices of its incident
//! edges so that per-edge data (signs) can live in a single edge-indexed
//! vector.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("repeated vertex {0} in vertex list")]
    RepeatedVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

/// Translation between the vertices of a graph and one of its induced
/// subgraphs. Subgraph vertex `i` is `to_parent[i]` in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    pub to_parent: Vec<usize>,
    pub to_sub: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn parent_of(&self, sub_vertex: usize) -> usize {
        self.to_parent[sub_vertex]
    }

    pub fn sub_of(&self, parent_vertex: usize) -> Option<usize> {
        self.to_sub.get(parent_vertex).copied().flatten()
    }
}

/// Breadth-first spanning forest: one tree per component, rooted at the
/// smallest vertex of the component, neighbours visited in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    /// `parent[v] = Some((p, e))` when `v` was reached from `p` along edge `e`.
    pub parent: Vec<Option<(usize, usize)>>,
    /// Vertices in visiting order; roots precede their descendants.
    pub order: Vec<usize>,
    pub is_tree_edge: Vec<bool>,
    pub components: usize,
}

impl SpanningForest {
    /// Edges outside the forest, in ascending edge index order.
    pub fn cotree_edges(&self) -> Vec<usize> {
        self.is_tree_edge.iter().enumerate().filter(|(_, &t)| !t).map(|(e, _)| e).collect()
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        let mut incidence = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let pair = (u.min(v), u.max(v));
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge(pair.0, pair.1));
            }
            let index = normalized.len();
            normalized.push(pair);
            incidence[u].push(index);
            incidence[v].push(index);
        }
        Ok(Graph { vertex_count, edges: normalized, incidence })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: Vec::new(), incidence: vec![Vec::new(); vertex_count] }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// The circuit `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a circuit needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Indices of the edges incident to `v`, in insertion order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let (a, b) = if self.incidence[u].len() <= self.incidence[v].len() { (u, v) } else { (v, u) };
        self.incidence[a].iter().copied().find(|&e| self.other_end(e, a) == b)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }

    pub fn spanning_forest(&self) -> SpanningForest {
        let n = self.vertex_count;
        let mut parent = vec![None; n];
        let mut visited = vec![false; n];
        let mut is_tree_edge = vec![false; self.edges.len()];
        let mut order = Vec::with_capacity(n);
        let mut components = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if visited[root] {
                continue;
            }
            components += 1;
            visited[root] = true;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                let mut next: Vec<(usize, usize)> =
                    self.incidence[v].iter().map(|&e| (self.other_end(e, v), e)).collect();
                next.sort_unstable();
                for (w, e) in next {
                    if !visited[w] {
                        visited[w] = true;
                        parent[w] = Some((v, e));
                        is_tree_edge[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest { parent, order, is_tree_edge, components }
    }

    pub fn component_count(&self) -> usize {
        self.spanning_forest().components
    }

    /// Dimension of the cycle space, `m - n + c`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count];
        let mut stack = Vec::new();
        for root in 0..self.vertex_count {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            stack.push(root);
            while let Some(v) = stack.pop() {
                let s = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            stack.push(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Induced subgraph on `vertices` (any order, no repeats). Subgraph
    /// vertices follow ascending parent index; subgraph edges follow
    /// ascending parent edge index. Also returns the parent index of every
    /// subgraph edge.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, VertexMap, Vec<usize>), GraphError> {
        let mut to_sub = vec![None; self.vertex_count];
        let mut kept: Vec<usize> = Vec::with_capacity(vertices.len());
        for &v in vertices {
            self.check_vertex(v)?;
            if to_sub[v].is_some() {
                return Err(GraphError::RepeatedVertex(v));
            }
            to_sub[v] = Some(usize::MAX);
            kept.push(v);
        }
        kept.sort_unstable();
        for (i, &v) in kept.iter().enumerate() {
            to_sub[v] = Some(i);
        }
        let mut edge_origin = Vec::new();
        let mut sub_edges = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if let (Some(a), Some(b)) = (to_sub[u], to_sub[v]) {
                edge_origin.push(e);
                sub_edges.push((a, b));
            }
        }
        let graph = Graph::new(kept.len(), sub_edges).expect("induced subgraph of a simple graph is simple");
        Ok((graph, VertexMap { to_parent: kept, to_sub }, edge_origin))
    }

    /// Proper colouring by first fit in index order; returns colours `0..t`.
    pub fn greedy_coloring(&self) -> Vec<usize> {
        let mut color = vec![usize::MAX; self.vertex_count];
        for v in 0..self.vertex_count {
            let used: HashSet<usize> = self.neighbors(v).map(|w| color[w]).collect();
            color[v] = (0..).find(|c| !used.contains(c)).unwrap();
        }
        color
    }

    /// Relabel vertex `v` as `perm[v]`. Edge order is preserved.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        Graph::new(self.vertex_count, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}
