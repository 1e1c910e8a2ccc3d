//! Colourings of signed graphs under the two palette models.
//!
//! * **Cyclic**: colours are residues of `Z_k`; negation is the additive
//!   inverse mod `k`.
//! * **Symmetric**: colours are the integers `{0, ±1, …, ±j}` when the palette
//!   size is `2j + 1`, and `{±1, …, ±j}` when it is `2j`; negation is the sign
//!   flip.
//!
//! In both models a colouring `c` is proper when `c(v) != σ(e)·c(w)` for every
//! edge `e = vw`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::signed::{Sign, SignedGraph};

pub type Color = i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette size must be between 1 and {max}, got {size}")]
    PaletteSize { size: usize, max: usize },
    #[error("colouring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has colour {color}, which is not in the palette")]
    ColorOutsidePalette { vertex: usize, color: Color },
    #[error("exhaustive oracle is limited to {limit} vertices, got {found}")]
    OracleTooLarge { limit: usize, found: usize },
    #[error("unknown colouring model {0:?}")]
    UnknownModel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Cyclic,
    Symmetric,
}

impl Model {
    pub const ALL: [Model; 2] = [Model::Cyclic, Model::Symmetric];

    pub fn name(self) -> &'static str {
        match self {
            Model::Cyclic => "cyclic",
            Model::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cyclic" => Ok(Model::Cyclic),
            "symmetric" => Ok(Model::Symmetric),
            other => Err(ColoringError::UnknownModel(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Palette {
    model: Model,
    size: usize,
}

impl Palette {
    /// Colour sets are handled as 128-bit masks by the solver.
    pub const MAX_SIZE: usize = 128;

    pub fn new(model: Model, size: usize) -> Result<Self, ColoringError> {
        if size == 0 || size > Self::MAX_SIZE {
            return Err(ColoringError::PaletteSize { size, max: Self::MAX_SIZE });
        }
        Ok(Palette { model, size })
    }

    pub fn cyclic(k: usize) -> Result<Self, ColoringError> {
        Self::new(Model::Cyclic, k)
    }

    pub fn symmetric(n: usize) -> Result<Self, ColoringError> {
        Self::new(Model::Symmetric, n)
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The `i`-th colour in iteration order: `0, 1, …, k-1` for cyclic
    /// palettes; `0` (odd sizes only), `+1, -1, +2, -2, …` for symmetric ones.
    pub fn color_at(&self, i: usize) -> Color {
        match self.model {
            Model::Cyclic => i as Color,
            Model::Symmetric => {
                let j = if self.size % 2 == 1 { i as Color } else { i as Color + 1 };
                if j == 0 {
                    0
                } else if j % 2 == 1 {
                    (j + 1) / 2
                } else {
                    -(j / 2)
                }
            }
        }
    }

    pub fn index_of(&self, c: Color) -> Option<usize> {
        if !self.contains(c) {
            return None;
        }
        match self.model {
            Model::Cyclic => Some(c as usize),
            Model::Symmetric => {
                let j = if c == 0 {
                    0
                } else if c > 0 {
                    2 * c - 1
                } else {
                    -2 * c
                } as usize;
                Some(if self.size % 2 == 1 { j } else { j - 1 })
            }
        }
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        (0..self.size).map(|i| self.color_at(i))
    }

    pub fn contains(&self, c: Color) -> bool {
        match self.model {
            Model::Cyclic => (0..self.size as Color).contains(&c),
            Model::Symmetric => {
                let half = (self.size / 2) as Color;
                (c != 0 || self.size % 2 == 1) && c.abs() <= half
            }
        }
    }

    pub fn negate(&self, c: Color) -> Color {
        match self.model {
            Model::Cyclic => (self.size as Color - c) % self.size as Color,
            Model::Symmetric => -c,
        }
    }

    /// `σ·c` in this palette.
    pub fn signed(&self, sign: Sign, c: Color) -> Color {
        match sign {
            Sign::Positive => c,
            Sign::Negative => self.negate(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn get(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Color> {
        self.0
    }
}

pub fn validate_coloring(sg: &SignedGraph, palette: &Palette, coloring: &Coloring) -> Result<bool, ColoringError> {
    if coloring.len() != sg.vertex_count() {
        return Err(ColoringError::LengthMismatch { expected: sg.vertex_count(), found: coloring.len() });
    }
    if let Some((vertex, &color)) = coloring.0.iter().enumerate().find(|(_, &c)| !palette.contains(c)) {
        return Err(ColoringError::ColorOutsidePalette { vertex, color });
    }
    Ok(sg
        .graph()
        .edges()
        .iter()
        .zip(sg.signature().signs())
        .all(|(&(v, w), &s)| coloring.get(v) != palette.signed(s, coloring.get(w))))
}

/// Depth-first search with forward checking. Vertices are taken in
/// descending degree order (ties by index) and colours in palette order, so
/// the result is deterministic.
pub fn find_coloring(sg: &SignedGraph, palette: &Palette) -> Option<Coloring> {
    Solver::new(sg, palette).solve()
}

pub fn is_colorable(sg: &SignedGraph, palette: &Palette) -> bool {
    find_coloring(sg, palette).is_some()
}

struct Solver<'a> {
    palette: &'a Palette,
    order: Vec<usize>,
    /// For each position in `order`: later-ordered neighbours and whether the
    /// connecting edge is negative.
    forward: Vec<Vec<(usize, bool)>>,
    negation: Vec<u32>,
    n: usize,
}

impl<'a> Solver<'a> {
    fn new(sg: &SignedGraph, palette: &'a Palette) -> Self {
        let g = sg.graph();
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let forward = order
            .iter()
            .map(|&v| {
                g.incident_edges(v)
                    .iter()
                    .map(|&e| (position[g.other_end(e, v)], sg.sign(e).is_negative()))
                    .filter(|&(p, _)| p > position[v])
                    .collect()
            })
            .collect();
        let negation = (0..palette.size())
            .map(|i| palette.index_of(palette.negate(palette.color_at(i))).unwrap() as u32)
            .collect();
        Solver { palette, order, forward, negation, n }
    }

    fn solve(&self) -> Option<Coloring> {
        let n = self.n;
        if n == 0 {
            return Some(Coloring(Vec::new()));
        }
        let full: u128 = if self.palette.size() == 128 { u128::MAX } else { (1u128 << self.palette.size()) - 1 };
        // domains[d * n + p]: candidate colours of the vertex at position p
        // while positions < d are assigned.
        let mut domains = vec![full; (n + 1) * n];
        let mut chosen = vec![0u32; n];
        // remaining untried colours at each depth
        let mut untried = vec![0u128; n];
        untried[0] = full;
        let mut depth = 0usize;
        loop {
            if untried[depth] == 0 {
                if depth == 0 {
                    return None;
                }
                depth -= 1;
                continue;
            }
            let c = untried[depth].trailing_zeros();
            untried[depth] &= !(1u128 << c);
            let (head, tail) = domains.split_at_mut((depth + 1) * n);
            let current = &head[depth * n..];
            let next = &mut tail[..n];
            next.copy_from_slice(current);
            let mut ok = true;
            for &(p, negative) in &self.forward[depth] {
                let banned = if negative { self.negation[c as usize] } else { c };
                next[p] &= !(1u128 << banned);
                if next[p] == 0 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            chosen[depth] = c;
            if depth + 1 == n {
                let mut colors = vec![0; n];
                for (i, &v) in self.order.iter().enumerate() {
                    colors[v] = self.palette.color_at(chosen[i] as usize);
                }
                return Some(Coloring(colors));
            }
            depth += 1;
            untried[depth] = domains[depth * n + depth];
        }
    }
}

/// Smallest palette size admitting a proper colouring; 0 for the empty graph.
///
/// A proper colouring of the underlying graph with colours `1..=t` is proper
/// in `Z_{2t+1}` (sums of two colours never reach `2t+1`) and in `M_{2t}`
/// (all colours positive), which bounds the search.
pub fn chromatic_number(sg: &SignedGraph, model: Model) -> usize {
    let n = sg.vertex_count();
    if n == 0 {
        return 0;
    }
    let t = sg.graph().greedy_coloring().into_iter().max().map_or(0, |c| c + 1);
    let bound = match model {
        Model::Cyclic => 2 * t + 1,
        Model::Symmetric => (2 * t).max(1),
    };
    (1..=bound)
        .find(|&k| is_colorable(sg, &Palette::new(model, k).expect("bound within palette limit")))
        .expect("a proper underlying colouring always lifts within the bound")
}

/// Whether the chromatic number is at least `k`, decided with a single
/// solver call. Colourability is monotone in the palette size in both
/// models, so this is equivalent to the absence of a `(k-1)`-colouring.
pub fn chromatic_number_at_least(sg: &SignedGraph, model: Model, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if sg.vertex_count() == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    !is_colorable(sg, &Palette::new(model, k - 1).expect("palette size in range"))
}

pub const ORACLE_MAX_VERTICES: usize = 8;

/// Chromatic number by plain enumeration of every assignment, palette size
/// by palette size. Shares no code with the solver; meant for tests.
pub fn oracle_chromatic_number(sg: &SignedGraph, model: Model) -> Result<usize, ColoringError> {
    let n = sg.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(ColoringError::OracleTooLarge { limit: ORACLE_MAX_VERTICES, found: n });
    }
    if n == 0 {
        return Ok(0);
    }
    let edges: Vec<(usize, usize, i64)> =
        sg.graph().edges().iter().zip(sg.signature().signs()).map(|(&(u, v), s)| (u, v, s.value())).collect();
    for k in 1..=2 * n + 1 {
        let values: Vec<i64> = match model {
            Model::Cyclic => (0..k as i64).collect(),
            Model::Symmetric => {
                let half = (k / 2) as i64;
                (-half..=half).filter(|&x| x != 0 || k % 2 == 1).collect()
            }
        };
        let proper = |c: &[i64]| {
            edges.iter().all(|&(u, v, s)| match model {
                Model::Cyclic => (c[u] - s * c[v]).rem_euclid(k as i64) != 0,
                Model::Symmetric => c[u] != s * c[v],
            })
        };
        let mut digits = vec![0usize; n];
        loop {
            let c: Vec<i64> = digits.iter().map(|&d| values[d]).collect();
            if proper(&c) {
                return Ok(k);
            }
            let mut i = 0;
            while i < n && digits[i] + 1 == values.len() {
                digits[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            digits[i] += 1;
        }
    }
    unreachable!("2n+1 colours always suffice")
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
    fn palette_iteration_order() {
        assert_eq!(Palette::cyclic(4).unwrap().colors().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(Palette::symmetric(5).unwrap().colors().collect::<Vec<_>>(), vec![0, 1, -1, 2, -2]);
        assert_eq!(Palette::symmetric(4).unwrap().colors().collect::<Vec<_>>(), vec![1, -1, 2, -2]);
        assert_eq!(Palette::symmetric(1).unwrap().colors().collect::<Vec<_>>(), vec![0]);
        for size in 1..12 {
            for model in Model::ALL {
                let p = Palette::new(model, size).unwrap();
                for (i, c) in p.colors().enumerate() {
                    assert_eq!(p.index_of(c), Some(i));
                    assert!(p.contains(p.negate(c)));
                }
            }
        }
        assert!(Palette::cyclic(0).is_err());
        assert!(Palette::cyclic(129).is_err());
    }

    #[test]
    fn validation_examples() {
        let odd = SignedGraph::all_negative(Graph::cycle(5));
        assert_eq!(validate_coloring(&odd, &Palette::cyclic(3).unwrap(), &Coloring::new(vec![1; 5])), Ok(true));

        let edge = signed(Graph::complete(2), &[0]);
        assert_eq!(validate_coloring(&edge, &Palette::cyclic(2).unwrap(), &Coloring::new(vec![0, 0])), Ok(false));

        let k3 = SignedGraph::all_negative(Graph::complete(3));
        assert_eq!(validate_coloring(&k3, &Palette::symmetric(2).unwrap(), &Coloring::new(vec![1; 3])), Ok(true));
        assert_eq!(
            validate_coloring(&k3, &Palette::symmetric(2).unwrap(), &Coloring::new(vec![1, 0, 1])),
            Err(ColoringError::ColorOutsidePalette { vertex: 1, color: 0 })
        );
        assert!(matches!(
            validate_coloring(&k3, &Palette::symmetric(2).unwrap(), &Coloring::new(vec![1])),
            Err(ColoringError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn solver_examples() {
        let edgeless = SignedGraph::all_positive(Graph::empty(4));
        assert_eq!(find_coloring(&edgeless, &Palette::symmetric(3).unwrap()), Some(Coloring::new(vec![0; 4])));
        assert_eq!(find_coloring(&edgeless, &Palette::symmetric(2).unwrap()), Some(Coloring::new(vec![1; 4])));
        assert_eq!(find_coloring(&SignedGraph::all_positive(Graph::complete(3)), &Palette::cyclic(2).unwrap()), None);
        let unbalanced_c4 = signed(Graph::cycle(4), &[0]);
        assert_eq!(find_coloring(&unbalanced_c4, &Palette::symmetric(2).unwrap()), None);
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&SignedGraph::all_positive(Graph::complete(3)), Model::Cyclic), 3);
        assert_eq!(chromatic_number(&SignedGraph::all_negative(Graph::complete(4)), Model::Cyclic), 3);
        assert_eq!(chromatic_number(&SignedGraph::all_negative(Graph::complete(3)), Model::Symmetric), 2);
        assert_eq!(chromatic_number(&SignedGraph::all_positive(Graph::empty(0)), Model::Cyclic), 0);
        assert_eq!(chromatic_number(&SignedGraph::all_positive(Graph::empty(1)), Model::Symmetric), 1);
    }

    #[test]
    fn oracle_examples() {
        let pos_edge = SignedGraph::all_positive(Graph::complete(2));
        let neg_edge = SignedGraph::all_negative(Graph::complete(2));
        assert_eq!(oracle_chromatic_number(&pos_edge, Model::Cyclic), Ok(2));
        assert_eq!(oracle_chromatic_number(&neg_edge, Model::Cyclic), Ok(2));
        assert_eq!(oracle_chromatic_number(&SignedGraph::all_positive(Graph::cycle(5)), Model::Symmetric), Ok(3));
        assert!(matches!(
            oracle_chromatic_number(&SignedGraph::all_positive(Graph::empty(9)), Model::Cyclic),
            Err(ColoringError::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn at_least_matches_chromatic_number() {
        let sg = signed(Graph::complete(5), &[0, 3, 7]);
        for model in Model::ALL {
            let k = chromatic_number(&sg, model);
            for j in 0..=k + 2 {
                assert_eq!(chromatic_number_at_least(&sg, model, j), j <= k, "{model} j={j}");
            }
        }
    }
}
