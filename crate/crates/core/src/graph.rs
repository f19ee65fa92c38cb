//! Prime ideal graphs and complete split graphs `K_a ∨ K̄_b`.
//!
//! Vertices are always ordered clique part first, then the independent part,
//! each ascending. Vertex `i < a` carries variable `x_{i+1}` and vertex
//! `a + t` carries `y_{t+1}` in every downstream ideal.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::ring::{verify_prime, PrimeIdeal, RingElement, RingError, RingSpec};

/// Largest vertex count accepted by [`SplitGraph::minimal_vertex_covers_bruteforce`].
pub const DEFAULT_VERTEX_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("split structure violated: {0}")]
    NotSplit(String),
    #[error("the independent part must be nonempty")]
    EmptyIndependentPart,
    #[error("{count} vertices exceed the brute-force cap of {cap}")]
    TooManyVertices { count: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Element(RingElement),
    /// `u_i` of an abstract graph, 1-based.
    Clique(usize),
    /// `v_t` of an abstract graph, 1-based.
    Independent(usize),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Element(x) => write!(f, "{x}"),
            VertexLabel::Clique(i) => write!(f, "u{i}"),
            VertexLabel::Independent(t) => write!(f, "v{t}"),
        }
    }
}

/// A graph whose vertices `0..a` form a clique, `a..a+b` an independent set,
/// with every clique vertex joined to every independent vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    vertices: Vec<VertexLabel>,
    edges: BTreeSet<(usize, usize)>,
    a: usize,
    b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexCover {
    pub members: BTreeSet<usize>,
}

impl VertexCover {
    pub fn covers(&self, g: &SplitGraph) -> bool {
        g.edges
            .iter()
            .all(|(u, v)| self.members.contains(u) || self.members.contains(v))
    }

    pub fn is_minimal(&self, g: &SplitGraph) -> bool {
        self.covers(g)
            && self.members.iter().all(|&drop| {
                let smaller = VertexCover {
                    members: self
                        .members
                        .iter()
                        .copied()
                        .filter(|&v| v != drop)
                        .collect(),
                };
                !smaller.covers(g)
            })
    }
}

impl SplitGraph {
    /// `Γ_P(R)`: vertices `R∖{0}`, `x ~ y` iff `x ≠ y` and `xy ∈ P`.
    ///
    /// The partition is read off the ideal, then checked against the
    /// adjacency computed from ring products; a mismatch is an error.
    pub fn from_prime(ring: &RingSpec, prime: &PrimeIdeal) -> Result<SplitGraph, GraphError> {
        if prime.ring() != ring {
            return Err(RingError::RingMismatch {
                expected: ring.to_string(),
                found: prime.ring().to_string(),
            }
            .into());
        }
        if !verify_prime(ring, prime.members()) {
            return Err(GraphError::NotSplit(
                "ideal failed the primality check".into(),
            ));
        }
        let (part_a, part_b): (Vec<_>, Vec<_>) = ring
            .elements()
            .filter(|x| !x.is_zero())
            .partition(|x| prime.contains(x));
        let (a, b) = (part_a.len(), part_b.len());
        let vertices: Vec<VertexLabel> = part_a
            .into_iter()
            .chain(part_b)
            .map(VertexLabel::Element)
            .collect();

        let mut edges = BTreeSet::new();
        for (i, x) in vertices.iter().enumerate() {
            for (j, y) in vertices.iter().enumerate().skip(i + 1) {
                let (VertexLabel::Element(x), VertexLabel::Element(y)) = (x, y) else {
                    unreachable!("ring graphs only carry element labels")
                };
                if prime.contains(&ring.mul(x, y)?) {
                    edges.insert((i, j));
                }
            }
        }
        let g = SplitGraph {
            vertices,
            edges,
            a,
            b,
        };
        g.verify_split()?;
        Ok(g)
    }

    /// The synthetic `K_a ∨ K̄_b` with labels `u_1..u_a, v_1..v_b`.
    pub fn abstract_split(a: usize, b: usize) -> Result<SplitGraph, GraphError> {
        if b == 0 {
            return Err(GraphError::EmptyIndependentPart);
        }
        let vertices = (1..=a)
            .map(VertexLabel::Clique)
            .chain((1..=b).map(VertexLabel::Independent))
            .collect();
        let mut edges = BTreeSet::new();
        for i in 0..a {
            for j in i + 1..a + b {
                edges.insert((i, j));
            }
        }
        Ok(SplitGraph {
            vertices,
            edges,
            a,
            b,
        })
    }

    /// Re-derives the split structure from the edge set.
    pub fn verify_split(&self) -> Result<(), GraphError> {
        if self.b == 0 {
            return Err(GraphError::EmptyIndependentPart);
        }
        let n = self.vertices.len();
        if n != self.a + self.b {
            return Err(GraphError::NotSplit(
                "partition does not cover the vertex set".into(),
            ));
        }
        for i in 0..n {
            for j in i + 1..n {
                let expected = i < self.a;
                if self.is_adjacent(i, j) != expected {
                    let what = match (i < self.a, j < self.a) {
                        (true, true) => "clique pair not adjacent",
                        (true, false) => "clique-independent pair not adjacent",
                        _ => "independent pair adjacent",
                    };
                    return Err(GraphError::NotSplit(format!(
                        "{what}: {} and {}",
                        self.vertices[i], self.vertices[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    /// Edges as index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn part_a(&self) -> Range<usize> {
        0..self.a
    }

    pub fn part_b(&self) -> Range<usize> {
        self.a..self.a + self.b
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Some pair of distinct non-adjacent vertices, if the graph is not complete.
    pub fn non_adjacent_pair(&self) -> Option<(usize, usize)> {
        let n = self.vertices.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.is_adjacent(i, j))
    }

    /// `ω = a + 1` when `a ≥ 1`; an edgeless graph has `ω = 1`.
    pub fn clique_number(&self) -> usize {
        self.a + 1
    }

    /// The covers `A` and `(A ∖ {u_i}) ∪ B` for each `i`.
    ///
    /// For `a = 0` the graph is edgeless; this returns an empty list rather
    /// than the trivial empty cover.
    pub fn minimal_vertex_covers_closed_form(&self) -> Vec<VertexCover> {
        if self.a == 0 {
            return Vec::new();
        }
        let mut covers = vec![VertexCover {
            members: self.part_a().collect(),
        }];
        for i in self.part_a() {
            let members = self
                .part_a()
                .filter(|&j| j != i)
                .chain(self.part_b())
                .collect();
            covers.push(VertexCover { members });
        }
        covers
    }

    pub fn minimal_vertex_covers_bruteforce(&self) -> Result<Vec<VertexCover>, GraphError> {
        self.minimal_vertex_covers_bruteforce_with_cap(DEFAULT_VERTEX_CAP)
    }

    /// Every inclusion-minimal vertex cover, by exhaustive search over subsets.
    pub fn minimal_vertex_covers_bruteforce_with_cap(
        &self,
        cap: usize,
    ) -> Result<Vec<VertexCover>, GraphError> {
        let n = self.vertices.len();
        if n > cap || n >= 64 {
            return Err(GraphError::TooManyVertices { count: n, cap });
        }
        let edge_masks: Vec<u64> = self
            .edges
            .iter()
            .map(|&(i, j)| (1 << i) | (1 << j))
            .collect();
        let covers = |mask: u64| edge_masks.iter().all(|&e| e & mask != 0);
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            if !covers(mask) {
                continue;
            }
            let minimal = (0..n)
                .filter(|&v| mask & (1 << v) != 0)
                .all(|v| !covers(mask & !(1 << v)));
            if minimal {
                out.push(VertexCover {
                    members: (0..n).filter(|&v| mask & (1 << v) != 0).collect(),
                });
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn label_set(&self, cover: &VertexCover) -> Vec<String> {
        cover
            .members
            .iter()
            .map(|&v| self.vertices[v].to_string())
            .collect()
    }

    /// One line per vertex: `label: neighbour neighbour ...`.
    pub fn adjacency_list(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&v.to_string());
            out.push(':');
            for j in 0..self.vertices.len() {
                if i != j && self.is_adjacent(i, j) {
                    out.push(' ');
                    out.push_str(&self.vertices[j].to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn export(&self) -> GraphExport {
        let name = |i: usize| self.vertices[i].to_string();
        GraphExport {
            vertices: self.vertices.iter().map(ToString::to_string).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| (name(i), name(j)))
                .collect(),
            part_a: self.part_a().map(name).collect(),
            part_b: self.part_b().map(name).collect(),
            a: self.a,
            b: self.b,
        }
    }
}

/// JSON shape of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphExport {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(rename = "part_A")]
    pub part_a: Vec<String>,
    #[serde(rename = "part_B")]
    pub part_b: Vec<String>,
    pub a: usize,
    pub b: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::prime_ideals;

    fn ring_graph(n: u64, gen: u64) -> SplitGraph {
        let ring = RingSpec::cyclic(n).unwrap();
        let p = PrimeIdeal::generated_by(&ring, &ring.element(vec![gen]).unwrap()).unwrap();
        SplitGraph::from_prime(&ring, &p).unwrap()
    }

    fn labels(g: &SplitGraph, r: Range<usize>) -> Vec<String> {
        r.map(|i| g.vertices()[i].to_string()).collect()
    }

    fn cover_labels(g: &SplitGraph, covers: &[VertexCover]) -> BTreeSet<Vec<String>> {
        covers.iter().map(|c| g.label_set(c)).collect()
    }

    #[test]
    fn z6_star() {
        let g = ring_graph(6, 3);
        assert_eq!((g.a(), g.b()), (1, 4));
        assert_eq!(labels(&g, g.part_a()), ["3"]);
        assert_eq!(labels(&g, g.part_b()), ["1", "2", "4", "5"]);
        assert_eq!(g.edges().len(), 4);
        assert!(g.part_b().all(|j| g.is_adjacent(0, j)));
        assert_eq!(g.clique_number(), 2);
    }

    #[test]
    fn z8_join() {
        let g = ring_graph(8, 2);
        assert_eq!((g.a(), g.b()), (3, 4));
        assert_eq!(labels(&g, g.part_a()), ["2", "4", "6"]);
        assert_eq!(labels(&g, g.part_b()), ["1", "3", "5", "7"]);
        assert_eq!(g.edges().len(), 15);
        assert_eq!(g.clique_number(), 4);
        assert!(g.non_adjacent_pair().is_some());
    }

    #[test]
    fn z4_star() {
        let g = ring_graph(4, 2);
        assert_eq!(labels(&g, g.part_a()), ["2"]);
        assert_eq!(labels(&g, g.part_b()), ["1", "3"]);
        assert_eq!(g.edges().len(), 2);
    }

    #[test]
    fn field_gives_edgeless_graph() {
        let ring = RingSpec::cyclic(5).unwrap();
        let p = &prime_ideals(&ring).unwrap()[0];
        let g = SplitGraph::from_prime(&ring, p).unwrap();
        assert_eq!((g.a(), g.b()), (0, 4));
        assert!(g.edges().is_empty());
        assert_eq!(g.clique_number(), 1);
        assert!(g.minimal_vertex_covers_closed_form().is_empty());
    }

    #[test]
    fn foreign_ideal_rejected() {
        let z6 = RingSpec::cyclic(6).unwrap();
        let z8 = RingSpec::cyclic(8).unwrap();
        let p = &prime_ideals(&z8).unwrap()[0];
        assert!(matches!(
            SplitGraph::from_prime(&z6, p),
            Err(GraphError::Ring(RingError::RingMismatch { .. }))
        ));
    }

    #[test]
    fn abstract_graphs() {
        let g = SplitGraph::abstract_split(3, 4).unwrap();
        assert_eq!(g.edges().len(), ring_graph(8, 2).edges().len());
        assert_eq!(g.edges(), ring_graph(8, 2).edges());

        let g = SplitGraph::abstract_split(0, 5).unwrap();
        assert!(g.edges().is_empty());
        assert_eq!(g.vertices().len(), 5);

        let g = SplitGraph::abstract_split(2, 1).unwrap();
        assert_eq!(g.edges().len(), 3);
        assert!(g.non_adjacent_pair().is_none());

        assert_eq!(
            SplitGraph::abstract_split(2, 0),
            Err(GraphError::EmptyIndependentPart)
        );
    }

    #[test]
    fn verify_split_catches_tampering() {
        let mut g = SplitGraph::abstract_split(2, 2).unwrap();
        g.edges.remove(&(0, 1));
        assert!(
            matches!(g.verify_split(), Err(GraphError::NotSplit(msg)) if msg.contains("clique pair"))
        );
        let mut g = SplitGraph::abstract_split(2, 2).unwrap();
        g.edges.insert((2, 3));
        assert!(
            matches!(g.verify_split(), Err(GraphError::NotSplit(msg)) if msg.contains("independent pair"))
        );
    }

    #[test]
    fn closed_form_covers() {
        let g = ring_graph(6, 3);
        let expected: BTreeSet<Vec<String>> = [
            vec!["3".to_string()],
            ["1", "2", "4", "5"].map(String::from).to_vec(),
        ]
        .into();
        assert_eq!(
            cover_labels(&g, &g.minimal_vertex_covers_closed_form()),
            expected
        );

        let g = ring_graph(8, 2);
        let covers = g.minimal_vertex_covers_closed_form();
        assert_eq!(covers.len(), 4);
        let got = cover_labels(&g, &covers);
        for expected in [
            vec!["2", "4", "6"],
            vec!["4", "6", "1", "3", "5", "7"],
            vec!["2", "6", "1", "3", "5", "7"],
            vec!["2", "4", "1", "3", "5", "7"],
        ] {
            let expected: Vec<String> = expected.into_iter().map(String::from).collect();
            assert!(got.contains(&expected), "missing {expected:?}");
        }

        let g = SplitGraph::abstract_split(2, 2).unwrap();
        let mut sizes: Vec<_> = g
            .minimal_vertex_covers_closed_form()
            .iter()
            .map(|c| c.members.len())
            .collect();
        sizes.sort();
        assert_eq!(sizes, [2, 3, 3]);
    }

    #[test]
    fn bruteforce_covers_match_closed_form() {
        for g in [
            ring_graph(6, 3),
            ring_graph(8, 2),
            SplitGraph::abstract_split(2, 2).unwrap(),
        ] {
            let brute: BTreeSet<_> = g
                .minimal_vertex_covers_bruteforce()
                .unwrap()
                .into_iter()
                .collect();
            let closed: BTreeSet<_> = g.minimal_vertex_covers_closed_form().into_iter().collect();
            assert_eq!(brute, closed);
            assert!(closed.iter().all(|c| c.is_minimal(&g)));
        }
    }

    #[test]
    fn bruteforce_single_edge() {
        let g = SplitGraph::abstract_split(1, 1).unwrap();
        let covers = g.minimal_vertex_covers_bruteforce().unwrap();
        let got: Vec<Vec<String>> = covers.iter().map(|c| g.label_set(c)).collect();
        assert_eq!(got, [vec!["u1".to_string()], vec!["v1".to_string()]]);
    }

    #[test]
    fn bruteforce_cap() {
        let g = SplitGraph::abstract_split(10, 11).unwrap();
        assert_eq!(
            g.minimal_vertex_covers_bruteforce(),
            Err(GraphError::TooManyVertices { count: 21, cap: 20 })
        );
    }

    #[test]
    fn exports() {
        let g = ring_graph(4, 2);
        assert_eq!(g.adjacency_list(), "2: 1 3\n1: 2\n3: 2\n");
        let json = serde_json::to_string(&g.export()).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":["2","1","3"],"edges":[["2","1"],["2","3"]],"part_A":["2"],"part_B":["1","3"],"a":1,"b":2}"#
        );
    }
}
