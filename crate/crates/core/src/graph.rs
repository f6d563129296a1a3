use std::collections::BTreeMap;

use crate::basis::{BasisSet, Label};
use crate::scalar::Real;

/// Labeled directed graph with real vertex attributes and real edge weights.
///
/// Edge presence is set membership, never inferred from the weight; a
/// zero-weight edge and an absent edge are different graphs.
#[derive(Clone, Debug)]
pub struct Graph<S> {
    vertices: BTreeMap<Label, S>,
    edges: BTreeMap<(Label, Label), S>,
    allow_loops: bool,
}

/// `allow_loops` is a validation policy, not part of the graph's value.
impl<S: PartialEq> PartialEq for Graph<S> {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

/// Invariant breach found by [`Graph::validate`] or literal conversion.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("edge ({from}, {to}) has dangling endpoint {missing}")]
    DanglingEndpoint { from: Label, to: Label, missing: Label },
    #[error("loop ({label}, {label}) present but loops are disallowed")]
    LoopForbidden { label: Label },
    #[error("duplicate vertex label {label}")]
    DuplicateVertex { label: Label },
    #[error("duplicate edge ({from}, {to})")]
    DuplicateEdge { from: Label, to: Label },
}

/// Classification of a graph against a universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphKind {
    pub is_empty: bool,
    /// All attributes and weights are zero.
    pub is_zero: bool,
    /// Vertex labels cover the whole universe.
    pub is_total: bool,
    /// Every ordered pair of distinct vertices is an edge.
    pub is_complete: bool,
    pub has_loops: bool,
}

impl<S: Real> Graph<S> {
    pub fn new(allow_loops: bool) -> Self {
        Self { vertices: BTreeMap::new(), edges: BTreeMap::new(), allow_loops }
    }

    /// The empty graph, loops permitted by policy.
    pub fn empty() -> Self {
        Self::new(true)
    }

    pub fn allow_loops(&self) -> bool {
        self.allow_loops
    }

    pub fn insert_vertex(&mut self, label: Label, attr: S) {
        self.vertices.insert(label, attr);
    }

    pub fn insert_edge(&mut self, from: Label, to: Label, weight: S) {
        self.edges.insert((from, to), weight);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn attr(&self, label: Label) -> Option<S> {
        self.vertices.get(&label).copied()
    }

    pub fn weight(&self, from: Label, to: Label) -> Option<S> {
        self.edges.get(&(from, to)).copied()
    }

    pub fn has_edge(&self, from: Label, to: Label) -> bool {
        self.edges.contains_key(&(from, to))
    }

    pub fn vertices(&self) -> impl Iterator<Item = (Label, S)> + '_ {
        self.vertices.iter().map(|(&l, &a)| (l, a))
    }

    pub fn edges(&self) -> impl Iterator<Item = ((Label, Label), S)> + '_ {
        self.edges.iter().map(|(&p, &w)| (p, w))
    }

    pub fn labels(&self) -> BasisSet {
        self.vertices.keys().copied().collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for &(p, q) in self.edges.keys() {
            if !self.vertices.contains_key(&p) {
                out.push(Violation::DanglingEndpoint { from: p, to: q, missing: p });
            }
            if q != p && !self.vertices.contains_key(&q) {
                out.push(Violation::DanglingEndpoint { from: p, to: q, missing: q });
            }
            if p == q && !self.allow_loops {
                out.push(Violation::LoopForbidden { label: p });
            }
        }
        out
    }

    pub fn classify(&self, universe: &BasisSet) -> GraphKind {
        let is_zero = self.vertices.values().all(|a| *a == S::zero())
            && self.edges.values().all(|w| *w == S::zero());
        let is_total = self.labels() == *universe;
        let is_complete = self
            .vertices
            .keys()
            .flat_map(|&p| self.vertices.keys().map(move |&q| (p, q)))
            .filter(|(p, q)| p != q)
            .all(|pair| self.edges.contains_key(&pair));
        let has_loops = self.edges.keys().any(|&(p, q)| p == q);
        GraphKind { is_empty: self.is_empty(), is_zero, is_total, is_complete, has_loops }
    }

    /// Additive union: vertex and edge sets united, values summed on the shared part.
    pub fn union_add(&self, other: &Self) -> Self {
        let mut vertices = self.vertices.clone();
        for (&l, &a) in &other.vertices {
            vertices.entry(l).and_modify(|x| *x += a).or_insert(a);
        }
        let mut edges = self.edges.clone();
        for (&p, &w) in &other.edges {
            edges.entry(p).and_modify(|x| *x += w).or_insert(w);
        }
        Self { vertices, edges, allow_loops: self.allow_loops || other.allow_loops }
    }

    /// Additive intersection: shared vertex and edge sets, values summed.
    pub fn inter_add(&self, other: &Self) -> Self {
        let vertices = self
            .vertices
            .iter()
            .filter_map(|(&l, &a)| other.vertices.get(&l).map(|&b| (l, a + b)))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(&p, &w)| other.edges.get(&p).map(|&v| (p, w + v)))
            .collect();
        Self { vertices, edges, allow_loops: self.allow_loops || other.allow_loops }
    }

    /// Scales every attribute and weight; the topology is untouched.
    pub fn scalar_mul(&self, alpha: S) -> Self {
        Self {
            vertices: self.vertices.iter().map(|(&l, &a)| (l, alpha * a)).collect(),
            edges: self.edges.iter().map(|(&p, &w)| (p, alpha * w)).collect(),
            allow_loops: self.allow_loops,
        }
    }

    /// Set difference on labels and edge pairs, keeping this graph's values.
    ///
    /// Edges whose endpoints were removed are dropped so the result stays valid.
    pub fn diff(&self, other: &Self) -> Self {
        let (vertices, edges) = self.raw_diff_parts(other);
        let edges = edges
            .into_iter()
            .filter(|((p, q), _)| vertices.contains_key(p) && vertices.contains_key(q))
            .collect();
        Self { vertices, edges, allow_loops: self.allow_loops }
    }

    /// Set difference without endpoint re-validation; only meaningful as a
    /// label-disjoint part of a decomposition.
    fn raw_diff_parts(
        &self,
        other: &Self,
    ) -> (BTreeMap<Label, S>, BTreeMap<(Label, Label), S>) {
        let vertices = self
            .vertices
            .iter()
            .filter(|(l, _)| !other.vertices.contains_key(l))
            .map(|(&l, &a)| (l, a))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|(p, _)| !other.edges.contains_key(p))
            .map(|(&p, &w)| (p, w))
            .collect();
        (vertices, edges)
    }

    /// Rebuilds the additive union from the additive intersection and the two
    /// raw set-difference parts, assembled by disjoint union of vertex and
    /// edge sets. Always equals `self.union_add(other)`.
    pub fn union_decomposition(&self, other: &Self) -> Self {
        let mut out = self.inter_add(other);
        let (xv, xe) = self.raw_diff_parts(other);
        let (yv, ye) = other.raw_diff_parts(self);
        for (l, a) in xv.into_iter().chain(yv) {
            let prev = out.vertices.insert(l, a);
            debug_assert!(prev.is_none(), "decomposition parts share vertex {l}");
        }
        for (p, w) in xe.into_iter().chain(ye) {
            let prev = out.edges.insert(p, w);
            debug_assert!(prev.is_none(), "decomposition parts share edge {p:?}");
        }
        out.allow_loops = self.allow_loops || other.allow_loops;
        out
    }
}

/// Identity of additive intersection: every universe label, every ordered
/// pair (loops per the flag), all values zero.
pub fn identity_inter<S: Real>(universe: &BasisSet, allow_loops: bool) -> Graph<S> {
    let mut g = Graph::new(allow_loops);
    for p in universe.iter() {
        g.insert_vertex(p, S::zero());
        for q in universe.iter() {
            if p != q || allow_loops {
                g.insert_edge(p, q, S::zero());
            }
        }
    }
    g
}
