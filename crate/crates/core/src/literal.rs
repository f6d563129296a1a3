use serde::{Deserialize, Serialize};

use crate::basis::Label;
use crate::graph::{Graph, Violation};
use crate::scalar::Real;

/// Graph literal as written in scenario files.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GraphLiteral {
    #[serde(default)]
    pub vertices: Vec<VertexLiteral>,
    #[serde(default)]
    pub edges: Vec<EdgeLiteral>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexLiteral {
    pub id: Label,
    #[serde(default)]
    pub attr: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeLiteral {
    pub from: Label,
    pub to: Label,
    #[serde(default)]
    pub weight: f64,
}

impl GraphLiteral {
    /// Builds and validates a graph; duplicates and dangling edges are
    /// reported together rather than first-error-only.
    pub fn to_graph<S: Real>(&self, allow_loops: bool) -> Result<Graph<S>, Vec<Violation>> {
        let mut g = Graph::new(allow_loops);
        let mut violations = Vec::new();
        for v in &self.vertices {
            if g.attr(v.id).is_some() {
                violations.push(Violation::DuplicateVertex { label: v.id });
            }
            g.insert_vertex(v.id, S::from_f64(v.attr).expect("attribute representable"));
        }
        for e in &self.edges {
            if g.has_edge(e.from, e.to) {
                violations.push(Violation::DuplicateEdge { from: e.from, to: e.to });
            }
            g.insert_edge(e.from, e.to, S::from_f64(e.weight).expect("weight representable"));
        }
        violations.extend(g.validate());
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(violations)
        }
    }
}
