use crate::graph::Graph;
use crate::scalar::Real;
use crate::state::{State, StateViolation};
use crate::vb::{BoolTensor, VBTensor, VBVector};

/// Embeds a graph as a state: attributes become the coefficient vector,
/// adjacency marks exactly the existing edges over the full square, and
/// weights are zero-filled on non-edges.
pub fn phi<S: Real>(g: &Graph<S>) -> State<S> {
    let basis = g.labels();
    let square = basis.square();
    let x = VBVector::from_pairs(g.vertices());
    let mut w = VBTensor::zeros(&square);
    let mut a = BoolTensor::zeros(&square);
    for ((p, q), weight) in g.edges() {
        w.set(p, q, weight);
        a.set(p, q, true);
    }
    State::canonical(x, w, a)
}

/// Inverse embedding. Edge existence comes from the adjacency tensor, so
/// zero-weight edges survive the round trip.
pub fn phi_inv<S: Real>(s: &State<S>) -> Result<Graph<S>, Vec<StateViolation>> {
    let violations = s.validate();
    if !violations.is_empty() {
        return Err(violations);
    }
    let mut g = Graph::new(true);
    for (l, attr) in s.x().iter() {
        g.insert_vertex(l, attr);
    }
    for ((p, q), bit) in s.a().iter() {
        if bit {
            g.insert_edge(p, q, s.w().get(p, q).unwrap_or_else(S::zero));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::BasisSet;
    use crate::graph::identity_inter;
    use crate::state::State;
    use crate::vb::{BoolTensor, VBTensor, VBVector};
    use crate::Graph64;

    #[test]
    fn empty_maps_to_empty() {
        assert_eq!(phi(&Graph64::empty()), State::empty());
        assert_eq!(phi_inv(&State::<f64>::empty()).unwrap(), Graph64::empty());
    }

    #[test]
    fn identity_graph_maps_to_complete_null_state() {
        let universe: BasisSet = [1, 2, 3].into_iter().collect();
        let e = identity_inter::<f64>(&universe, true);
        let s = phi(&e);
        let k = s.classify(&universe);
        assert!(k.total && k.complete && k.null && k.has_loops);
        assert!(s.is_complete_with_loops());
    }

    #[test]
    fn round_trip_preserves_zero_weight_edges() {
        let mut g = Graph64::empty();
        g.insert_vertex(1, 0.7);
        g.insert_vertex(2, -0.1);
        g.insert_edge(1, 2, 0.0);
        let s = phi(&g);
        assert_eq!(s.a().get(1, 2), Some(true));
        assert_eq!(s.w().get(1, 2), Some(0.0));
        assert_eq!(phi_inv(&s).unwrap(), g);
    }

    #[test]
    fn inverse_rejects_non_canonical_states() {
        let bad = State::from_parts_unchecked(
            VBVector::from_pairs([(1, 1.0)]),
            VBTensor::from_pairs([((1, 1), 2.0)]),
            BoolTensor::from_pairs([((1, 1), false)]),
        );
        assert!(phi_inv(&bad).is_err());
    }
}
