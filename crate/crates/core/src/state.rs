use crate::basis::{BasisSet, Label};
use crate::scalar::Real;
use crate::vb::{bool_combine, tensor_combine, vec_combine, BoolTensor, Star, VBTensor, VBVector};

/// State triple (x, w, a): attribute vector on basis B, weight tensor and
/// adjacency tensor on the full square B x B.
///
/// Canonical form is enforced by every constructor and operation here:
/// the pair basis is exactly the square of the vertex basis, and
/// `a = 0` forces `w = 0` on that pair.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct State<S> {
    x: VBVector<S>,
    w: VBTensor<S>,
    a: BoolTensor,
}

/// Membership breach for the state space image of graph space.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StateViolation {
    #[error("weight basis is not the full square of the vertex basis")]
    WeightBasisNotSquare,
    #[error("adjacency basis is not the full square of the vertex basis")]
    AdjacencyBasisNotSquare,
    #[error("pair ({0}, {1}) has a = 0 but w != 0")]
    UnmaskedWeight(Label, Label),
}

/// Classification flags over a universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateKind {
    /// Basis covers the whole universe.
    pub total: bool,
    /// Every off-diagonal pair has a = 1.
    pub complete: bool,
    /// x and w identically zero.
    pub null: bool,
    /// Some diagonal pair has a = 1.
    pub has_loops: bool,
}

impl<S: Real> State<S> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Canonicalizes the parts: re-expands w and a to the full square of x's
    /// basis with zero fill, then masks w wherever a is 0.
    pub fn canonical(x: VBVector<S>, w: VBTensor<S>, a: BoolTensor) -> Self {
        let square = x.basis().square();
        let mut cw = VBTensor::zeros(&square);
        let mut ca = BoolTensor::zeros(&square);
        for (p, bit) in a.iter() {
            if square.contains(p) && bit {
                ca.set(p.0, p.1, true);
            }
        }
        for ((p, q), v) in w.iter() {
            if ca.is_set(p, q) {
                cw.set(p, q, v);
            }
        }
        Self { x, w: cw, a: ca }
    }

    /// Builds a state from parts without canonicalizing. For IO and tests;
    /// the result may fail [`State::validate`].
    pub fn from_parts_unchecked(x: VBVector<S>, w: VBTensor<S>, a: BoolTensor) -> Self {
        Self { x, w, a }
    }

    /// Full membership validation for the graph-space image.
    pub fn validate(&self) -> Vec<StateViolation> {
        let mut out = Vec::new();
        let square = self.x.basis().square();
        if self.w.pair_basis() != square {
            out.push(StateViolation::WeightBasisNotSquare);
        }
        if self.a.pair_basis() != square {
            out.push(StateViolation::AdjacencyBasisNotSquare);
        }
        for ((p, q), v) in self.w.iter() {
            if !self.a.is_set(p, q) && v != S::zero() {
                out.push(StateViolation::UnmaskedWeight(p, q));
            }
        }
        out
    }

    pub fn basis(&self) -> BasisSet {
        self.x.basis()
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &VBVector<S> {
        &self.x
    }

    pub fn w(&self) -> &VBTensor<S> {
        &self.w
    }

    pub fn a(&self) -> &BoolTensor {
        &self.a
    }

    /// Replaces x and w keeping the basis and adjacency; used by the solver
    /// between jumps. Masks w by a to preserve canonical form.
    pub fn with_flow_values(&self, x: VBVector<S>, w: VBTensor<S>) -> Self {
        debug_assert_eq!(x.basis(), self.basis());
        let mut cw = w;
        for ((p, q), bit) in self.a.iter() {
            if !bit {
                cw.set(p, q, S::zero());
            }
        }
        Self { x, w: cw, a: self.a.clone() }
    }

    pub fn classify(&self, universe: &BasisSet) -> StateKind {
        let basis = self.basis();
        let total = basis == *universe;
        let complete = self.a.iter().filter(|((p, q), _)| p != q).all(|(_, bit)| bit);
        let null = self.x.values().all(|v| v == S::zero())
            && self.w.values().all(|v| v == S::zero());
        let has_loops = self.a.iter().any(|((p, q), bit)| p == q && bit);
        StateKind { total, complete, null, has_loops }
    }

    /// Complete including every loop: a = 1 on the entire square.
    pub fn is_complete_with_loops(&self) -> bool {
        self.a.iter().all(|(_, bit)| bit)
    }

    /// Unit state on this state's own structure: every attribute 1, every
    /// existing-edge weight 1, adjacency unchanged.
    pub fn unit_on_structure(&self) -> Self {
        let x = self.x.map_values(|_| S::one());
        let mut w = VBTensor::zeros(&self.x.basis().square());
        for ((p, q), bit) in self.a.iter() {
            if bit {
                w.set(p, q, S::one());
            }
        }
        Self { x, w, a: self.a.clone() }
    }
}

/// Complete-with-loops unit state on the given labels: all attributes 1,
/// all square weights 1, all square adjacency 1.
pub fn unit_complete<S: Real>(labels: &BasisSet) -> State<S> {
    let square = labels.square();
    State {
        x: VBVector::from_pairs(labels.iter().map(|l| (l, S::one()))),
        w: VBTensor::from_pairs(square.iter().map(|p| (p, S::one()))),
        a: BoolTensor::ones(&square),
    }
}

/// Identity of the intersection combine: total, complete with loops, null.
pub fn identity_inter_state<S: Real>(universe: &BasisSet) -> State<S> {
    let square = universe.square();
    State {
        x: VBVector::zeros(universe),
        w: VBTensor::zeros(&square),
        a: BoolTensor::ones(&square),
    }
}

/// Componentwise combine, re-expanded to the full square of the result basis
/// and canonicalized; closed on canonical states.
pub fn state_combine<S: Real>(star: Star, x: &State<S>, y: &State<S>) -> State<S> {
    let cx = vec_combine(star, &x.x, &y.x);
    let cw = tensor_combine(star, &x.w, &y.w);
    let ca = bool_combine(star, &x.a, &y.a);
    State::canonical(cx, cw, ca)
}

/// Scales x and w; adjacency and basis unchanged.
pub fn state_scalar_mul<S: Real>(lambda: S, x: &State<S>) -> State<S> {
    State {
        x: x.x.map_values(|v| lambda * v),
        w: x.w.map_values(|v| lambda * v),
        a: x.a.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_state() -> State<f64> {
        // basis {1,2}, edges (1,2) and (1,1), the (2,*) pairs absent
        let x = VBVector::from_pairs([(1, 0.5), (2, 2.0)]);
        let w = VBTensor::from_pairs([((1, 1), -1.0), ((1, 2), 0.3)]);
        let a = BoolTensor::from_pairs([((1, 1), true), ((1, 2), true)]);
        State::canonical(x, w, a)
    }

    #[test]
    fn canonical_expands_to_square_and_masks() {
        let s = small_state();
        assert!(s.validate().is_empty());
        assert_eq!(s.w().len(), 4);
        assert_eq!(s.a().len(), 4);
        assert_eq!(s.w().get(2, 1), Some(0.0));
        assert_eq!(s.a().get(2, 1), Some(false));

        // weight outside the mask is zeroed
        let x = VBVector::from_pairs([(1, 1.0)]);
        let w = VBTensor::from_pairs([((1, 1), 5.0)]);
        let a = BoolTensor::from_pairs([((1, 1), false)]);
        let s = State::canonical(x, w, a);
        assert_eq!(s.w().get(1, 1), Some(0.0));
    }

    #[test]
    fn validate_rejects_unmasked_weight_and_non_square() {
        let x = VBVector::from_pairs([(1, 1.0)]);
        let w = VBTensor::from_pairs([((1, 1), 5.0)]);
        let a = BoolTensor::from_pairs([((1, 1), false)]);
        let bad = State::from_parts_unchecked(x, w, a);
        assert_eq!(bad.validate(), vec![StateViolation::UnmaskedWeight(1, 1)]);

        let bad2 = State::from_parts_unchecked(
            VBVector::from_pairs([(1, 1.0), (2, 1.0)]),
            VBTensor::from_pairs([((1, 1), 0.0)]),
            BoolTensor::from_pairs([((1, 1), true)]),
        );
        let v = bad2.validate();
        assert!(v.contains(&StateViolation::WeightBasisNotSquare));
        assert!(v.contains(&StateViolation::AdjacencyBasisNotSquare));
    }

    #[test]
    fn union_with_empty_is_identity() {
        let s = small_state();
        assert_eq!(state_combine(Star::Union, &s, &State::empty()), s);
        assert_eq!(state_combine(Star::Union, &State::empty(), &s), s);
    }

    #[test]
    fn inter_with_identity_is_identity() {
        let s = small_state();
        let universe: BasisSet = [1, 2, 3].into_iter().collect();
        let e = identity_inter_state::<f64>(&universe);
        assert_eq!(state_combine(Star::Inter, &s, &e), s);
        assert_eq!(state_combine(Star::Inter, &e, &s), s);
    }

    #[test]
    fn scalar_mul_laws() {
        let s = small_state();
        assert_eq!(state_scalar_mul(1.0, &s), s);
        let z = state_scalar_mul(0.0, &s);
        let k = z.classify(&s.basis());
        assert!(k.null && k.total);
        assert_eq!(z.a(), s.a());
        let d = state_scalar_mul(2.0, &s);
        assert_eq!(d.x().get(1), Some(1.0));
        assert_eq!(d.w().get(1, 2), Some(0.6));
    }

    #[test]
    fn classify_identity_and_empty() {
        let universe: BasisSet = [1, 2].into_iter().collect();
        let e = identity_inter_state::<f64>(&universe);
        let k = e.classify(&universe);
        assert!(k.total && k.complete && k.null && k.has_loops);
        assert!(e.is_complete_with_loops());

        let k0 = State::<f64>::empty().classify(&universe);
        assert!(!k0.total && k0.complete && k0.null && !k0.has_loops);
    }

    #[test]
    fn unit_states() {
        let s = small_state();
        let u = s.unit_on_structure();
        assert_eq!(u.x().get(2), Some(1.0));
        assert_eq!(u.w().get(1, 2), Some(1.0));
        assert_eq!(u.w().get(2, 1), Some(0.0));
        assert_eq!(u.a(), s.a());

        let h: BasisSet = [1, 4].into_iter().collect();
        let one = unit_complete::<f64>(&h);
        assert!(one.is_complete_with_loops());
        assert_eq!(one.w().get(4, 1), Some(1.0));
        assert!(one.validate().is_empty());
    }

    #[test]
    fn inter_masks_one_sided_edges() {
        // edge (1,2) exists only in s1; after inter the pair must carry w=0, a=0
        let s1 = small_state();
        let x = VBVector::from_pairs([(1, 1.0), (2, 1.0)]);
        let w = VBTensor::from_pairs([((1, 1), 2.0)]);
        let a = BoolTensor::from_pairs([((1, 1), true)]);
        let s2 = State::canonical(x, w, a);
        let i = state_combine(Star::Inter, &s1, &s2);
        assert_eq!(i.a().get(1, 2), Some(false));
        assert_eq!(i.w().get(1, 2), Some(0.0));
        assert_eq!(i.w().get(1, 1), Some(1.0));
        assert!(i.validate().is_empty());
    }
}
