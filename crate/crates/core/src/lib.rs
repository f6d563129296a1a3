//! Dynamical systems on labeled, weighted, attributed graph state-spaces.
//!
//! The crate is organized bottom-up:
//! - [`graph`]: finite graphs over a label universe with the additive union,
//!   additive intersection, and scalar laws.
//! - [`vb`] and [`state`]: variable-basis vectors/tensors and the canonical
//!   (attributes, weights, adjacency) state triple.
//! - [`embed`]: the bijection between graphs and canonical states.
//! - [`hybrid`] and [`solver`]: jump classification/application and the
//!   fixed-step flow-and-jump integrator.
//!
//! Everything numeric is generic over [`scalar::Real`]; the `*64`/`*32`
//! aliases below pin the two supported scalar widths.

pub mod basis;
pub mod embed;
pub mod graph;
pub mod hybrid;
pub mod literal;
pub mod scalar;
pub mod solver;
pub mod state;
pub mod vb;

pub use basis::{BasisSet, Label, PairBasis};
pub use embed::{phi, phi_inv};
pub use graph::{identity_inter, Graph, GraphKind, Violation};
pub use hybrid::{
    apply_jump, classify_jump, HybridTime, JumpCase, JumpConfig, JumpError, YlProvider,
};
pub use literal::{EdgeLiteral, GraphLiteral, VertexLiteral};
pub use scalar::Real;
pub use solver::{
    solve, ConfigError, Disturbance, FlowMap, HybridArc, JumpRecord, PiecewiseConstant, Segment,
    SolveError, SolveReport,
};
pub use state::{
    identity_inter_state, state_combine, state_scalar_mul, unit_complete, State, StateKind,
    StateViolation,
};
pub use vb::{bool_combine, tensor_combine, vec_combine, BoolTensor, Star, VBTensor, VBVector};

pub type Graph64 = Graph<f64>;
pub type Graph32 = Graph<f32>;
pub type State64 = State<f64>;
pub type State32 = State<f32>;
pub type VBVector64 = VBVector<f64>;
pub type VBVector32 = VBVector<f32>;
pub type VBTensor64 = VBTensor<f64>;
pub type VBTensor32 = VBTensor<f32>;
