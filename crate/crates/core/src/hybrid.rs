use std::fmt;
use std::sync::Arc;

use crate::basis::BasisSet;
use crate::scalar::Real;
use crate::state::{state_combine, state_scalar_mul, unit_complete, State};
use crate::vb::Star;

/// Hybrid time: continuous time plus jump count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HybridTime<S> {
    pub t: S,
    pub k: u32,
}

impl<S: fmt::Display> fmt::Display for HybridTime<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t={}, k={})", self.t, self.k)
    }
}

/// The four discrete transition kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JumpCase {
    /// Scheduled input whose basis reaches outside the current one; applied
    /// by union, growing the basis.
    RiseExternal,
    /// Scheduled input on a subset of the current basis; applied by
    /// intersection, removing everything outside it.
    FallExternal,
    /// Growth-triggered intrinsic addition (some attribute at or above kappa).
    IntrinsicPlus,
    /// Threshold-triggered intrinsic pruning (some attribute in (0, lambda]).
    IntrinsicMinus,
}

impl JumpCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            JumpCase::RiseExternal => "rise_external",
            JumpCase::FallExternal => "fall_external",
            JumpCase::IntrinsicPlus => "intrinsic_plus",
            JumpCase::IntrinsicMinus => "intrinsic_minus",
        }
    }
}

impl fmt::Display for JumpCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Deterministic supplier of new species for intrinsic additions. Returns a
/// state on a basis disjoint from the current one, or nothing.
pub type YlProvider<S> = Arc<dyn Fn(&State<S>) -> Option<State<S>> + Send + Sync>;

/// Thresholds and switches for the intrinsic jump sets.
#[derive(Clone)]
pub struct JumpConfig<S> {
    /// Intrinsic-addition trigger: fires when some attribute >= kappa.
    pub kappa: S,
    /// Pruning trigger: fires when some attribute lies in (0, lambda].
    pub lambda: S,
    /// Perturbation applied to the surviving structure on intrinsic addition.
    pub xi_plus: S,
    /// Perturbation applied to survivors on pruning (0 = pure mask).
    pub xi_minus: S,
    pub enable_jplus: bool,
    pub enable_jminus: bool,
    pub yl_provider: Option<YlProvider<S>>,
}

impl<S: fmt::Debug> fmt::Debug for JumpConfig<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JumpConfig")
            .field("kappa", &self.kappa)
            .field("lambda", &self.lambda)
            .field("xi_plus", &self.xi_plus)
            .field("xi_minus", &self.xi_minus)
            .field("enable_jplus", &self.enable_jplus)
            .field("enable_jminus", &self.enable_jminus)
            .field("yl_provider", &self.yl_provider.as_ref().map(|_| "<hook>"))
            .finish()
    }
}

impl<S: Real> Default for JumpConfig<S> {
    fn default() -> Self {
        Self {
            kappa: S::from_f64(1e12).unwrap(),
            lambda: S::from_f64(1e-6).unwrap(),
            xi_plus: S::zero(),
            xi_minus: S::zero(),
            enable_jplus: false,
            enable_jminus: true,
            yl_provider: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JumpError {
    #[error("jump thresholds must satisfy 0 < lambda < kappa, got lambda={lambda}, kappa={kappa}")]
    BadThresholds { lambda: String, kappa: String },
    #[error("intrinsic-addition supply shares labels with the current basis: {0:?}")]
    OverlappingSupply(BasisSet),
}

impl<S: Real> JumpConfig<S> {
    pub fn validate(&self) -> Result<(), JumpError> {
        let ordered = S::zero() < self.lambda && (!self.enable_jplus || self.lambda < self.kappa);
        if !ordered {
            return Err(JumpError::BadThresholds {
                lambda: format!("{}", self.lambda),
                kappa: format!("{}", self.kappa),
            });
        }
        Ok(())
    }
}

/// Classifies the next discrete transition. External inputs take precedence
/// over intrinsic triggers; pruning takes precedence over intrinsic addition.
///
/// An input with basis equal to the current one is classified FallExternal
/// (full retention, a purely additive perturbation); callers that care log it.
pub fn classify_jump<S: Real>(
    state: &State<S>,
    input: Option<&State<S>>,
    cfg: &JumpConfig<S>,
) -> Option<JumpCase> {
    if let Some(u) = input {
        let c = u.basis();
        if !c.is_empty() {
            let b = state.basis();
            if !c.is_subset(&b) {
                return Some(JumpCase::RiseExternal);
            }
            return Some(JumpCase::FallExternal);
        }
    }
    if cfg.enable_jminus {
        let lo = S::zero();
        if state.x().values().any(|v| lo < v && v <= cfg.lambda) {
            return Some(JumpCase::IntrinsicMinus);
        }
    }
    if cfg.enable_jplus && state.x().values().any(|v| v >= cfg.kappa) {
        return Some(JumpCase::IntrinsicPlus);
    }
    None
}

/// Applies one discrete transition and returns the post-jump state.
pub fn apply_jump<S: Real>(
    state: &State<S>,
    input: Option<&State<S>>,
    case: JumpCase,
    cfg: &JumpConfig<S>,
) -> Result<State<S>, JumpError> {
    match case {
        JumpCase::RiseExternal => {
            let u = input.expect("external jump requires an input");
            Ok(state_combine(Star::Union, state, u))
        }
        JumpCase::FallExternal => {
            let u = input.expect("external jump requires an input");
            Ok(state_combine(Star::Inter, state, u))
        }
        JumpCase::IntrinsicPlus => {
            let bump = state_scalar_mul(cfg.xi_plus, &state.unit_on_structure());
            let supply = cfg
                .yl_provider
                .as_ref()
                .and_then(|p| p(state))
                .unwrap_or_else(State::empty);
            let overlap = supply.basis().inter(&state.basis());
            if !overlap.is_empty() {
                return Err(JumpError::OverlappingSupply(overlap));
            }
            let grown = state_combine(Star::Union, &bump, &supply);
            Ok(state_combine(Star::Union, state, &grown))
        }
        JumpCase::IntrinsicMinus => {
            let survivors: BasisSet = state
                .x()
                .iter()
                .filter(|&(_, v)| v > cfg.lambda)
                .map(|(l, _)| l)
                .collect();
            let mask = state_scalar_mul(cfg.xi_minus, &unit_complete(&survivors));
            Ok(state_combine(Star::Inter, state, &mask))
        }
    }
}
