//! Jump semantics: classification precedence, basis effects of each case,
//! and closure of the canonical form under every jump.

use graphdyn_core::{
    apply_jump, classify_jump, phi, unit_complete, BasisSet, Graph64, JumpCase, JumpConfig,
    State64,
};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

const LABELS: std::ops::RangeInclusive<u32> = 1..=6;

fn dyadic() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![-2.0, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 2.0])
}

fn build(verts: &BTreeMap<u32, f64>, pairs: &[(u32, u32)], weights: &[f64]) -> Graph64 {
    let mut g = Graph64::empty();
    for (&l, &v) in verts {
        g.insert_vertex(l, v);
    }
    let mut i = 0usize;
    for &(f, t) in pairs {
        if verts.contains_key(&f) && verts.contains_key(&t) {
            g.insert_edge(f, t, weights[i % weights.len()]);
            i += 1;
        }
    }
    g
}

prop_compose! {
    fn arb_state(min_verts: usize)(
        verts in prop::collection::btree_map(LABELS, dyadic(), min_verts..=6),
        pairs in prop::collection::btree_set((LABELS, LABELS), 0..=12),
        weights in prop::collection::vec(dyadic(), 12),
    ) -> State64 {
        phi(&build(&verts, &pairs.into_iter().collect::<Vec<_>>(), &weights))
    }
}

proptest! {
    #[test]
    fn nonempty_input_always_classifies_external(
        state in arb_state(1),
        input in arb_state(1),
    ) {
        let cfg = JumpConfig::default();
        let case = classify_jump(&state, Some(&input), &cfg);
        let expected = if input.basis().is_subset(&state.basis()) {
            JumpCase::FallExternal
        } else {
            JumpCase::RiseExternal
        };
        prop_assert_eq!(case, Some(expected));
    }

    #[test]
    fn external_beats_any_intrinsic_trigger(
        state in arb_state(1),
        input in arb_state(1),
    ) {
        // thresholds wide enough that every nonzero value is a trigger
        let cfg = JumpConfig { lambda: 2.0, kappa: 2.5, enable_jplus: true, ..Default::default() };
        let case = classify_jump(&state, Some(&input), &cfg).unwrap();
        prop_assert!(matches!(case, JumpCase::RiseExternal | JumpCase::FallExternal));
    }

    #[test]
    fn rise_unions_the_bases(state in arb_state(1), input in arb_state(1)) {
        let cfg = JumpConfig::default();
        prop_assume!(!input.basis().is_subset(&state.basis()));
        let next = apply_jump(&state, Some(&input), JumpCase::RiseExternal, &cfg).unwrap();
        prop_assert_eq!(next.basis(), state.basis().union(&input.basis()));
        prop_assert!(next.validate().is_empty());
    }

    #[test]
    fn fall_intersects_the_bases(
        state in arb_state(1),
        keep in prop::collection::vec(any::<bool>(), 6),
    ) {
        // retention input over a nonempty sub-basis of the current labels
        let mut kept: BasisSet = state
            .basis()
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(l, _)| l)
            .collect();
        if kept.is_empty() {
            kept.insert(state.basis().iter().next().unwrap());
        }
        let input = unit_complete::<f64>(&kept);
        let cfg = JumpConfig::default();
        prop_assert_eq!(
            classify_jump(&state, Some(&input), &cfg),
            Some(JumpCase::FallExternal)
        );
        let next = apply_jump(&state, Some(&input), JumpCase::FallExternal, &cfg).unwrap();
        prop_assert_eq!(next.basis(), kept);
        prop_assert!(next.validate().is_empty());
    }

    #[test]
    fn prune_drops_exactly_the_subthreshold_labels(state in arb_state(1)) {
        let cfg = JumpConfig { lambda: 0.5, ..Default::default() };
        prop_assume!(classify_jump(&state, None, &cfg) == Some(JumpCase::IntrinsicMinus));
        let next = apply_jump(&state, None, JumpCase::IntrinsicMinus, &cfg).unwrap();
        let survivors: BasisSet = state
            .x()
            .iter()
            .filter(|(_, v)| *v > cfg.lambda)
            .map(|(l, _)| l)
            .collect();
        prop_assert_eq!(next.basis(), survivors);
        prop_assert!(next.validate().is_empty());
    }

    #[test]
    fn default_prune_mask_preserves_survivor_values(state in arb_state(1)) {
        let cfg = JumpConfig { lambda: 0.5, ..Default::default() };
        prop_assume!(classify_jump(&state, None, &cfg) == Some(JumpCase::IntrinsicMinus));
        let next = apply_jump(&state, None, JumpCase::IntrinsicMinus, &cfg).unwrap();
        for (l, v) in next.x().iter() {
            prop_assert_eq!(v, state.x().get(l).unwrap());
        }
        for ((p, q), w) in next.w().iter() {
            prop_assert_eq!(w, state.w().get(p, q).unwrap());
            prop_assert_eq!(next.a().is_set(p, q), state.a().is_set(p, q));
        }
    }

    #[test]
    fn growth_with_disjoint_supply_extends_the_basis(state in arb_state(1)) {
        let supply: BasisSet = [7u32, 8].into_iter().collect();
        let cfg = JumpConfig {
            kappa: 0.25,
            enable_jplus: true,
            enable_jminus: false,
            xi_plus: 0.5,
            yl_provider: Some(Arc::new(move |_: &State64| Some(unit_complete(&supply)))),
            ..Default::default()
        };
        prop_assume!(classify_jump(&state, None, &cfg) == Some(JumpCase::IntrinsicPlus));
        let next = apply_jump(&state, None, JumpCase::IntrinsicPlus, &cfg).unwrap();
        let expect = state.basis().union(&[7u32, 8].into_iter().collect());
        prop_assert_eq!(next.basis(), expect);
        prop_assert!(next.validate().is_empty());
        // the bump scales the state's own unit, so attrs grow by xi_plus
        for (l, v) in state.x().iter() {
            prop_assert_eq!(next.x().get(l).unwrap(), v + 0.5);
        }
    }

    #[test]
    fn zero_attribute_never_triggers_a_prune(state in arb_state(1)) {
        // an extinct-but-present label sits at exactly zero; the prune guard
        // is the half-open interval (0, lambda], so it must not fire
        let zeroed = state.with_flow_values(
            state.x().map_values(|_| 0.0),
            state.w().clone(),
        );
        let cfg = JumpConfig { lambda: 0.5, ..Default::default() };
        prop_assert_eq!(classify_jump(&zeroed, None, &cfg), None);
    }
}
