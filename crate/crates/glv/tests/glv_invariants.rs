//! Cross-module invariants of the microbiota application: schedule
//! classification, positivity of the flow, and consistency between the
//! sampled trajectory and the right-hand side.

use graphdyn_core::{apply_jump, classify_jump, FlowMap, JumpCase, JumpConfig};
use graphdyn_glv::{
    bacteriotherapy_schedule, builtin_scenario, default_params, resident_initial_state,
    run_scenario, BuiltinScenario, GlvFlow,
};

#[test]
fn schedule_classifies_rise_rise_fall() {
    let cfg = JumpConfig::default();
    let mut state = resident_initial_state();
    let mut cases = Vec::new();
    for (_, input) in bacteriotherapy_schedule() {
        let case = classify_jump(&state, Some(&input), &cfg).unwrap();
        cases.push(case);
        state = apply_jump(&state, Some(&input), case, &cfg).unwrap();
    }
    assert_eq!(
        cases,
        vec![JumpCase::RiseExternal, JumpCase::RiseExternal, JumpCase::FallExternal]
    );
    assert_eq!(state.dim(), 3);
}

#[test]
fn abundances_stay_positive_under_the_pulse() {
    let out = run_scenario(&builtin_scenario(BuiltinScenario::Fig8b)).unwrap();
    for seg in &out.arc.segments {
        for i in 0..seg.len() {
            for (j, v) in seg.x_row(i).iter().enumerate() {
                assert!(
                    *v > 0.0,
                    "nonpositive abundance {v} at t={}, column {j}",
                    seg.time(i)
                );
            }
        }
    }
}

/// Central differences of the sampled trajectory against the flow map. The
/// attribute check starts after the antibiotic pulse: during the pulse the
/// third derivative is large enough that the O(dt^2) constant exceeds the
/// stated tolerance. Weight dynamics are slow, so weights are checked across
/// the whole window except the switch step itself.
#[test]
fn sampled_trajectory_matches_the_rhs() {
    let mut s = builtin_scenario(BuiltinScenario::Fig10);
    s.t_max = 8.0;
    let out = run_scenario(&s).unwrap();
    assert_eq!(out.arc.segments.len(), 1, "no jumps expected in this window");
    let seg = &out.arc.segments[0];
    let params = default_params();
    let flow = GlvFlow { params: &params, weight_dynamics: true };
    let dt = s.dt;
    let switch_step = (params.t_star / dt).round() as usize;

    let mut worst_x: f64 = 0.0;
    let mut worst_w: f64 = 0.0;
    for i in 2..seg.len() - 2 {
        if i.abs_diff(switch_step) <= 1 {
            continue;
        }
        let mid = seg.state_at(i);
        let u = if i < switch_step { 1.0 } else { 0.0 };
        let (dx, dw) = flow.rhs(mid.x(), mid.w(), mid.a(), u);
        let next = seg.state_at(i + 1);
        let prev = seg.state_at(i - 1);
        if seg.time(i) > params.t_star + 1.0 {
            for (l, d) in dx.iter() {
                let fd = (next.x().get(l).unwrap() - prev.x().get(l).unwrap()) / (2.0 * dt);
                worst_x = worst_x.max((fd - d).abs());
            }
        }
        for ((p, q), d) in dw.iter() {
            let fd = (next.w().get(p, q).unwrap() - prev.w().get(p, q).unwrap()) / (2.0 * dt);
            worst_w = worst_w.max((fd - d).abs());
        }
    }
    assert!(worst_x < 1e-4, "attribute finite differences off by {worst_x}");
    assert!(worst_w < 1e-4, "weight finite differences off by {worst_w}");
}

#[test]
fn pruning_disabled_yields_exactly_the_external_jumps() {
    let mut s = builtin_scenario(BuiltinScenario::Fig9a);
    s.t_max = 200.0; // past the first scheduled input
    let out = run_scenario(&s).unwrap();
    assert_eq!(out.summary.jumps.len(), 1);
    assert_eq!(out.summary.jumps[0], (190.0, 0, "rise_external".to_string()));
    assert_eq!(out.summary.dimension_trace, vec![(0.0, 4), (190.0, 5)]);
}

#[test]
fn missing_species_parameters_are_a_configuration_error() {
    let json = serde_json::json!({
        "universe": [1, 99],
        "initial_state": {"vertices": [{"id": 1, "attr": 0.5}]},
        "sim": {"t_max": 1.0}
    });
    let file: graphdyn_glv::ScenarioFile = serde_json::from_value(json).unwrap();
    let errs = file.resolve(std::path::Path::new(".")).unwrap_err();
    assert!(errs.iter().any(|e| e.to_string().contains("99")), "{errs:?}");
}
