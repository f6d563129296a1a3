//! Gut-microbiota application: generalized Lotka-Volterra dynamics with
//! antibiotic forcing and bacteriotherapy jump inputs, driven through the
//! graph-state hybrid solver.

pub mod builtin;
pub mod dynamics;
pub mod export;
pub mod params;
pub mod run;
pub mod scenario;

pub use builtin::{
    bacteriotherapy_schedule, builtin_scenario, default_params, eleven_species_universe,
    resident_initial_state, BuiltinScenario,
};
pub use dynamics::{antibiotic_u, GlvFlow};
pub use export::export_trajectory;
pub use params::{load_params, parse_params, GlvParams, ParamError};
pub use run::{run_scenario, RunError, RunOutput, RunSummary};
pub use scenario::{Scenario, ScenarioError, ScenarioFile, ScheduleMode};
