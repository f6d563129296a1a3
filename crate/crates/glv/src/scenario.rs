use std::path::{Path, PathBuf};

use graphdyn_core::{phi, BasisSet, BoolTensor, GraphLiteral, JumpConfig, Label, State64, VBTensor, VBVector};
use serde::Deserialize;

use crate::params::{self, GlvParams};

/// Scenario file model, one-to-one with the JSON layout.
#[derive(Clone, Debug, Deserialize)]
pub struct ScenarioFile {
    pub universe: Vec<Label>,
    pub initial_state: GraphLiteral,
    #[serde(default)]
    pub params: ParamsSection,
    #[serde(default)]
    pub jump_config: JumpSection,
    #[serde(default)]
    pub schedule: Vec<ScheduleEntry>,
    pub sim: SimSection,
}

#[derive(Clone, Debug, Default, Deserialize)]
pub struct ParamsSection {
    /// Parameter table path, resolved relative to the scenario file. The
    /// bundled eleven-species table is used when omitted.
    pub path: Option<PathBuf>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub t_star: Option<f64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default)]
pub struct JumpSection {
    pub lambda: f64,
    pub kappa: f64,
    pub xi_plus: f64,
    pub xi_minus: f64,
    pub enable_jplus: bool,
    pub enable_jminus: bool,
}

impl Default for JumpSection {
    fn default() -> Self {
        let d = JumpConfig::<f64>::default();
        Self {
            lambda: d.lambda,
            kappa: d.kappa,
            xi_plus: d.xi_plus,
            xi_minus: d.xi_minus,
            enable_jplus: d.enable_jplus,
            enable_jminus: d.enable_jminus,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct ScheduleEntry {
    pub t: f64,
    pub mode: ScheduleMode,
    pub input: GraphLiteral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScheduleMode {
    /// The literal is embedded as written; edge values missing their reverse
    /// direction are mirrored onto it.
    Add,
    /// Vertices only; expands to the complete graph with loops over the
    /// listed labels, all weights zero, so retention preserves surviving
    /// interactions.
    Retain,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SimSection {
    pub t_max: f64,
    #[serde(default = "default_dt")]
    pub dt: f64,
    #[serde(default)]
    pub freeze_weights: bool,
    #[serde(default)]
    pub antibiotic: bool,
    #[serde(default = "default_k_max")]
    pub k_max: u32,
    #[serde(default = "default_stride")]
    pub export_stride: usize,
}

fn default_dt() -> f64 {
    0.01
}

fn default_k_max() -> u32 {
    64
}

fn default_stride() -> usize {
    1
}

/// Fully resolved run configuration.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub universe: BasisSet,
    pub initial: State64,
    pub params: GlvParams,
    pub jump_config: JumpConfig<f64>,
    pub schedule: Vec<(f64, State64)>,
    pub t_max: f64,
    pub dt: f64,
    pub freeze_weights: bool,
    pub antibiotic: bool,
    pub k_max: u32,
    pub export_stride: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("cannot read scenario {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("scenario is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("universe lists label {0} twice")]
    DuplicateUniverseLabel(Label),
    #[error("universe is empty")]
    EmptyUniverse,
    #[error("initial state: {0}")]
    BadInitialState(String),
    #[error("initial state label {0} is outside the universe")]
    InitialOutsideUniverse(Label),
    #[error("{0}")]
    BadParams(#[from] params::ParamError),
    #[error("jump thresholds: {0}")]
    BadThresholds(String),
    #[error("schedule entry at t={0}: {1}")]
    BadScheduleInput(f64, String),
    #[error("schedule times must be strictly increasing and within [0, t_max]; offender t={0}")]
    BadScheduleTime(f64),
    #[error("sim: dt and t_max must be positive, export_stride at least 1")]
    BadSim,
}

impl ScenarioFile {
    pub fn from_path(path: &Path) -> Result<Self, ScenarioError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ScenarioError::Io { path: path.display().to_string(), source })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Resolves literals, loads the parameter table, and collects every
    /// validation problem instead of stopping at the first.
    pub fn resolve(&self, base_dir: &Path) -> Result<Scenario, Vec<ScenarioError>> {
        let mut errors = Vec::new();

        let universe: BasisSet = self.universe.iter().copied().collect();
        if universe.len() != self.universe.len() {
            let mut seen = BasisSet::new();
            for &l in &self.universe {
                if seen.contains(l) {
                    errors.push(ScenarioError::DuplicateUniverseLabel(l));
                    break;
                }
                seen.insert(l);
            }
        }
        if universe.is_empty() {
            errors.push(ScenarioError::EmptyUniverse);
        }

        let initial = match self.initial_state.to_graph::<f64>(true) {
            Ok(g) => {
                for (l, _) in g.vertices() {
                    if !universe.contains(l) {
                        errors.push(ScenarioError::InitialOutsideUniverse(l));
                    }
                }
                Some(phi(&g))
            }
            Err(violations) => {
                let text =
                    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
                errors.push(ScenarioError::BadInitialState(text));
                None
            }
        };

        let params = match &self.params.path {
            Some(rel) => params::load_params(&base_dir.join(rel)),
            None => Ok(crate::builtin::default_params()),
        };
        let params = match params {
            Ok(mut p) => {
                p.alpha = self.params.alpha.unwrap_or(p.alpha);
                p.beta = self.params.beta.unwrap_or(p.beta);
                p.t_star = self.params.t_star.unwrap_or(p.t_star);
                if let Err(e) = p.ensure_covers(&universe) {
                    errors.push(e.into());
                }
                Some(p)
            }
            Err(e) => {
                errors.push(e.into());
                None
            }
        };

        let jump_config = JumpConfig {
            lambda: self.jump_config.lambda,
            kappa: self.jump_config.kappa,
            xi_plus: self.jump_config.xi_plus,
            xi_minus: self.jump_config.xi_minus,
            enable_jplus: self.jump_config.enable_jplus,
            enable_jminus: self.jump_config.enable_jminus,
            yl_provider: None,
        };
        if let Err(e) = jump_config.validate() {
            errors.push(ScenarioError::BadThresholds(e.to_string()));
        }

        if !(self.sim.dt > 0.0) || !(self.sim.t_max > 0.0) || self.sim.export_stride == 0 {
            errors.push(ScenarioError::BadSim);
        }

        let mut schedule = Vec::new();
        let mut last_t = f64::NEG_INFINITY;
        for entry in &self.schedule {
            if entry.t <= last_t || entry.t < 0.0 || entry.t > self.sim.t_max {
                errors.push(ScenarioError::BadScheduleTime(entry.t));
            }
            last_t = entry.t;
            match schedule_input(entry, &universe) {
                Ok(state) => schedule.push((entry.t, state)),
                Err(e) => errors.push(e),
            }
        }

        if !errors.is_empty() {
            return Err(errors);
        }
        Ok(Scenario {
            universe,
            initial: initial.expect("validated above"),
            params: params.expect("validated above"),
            jump_config,
            schedule,
            t_max: self.sim.t_max,
            dt: self.sim.dt,
            freeze_weights: self.sim.freeze_weights,
            antibiotic: self.sim.antibiotic,
            k_max: self.sim.k_max,
            export_stride: self.sim.export_stride,
        })
    }
}

impl Scenario {
    pub fn from_file(path: &Path) -> Result<Self, Vec<ScenarioError>> {
        let file = ScenarioFile::from_path(path).map_err(|e| vec![e])?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        file.resolve(base)
    }
}

fn schedule_input(entry: &ScheduleEntry, universe: &BasisSet) -> Result<State64, ScenarioError> {
    let bad = |msg: String| ScenarioError::BadScheduleInput(entry.t, msg);
    if entry.input.vertices.is_empty() {
        return Err(bad("input must introduce at least one vertex".into()));
    }
    for v in &entry.input.vertices {
        if !universe.contains(v.id) {
            return Err(bad(format!("label {} is outside the universe", v.id)));
        }
    }
    match entry.mode {
        ScheduleMode::Add => {
            let mut literal = entry.input.clone();
            mirror_missing_directions(&mut literal);
            let g = literal.to_graph::<f64>(true).map_err(|violations| {
                bad(violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))
            })?;
            Ok(phi(&g))
        }
        ScheduleMode::Retain => {
            if !entry.input.edges.is_empty() {
                return Err(bad("retain inputs list vertices only".into()));
            }
            let x = VBVector::from_pairs(entry.input.vertices.iter().map(|v| (v.id, v.attr)));
            let square = x.basis().square();
            Ok(State64::canonical(x, VBTensor::zeros(&square), BoolTensor::ones(&square)))
        }
    }
}

/// Interaction figures often print one value per species pair; unless the
/// reverse direction is stated explicitly, the value applies both ways.
fn mirror_missing_directions(literal: &mut GraphLiteral) {
    let listed: std::collections::BTreeSet<(Label, Label)> =
        literal.edges.iter().map(|e| (e.from, e.to)).collect();
    let mut mirrored = Vec::new();
    for e in &literal.edges {
        if e.from != e.to && !listed.contains(&(e.to, e.from)) {
            mirrored.push(graphdyn_core::EdgeLiteral {
                from: e.to,
                to: e.from,
                weight: e.weight,
            });
        }
    }
    literal.edges.extend(mirrored);
}
