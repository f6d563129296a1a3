use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use graphdyn_glv::{
    builtin_scenario, export_trajectory, run_scenario, BuiltinScenario, RunSummary, Scenario,
};
use serde::Serialize;

const OUT_DIR_ENV: &str = "GRAPHDYN_OUT_DIR";

#[derive(Parser)]
#[command(name = "graphdyn", version, about = "Hybrid graph-state simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and export the trajectory
    Simulate {
        /// Scenario JSON file
        scenario: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check a scenario file and print every violation
    Validate {
        /// Scenario JSON file
        scenario: PathBuf,
    },
    /// Run a built-in study configuration: fig8a|fig8b|fig9a|fig9b|fig10
    PaperScenario {
        #[arg(value_parser = parse_builtin)]
        name: BuiltinScenario,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_builtin(s: &str) -> Result<BuiltinScenario, String> {
    s.parse()
}

#[derive(Args)]
struct CommonArgs {
    /// Output directory root (default: $GRAPHDYN_OUT_DIR, then ./graphdyn-out)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Integrator step (days)
    #[arg(long)]
    dt: Option<f64>,
    /// Simulation horizon (days)
    #[arg(long)]
    t_max: Option<f64>,
    /// Freeze or unfreeze weight dynamics (explicit value: true|false)
    #[arg(long, value_name = "BOOL")]
    freeze_weights: Option<bool>,
    /// Turn off the threshold prune jump
    #[arg(long)]
    disable_jminus: bool,
    /// Turn off the growth-triggered addition jump
    #[arg(long)]
    disable_jplus: bool,
    /// Run without the antibiotic pulse
    #[arg(long)]
    no_antibiotic: bool,
    /// Antibiotic end time (days)
    #[arg(long)]
    t_star: Option<f64>,
    /// Keep every n-th sample in the exported CSVs
    #[arg(long)]
    export_stride: Option<usize>,
}

/// Resolved configuration and run summary, written next to the CSV outputs.
/// Contains nothing time- or host-dependent, so repeat runs are byte-equal.
#[derive(Serialize)]
struct RunManifest {
    command: String,
    source: String,
    overrides: BTreeMap<String, serde_json::Value>,
    resolved: ResolvedConfig,
    summary: RunSummary,
}

#[derive(Serialize)]
struct ResolvedConfig {
    universe: Vec<u32>,
    t_max: f64,
    dt: f64,
    freeze_weights: bool,
    antibiotic: bool,
    t_star: f64,
    alpha: f64,
    beta: f64,
    lambda: f64,
    kappa: f64,
    enable_jminus: bool,
    enable_jplus: bool,
    k_max: u32,
    export_stride: usize,
    schedule_times: Vec<f64>,
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Validate { scenario } => validate(&scenario),
        Command::Simulate { scenario, common } => {
            let loaded = match Scenario::from_file(&scenario) {
                Ok(s) => s,
                Err(errors) => {
                    for e in &errors {
                        eprintln!("invalid scenario: {e}");
                    }
                    return 1;
                }
            };
            let run_name = scenario
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "scenario".to_string());
            execute(loaded, common, "simulate", &scenario.display().to_string(), &run_name)
        }
        Command::PaperScenario { name, common } => {
            let scenario = builtin_scenario(name);
            execute(scenario, common, "paper-scenario", name.name(), name.name())
        }
    }
}

fn validate(path: &Path) -> i32 {
    match Scenario::from_file(path) {
        Ok(s) => {
            println!(
                "scenario ok: {} species universe, {} scheduled inputs, horizon {} days",
                s.universe.len(),
                s.schedule.len(),
                s.t_max
            );
            0
        }
        Err(errors) => {
            for e in &errors {
                eprintln!("invalid scenario: {e}");
            }
            1
        }
    }
}

fn execute(
    mut scenario: Scenario,
    common: CommonArgs,
    command: &str,
    source: &str,
    run_name: &str,
) -> i32 {
    let overrides = apply_overrides(&mut scenario, &common);
    if !(scenario.dt > 0.0) || !(scenario.t_max > 0.0) || scenario.export_stride == 0 {
        eprintln!("invalid override: dt and t_max must be positive, export_stride at least 1");
        return 1;
    }

    let out_root = common
        .out
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("graphdyn-out"));
    let out_dir = out_root.join(run_name);

    let output = match run_scenario(&scenario) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("run failed: {e}");
            return 2;
        }
    };

    let manifest = RunManifest {
        command: command.to_string(),
        source: source.to_string(),
        overrides,
        resolved: ResolvedConfig {
            universe: scenario.universe.iter().collect(),
            t_max: scenario.t_max,
            dt: scenario.dt,
            freeze_weights: scenario.freeze_weights,
            antibiotic: scenario.antibiotic,
            t_star: scenario.params.t_star,
            alpha: scenario.params.alpha,
            beta: scenario.params.beta,
            lambda: scenario.jump_config.lambda,
            kappa: scenario.jump_config.kappa,
            enable_jminus: scenario.jump_config.enable_jminus,
            enable_jplus: scenario.jump_config.enable_jplus,
            k_max: scenario.k_max,
            export_stride: scenario.export_stride,
            schedule_times: scenario.schedule.iter().map(|(t, _)| *t).collect(),
        },
        summary: output.summary,
    };

    if let Err(e) = export_trajectory(&output.arc, &out_dir, scenario.export_stride) {
        eprintln!("export failed: {e}");
        return 2;
    }
    let manifest_text =
        serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    if let Err(e) = std::fs::write(out_dir.join("run_manifest.json"), manifest_text) {
        eprintln!("manifest write failed: {e}");
        return 2;
    }

    let jumps = manifest.summary.jumps.len();
    let (final_t, final_dim) = manifest
        .summary
        .dimension_trace
        .last()
        .map(|&(t, d)| (t, d))
        .unwrap_or((0.0, 0));
    println!(
        "wrote {} ({} samples, {jumps} jumps, dimension {final_dim} since t={final_t})",
        out_dir.display(),
        manifest.summary.sample_count
    );
    if manifest.summary.truncated_by_jump_budget {
        println!("warning: stopped at the jump budget before reaching the horizon");
    }
    for note in &manifest.summary.notes {
        println!("note: {note}");
    }
    0
}

fn apply_overrides(
    scenario: &mut Scenario,
    common: &CommonArgs,
) -> BTreeMap<String, serde_json::Value> {
    let mut applied = BTreeMap::new();
    if let Some(dt) = common.dt {
        scenario.dt = dt;
        applied.insert("dt".into(), dt.into());
    }
    if let Some(t_max) = common.t_max {
        scenario.t_max = t_max;
        applied.insert("t_max".into(), t_max.into());
    }
    if let Some(freeze) = common.freeze_weights {
        scenario.freeze_weights = freeze;
        applied.insert("freeze_weights".into(), freeze.into());
    }
    if common.disable_jminus {
        scenario.jump_config.enable_jminus = false;
        applied.insert("disable_jminus".into(), true.into());
    }
    if common.disable_jplus {
        scenario.jump_config.enable_jplus = false;
        applied.insert("disable_jplus".into(), true.into());
    }
    if common.no_antibiotic {
        scenario.antibiotic = false;
        applied.insert("no_antibiotic".into(), true.into());
    }
    if let Some(t_star) = common.t_star {
        scenario.params.t_star = t_star;
        applied.insert("t_star".into(), t_star.into());
    }
    if let Some(stride) = common.export_stride {
        scenario.export_stride = stride;
        applied.insert("export_stride".into(), stride.into());
    }
    applied
}
