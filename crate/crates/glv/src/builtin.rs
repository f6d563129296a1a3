use graphdyn_core::{BasisSet, BoolTensor, JumpConfig, Label, State64, VBTensor, VBVector};

use crate::params::{parse_params, GlvParams};
use crate::scenario::Scenario;

/// The eleven-species gut community universe.
pub fn eleven_species_universe() -> BasisSet {
    (1..=11).collect()
}

pub fn default_params() -> GlvParams {
    parse_params(include_str!("../data/params.csv").as_bytes())
        .expect("bundled parameter table parses")
}

/// Pre-treatment resident community: four species, fully connected with
/// loops, interaction weights row-indexed by target species.
pub fn resident_initial_state() -> State64 {
    let x = VBVector::from_pairs([(1, 0.7), (2, 0.3), (4, 1.2), (5, 1.3)]);
    let w = [
        ((1, 1), -0.21),
        ((1, 2), 0.1),
        ((1, 4), -0.16),
        ((1, 5), -0.014),
        ((2, 1), 0.06),
        ((2, 2), -0.1),
        ((2, 4), -0.15),
        ((2, 5), -0.19),
        ((4, 1), 0.22),
        ((4, 2), 0.14),
        ((4, 4), -0.83),
        ((4, 5), -0.22),
        ((5, 1), -0.18),
        ((5, 2), 0.0),
        ((5, 4), -0.05),
        ((5, 5), -0.51),
    ];
    let square = x.basis().square();
    State64::canonical(x, VBTensor::from_pairs(w), BoolTensor::ones(&square))
}

/// Complete-with-loops input over the listed labels: attributes as given,
/// weights zero except the stated directed entries, adjacency all ones.
/// Unstated pairs carry weight zero but stay present, so weight adaptation
/// can later grow interactions (in particular self-limitation) on them.
fn square_input(attrs: &[(Label, f64)], weights: &[((Label, Label), f64)]) -> State64 {
    let x = VBVector::from_pairs(attrs.iter().copied());
    let square = x.basis().square();
    let mut w = VBTensor::zeros(&square);
    for &((p, q), v) in weights {
        w.set(p, q, v);
    }
    State64::canonical(x, w, BoolTensor::ones(&square))
}

/// The three bacteriotherapy inputs.
///
/// Day 190 introduces species 9 acting on the residents (directed: the
/// residents' effect on 9 is left at zero; a reciprocal copy makes the
/// community unconditionally unstable because 9 carries no self-limitation).
/// Day 330 introduces species 3 and 8 with reciprocal interactions. Day 560
/// retains {1, 2, 4} with zero perturbation.
pub fn bacteriotherapy_schedule() -> Vec<(f64, State64)> {
    let day190 = square_input(
        &[(1, 0.0), (2, 0.0), (4, 0.0), (5, 0.0), (9, 0.85)],
        &[((1, 9), 0.35), ((2, 9), -0.03), ((4, 9), 0.67), ((5, 9), 0.16)],
    );
    let day330 = square_input(
        &[(1, 0.0), (2, 0.0), (3, 0.6), (4, 0.0), (5, 0.0), (8, 0.8), (9, 0.0)],
        &[
            ((3, 8), -0.77),
            ((8, 3), -0.77),
            ((3, 1), 0.14),
            ((1, 3), 0.14),
            ((3, 2), -0.04),
            ((2, 3), -0.04),
            ((3, 4), -0.13),
            ((4, 3), -0.13),
            ((3, 5), -0.17),
            ((5, 3), -0.17),
            ((3, 9), 0.30),
            ((9, 3), 0.30),
            ((8, 1), -0.4),
            ((1, 8), -0.4),
            ((8, 2), -0.41),
            ((2, 8), -0.41),
            ((8, 4), -1.01),
            ((4, 8), -1.01),
            ((8, 5), 0.55),
            ((5, 8), 0.55),
            ((8, 9), 0.44),
            ((9, 8), 0.44),
        ],
    );
    let day560 = square_input(&[(1, 0.0), (2, 0.0), (4, 0.0)], &[]);
    vec![(190.0, day190), (330.0, day330), (560.0, day560)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinScenario {
    /// Untreated residents, frozen weights, long horizon: settles to a
    /// steady state.
    Fig8a,
    /// Antibiotic pulse only, 50-day horizon.
    Fig8b,
    /// Antibiotic + bacteriotherapy schedule, pruning disabled.
    Fig9a,
    /// Antibiotic + bacteriotherapy schedule, pruning enabled.
    Fig9b,
    /// As Fig9b but with live weight dynamics.
    Fig10,
}

impl BuiltinScenario {
    pub const ALL: [BuiltinScenario; 5] = [
        BuiltinScenario::Fig8a,
        BuiltinScenario::Fig8b,
        BuiltinScenario::Fig9a,
        BuiltinScenario::Fig9b,
        BuiltinScenario::Fig10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinScenario::Fig8a => "fig8a",
            BuiltinScenario::Fig8b => "fig8b",
            BuiltinScenario::Fig9a => "fig9a",
            BuiltinScenario::Fig9b => "fig9b",
            BuiltinScenario::Fig10 => "fig10",
        }
    }
}

impl std::str::FromStr for BuiltinScenario {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinScenario::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown scenario {s:?}; expected one of fig8a|fig8b|fig9a|fig9b|fig10"))
    }
}

pub fn builtin_scenario(which: BuiltinScenario) -> Scenario {
    let (t_max, antibiotic, scheduled, enable_jminus, freeze_weights) = match which {
        BuiltinScenario::Fig8a => (200.0, false, false, true, true),
        BuiltinScenario::Fig8b => (50.0, true, false, true, true),
        BuiltinScenario::Fig9a => (700.0, true, true, false, true),
        BuiltinScenario::Fig9b => (700.0, true, true, true, true),
        BuiltinScenario::Fig10 => (700.0, true, true, true, false),
    };
    Scenario {
        universe: eleven_species_universe(),
        initial: resident_initial_state(),
        params: default_params(),
        jump_config: JumpConfig { enable_jminus, ..Default::default() },
        schedule: if scheduled { bacteriotherapy_schedule() } else { Vec::new() },
        t_max,
        dt: 0.01,
        freeze_weights,
        antibiotic,
        k_max: 64,
        export_stride: 100,
    }
}
