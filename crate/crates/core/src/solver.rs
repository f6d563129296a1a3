use crate::basis::BasisSet;
use crate::hybrid::{apply_jump, classify_jump, HybridTime, JumpCase, JumpConfig, JumpError};
use crate::scalar::Real;
use crate::state::State;
use crate::vb::{BoolTensor, VBTensor, VBVector};

/// Right-hand side of the continuous dynamics. The adjacency derivative is
/// identically zero, so only (x, w) derivatives are returned; both must lie
/// on the same basis as the inputs.
pub trait FlowMap<S: Real> {
    fn rhs(
        &self,
        x: &VBVector<S>,
        w: &VBTensor<S>,
        a: &BoolTensor,
        u: S,
    ) -> (VBVector<S>, VBTensor<S>);
}

/// Piecewise-constant control signal: `initial` until the first switch time,
/// then each switch value from its time on (left-closed convention).
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseConstant<S> {
    pub initial: S,
    pub switches: Vec<(S, S)>,
}

impl<S: Real> PiecewiseConstant<S> {
    pub fn constant(value: S) -> Self {
        Self { initial: value, switches: Vec::new() }
    }

    pub fn value_at(&self, t: S) -> S {
        let mut v = self.initial;
        for &(ts, val) in &self.switches {
            if t >= ts {
                v = val;
            } else {
                break;
            }
        }
        v
    }
}

/// External driving terms: the control signal and the scheduled jump inputs.
#[derive(Clone, Debug)]
pub struct Disturbance<S> {
    pub control: PiecewiseConstant<S>,
    /// (time, input state), strictly increasing times, nonempty bases.
    pub inputs: Vec<(S, State<S>)>,
}

impl<S: Real> Disturbance<S> {
    pub fn none() -> Self {
        Self { control: PiecewiseConstant::constant(S::zero()), inputs: Vec::new() }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for pair in self.control.switches.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(ConfigError::ControlSwitchOrder);
            }
        }
        for pair in self.inputs.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(ConfigError::ScheduleOrder);
            }
        }
        if self.inputs.iter().any(|(_, s)| s.basis().is_empty()) {
            return Err(ConfigError::EmptyInput);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("control switch times must be strictly increasing")]
    ControlSwitchOrder,
    #[error("scheduled input times must be strictly increasing")]
    ScheduleOrder,
    #[error("scheduled input has an empty basis")]
    EmptyInput,
    #[error("dt and t_max must be positive")]
    BadStep,
    #[error("initial state is not canonical: {0}")]
    BadInitialState(String),
    #[error(transparent)]
    BadJumpConfig(#[from] JumpError),
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum SolveError<S: Real> {
    #[error("non-finite state at hybrid time {0}")]
    NonFinite(HybridTime<S>),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("jump failed at hybrid time {at}: {source}")]
    Jump { at: HybridTime<S>, source: JumpError },
}

/// One jump: the transition from segment `k` to segment `k + 1` at time `tau`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JumpRecord<S> {
    pub tau: S,
    pub k: u32,
    pub case: JumpCase,
}

/// Samples of one flow interval. Basis and adjacency are frozen during flow,
/// so they are stored once; rows hold values in canonical basis order.
#[derive(Clone, Debug)]
pub struct Segment<S> {
    pub k: u32,
    pub basis: BasisSet,
    pub adjacency: BoolTensor,
    times: Vec<S>,
    x_rows: Vec<S>,
    w_rows: Vec<S>,
}

impl<S: Real> Segment<S> {
    fn new(k: u32, state: &State<S>) -> Self {
        Self {
            k,
            basis: state.basis(),
            adjacency: state.a().clone(),
            times: Vec::new(),
            x_rows: Vec::new(),
            w_rows: Vec::new(),
        }
    }

    fn push_sample(&mut self, t: S, state: &State<S>) {
        debug_assert_eq!(state.basis(), self.basis);
        self.times.push(t);
        self.x_rows.extend(state.x().values());
        self.w_rows.extend(state.w().values());
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn time(&self, i: usize) -> S {
        self.times[i]
    }

    pub fn times(&self) -> &[S] {
        &self.times
    }

    /// Attribute values at sample `i`, ordered like `basis.iter()`.
    pub fn x_row(&self, i: usize) -> &[S] {
        let n = self.dim();
        &self.x_rows[i * n..(i + 1) * n]
    }

    /// Weight values at sample `i`, ordered like `basis.square().iter()`.
    pub fn w_row(&self, i: usize) -> &[S] {
        let n = self.dim() * self.dim();
        &self.w_rows[i * n..(i + 1) * n]
    }

    pub fn state_at(&self, i: usize) -> State<S> {
        let x = VBVector::from_pairs(self.basis.iter().zip(self.x_row(i).iter().copied()));
        let w = VBTensor::from_pairs(
            self.basis.square().iter().zip(self.w_row(i).iter().copied()),
        );
        State::from_parts_unchecked(x, w, self.adjacency.clone())
    }
}

/// Piecewise trajectory over the hybrid time domain.
#[derive(Clone, Debug, Default)]
pub struct HybridArc<S> {
    pub segments: Vec<Segment<S>>,
    pub jumps: Vec<JumpRecord<S>>,
}

impl<S: Real> HybridArc<S> {
    pub fn sample_count(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    pub fn final_state(&self) -> Option<State<S>> {
        let seg = self.segments.last()?;
        if seg.is_empty() {
            return None;
        }
        Some(seg.state_at(seg.len() - 1))
    }

    /// Basis dimension after each jump, prefixed with the initial dimension.
    pub fn dimension_trace(&self) -> Vec<(S, usize)> {
        let mut out = Vec::new();
        for seg in &self.segments {
            if seg.is_empty() {
                continue;
            }
            match out.last() {
                Some(&(_, d)) if d == seg.dim() => {}
                _ => out.push((seg.time(0), seg.dim())),
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport<S> {
    pub arc: HybridArc<S>,
    /// True when the run stopped because the jump budget was exhausted.
    pub truncated: bool,
    pub notes: Vec<String>,
}

struct Engine<'a, S: Real, F: FlowMap<S> + ?Sized> {
    flow: &'a F,
    cfg: &'a JumpConfig<S>,
    dt: S,
    k_max: u32,
    switch_steps: Vec<(u64, S)>,
    arc: HybridArc<S>,
    notes: Vec<String>,
    truncated: bool,
}

impl<'a, S: Real, F: FlowMap<S> + ?Sized> Engine<'a, S, F> {
    fn u_at(&self, step: u64, initial: S) -> S {
        let mut v = initial;
        for &(s, val) in &self.switch_steps {
            if step >= s {
                v = val;
            } else {
                break;
            }
        }
        v
    }

    fn k(&self) -> u32 {
        self.arc.jumps.len() as u32
    }

    fn jump_budget_left(&self) -> bool {
        self.k() < self.k_max
    }

    /// Applies intrinsic jumps until the state settles, recording each as a
    /// single-sample segment boundary. Returns false when the budget ran out.
    fn settle_intrinsic(
        &mut self,
        state: &mut State<S>,
        t: S,
        open: &mut Segment<S>,
    ) -> Result<bool, SolveError<S>> {
        while let Some(case) = classify_jump(state, None, self.cfg) {
            if !self.jump_budget_left() {
                self.truncated = true;
                return Ok(false);
            }
            let k = self.k();
            let next = apply_jump(state, None, case, self.cfg)
                .map_err(|source| SolveError::Jump { at: HybridTime { t, k }, source })?;
            self.arc.jumps.push(JumpRecord { tau: t, k, case });
            let closed = std::mem::replace(open, Segment::new(self.k(), &next));
            self.arc.segments.push(closed);
            open.push_sample(t, &next);
            *state = next;
        }
        Ok(true)
    }

    fn rk4_step(&self, state: &State<S>, u: S) -> State<S> {
        let two = S::from_f64(2.0).unwrap();
        let six = S::from_f64(6.0).unwrap();
        let half = self.dt / two;
        let a = state.a();
        let (k1x, k1w) = self.flow.rhs(state.x(), state.w(), a, u);
        let (k2x, k2w) =
            self.flow.rhs(&state.x().axpy(half, &k1x), &state.w().axpy(half, &k1w), a, u);
        let (k3x, k3w) =
            self.flow.rhs(&state.x().axpy(half, &k2x), &state.w().axpy(half, &k2w), a, u);
        let (k4x, k4w) =
            self.flow.rhs(&state.x().axpy(self.dt, &k3x), &state.w().axpy(self.dt, &k3w), a, u);
        let sx = k1x.axpy(two, &k2x).axpy(two, &k3x).axpy(S::one(), &k4x);
        let sw = k1w.axpy(two, &k2w).axpy(two, &k3w).axpy(S::one(), &k4w);
        let x = state.x().axpy(self.dt / six, &sx);
        let w = state.w().axpy(self.dt / six, &sw);
        // masking non-edges keeps the canonical form after every step
        state.with_flow_values(x, w)
    }
}

fn finite<S: Real>(state: &State<S>) -> bool {
    state.x().values().all(|v| v.is_finite()) && state.w().values().all(|v| v.is_finite())
}

/// Integrates the flow between jumps and applies jumps per classification.
///
/// Scheduled input times and control switch times are snapped to the nearest
/// step boundary once, up front; sample times at those boundaries take the
/// scheduled value exactly instead of the accumulated grid value.
pub fn solve<S: Real, F: FlowMap<S> + ?Sized>(
    flow: &F,
    x0: State<S>,
    dist: &Disturbance<S>,
    cfg: &JumpConfig<S>,
    t_max: S,
    k_max: u32,
    dt: S,
) -> Result<SolveReport<S>, SolveError<S>> {
    if !(dt > S::zero()) || !(t_max > S::zero()) {
        return Err(ConfigError::BadStep.into());
    }
    cfg.validate().map_err(ConfigError::BadJumpConfig)?;
    dist.validate()?;
    let violations = x0.validate();
    if !violations.is_empty() {
        let text = violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        return Err(ConfigError::BadInitialState(text).into());
    }

    let step_of = |t: S| -> u64 { (t / dt).to_f64().unwrap().round() as u64 };
    let total_steps = step_of(t_max);
    let switch_steps =
        dist.control.switches.iter().map(|&(ts, v)| (step_of(ts), v)).collect::<Vec<_>>();
    let grid_time = |step: u64| -> S { S::from_u64(step).unwrap() * dt };

    let mut engine = Engine {
        flow,
        cfg,
        dt,
        k_max,
        switch_steps,
        arc: HybridArc::default(),
        notes: Vec::new(),
        truncated: false,
    };

    let inputs: Vec<(u64, S, &State<S>)> =
        dist.inputs.iter().map(|(ts, s)| (step_of(*ts), *ts, s)).collect();
    let mut next_input = 0usize;
    let mut state = x0;
    let mut step: u64 = 0;
    let mut t_now = S::zero();
    let u0 = dist.control.initial;

    'outer: loop {
        let mut seg = Segment::new(engine.k(), &state);
        seg.push_sample(t_now, &state);
        if !engine.settle_intrinsic(&mut state, t_now, &mut seg)? {
            engine.arc.segments.push(seg);
            break 'outer;
        }

        let (seg_end_step, end_literal) = match inputs.get(next_input) {
            Some(&(s, ts, _)) if s <= total_steps => (s, ts),
            _ => (total_steps, t_max),
        };

        while step < seg_end_step {
            let u = engine.u_at(step, u0);
            state = engine.rk4_step(&state, u);
            step += 1;
            t_now = if step == seg_end_step { end_literal } else { grid_time(step) };
            seg.push_sample(t_now, &state);
            if !finite(&state) {
                return Err(SolveError::NonFinite(HybridTime { t: t_now, k: engine.k() }));
            }
            if !engine.settle_intrinsic(&mut state, t_now, &mut seg)? {
                engine.arc.segments.push(seg);
                break 'outer;
            }
        }

        if let Some(&(s, ts, input)) = inputs.get(next_input) {
            if s == seg_end_step && s <= total_steps {
                next_input += 1;
                let case = classify_jump(&state, Some(input), engine.cfg)
                    .expect("nonempty scheduled input always classifies");
                if input.basis() == state.basis() {
                    engine.notes.push(format!(
                        "input at t={ts} matches the current basis; applied as full retention"
                    ));
                }
                if !engine.jump_budget_left() {
                    engine.truncated = true;
                    engine.arc.segments.push(seg);
                    break 'outer;
                }
                let k = engine.k();
                let next = apply_jump(&state, Some(input), case, engine.cfg)
                    .map_err(|source| SolveError::Jump { at: HybridTime { t: ts, k }, source })?;
                engine.arc.jumps.push(JumpRecord { tau: ts, k, case });
                engine.arc.segments.push(seg);
                state = next;
                t_now = ts;
                continue 'outer;
            }
        }

        engine.arc.segments.push(seg);
        break 'outer;
    }

    Ok(SolveReport { arc: engine.arc, truncated: engine.truncated, notes: engine.notes })
}
