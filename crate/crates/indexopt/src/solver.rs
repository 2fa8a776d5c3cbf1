//! Index-based information algorithm over a curve-reduced domain.
//!
//! The solver works on the one-dimensional reduction of the problem: every
//! trial evaluates the problem at the image of some `x in [0, 1]` under the
//! curve map, recording the constraint index reached and the function value
//! there. Search intervals between neighbouring trials are scored by a
//! characteristic that balances interval length against estimated function
//! variation, and the interval with the largest characteristic is subdivided
//! next.
//!
//! Two estimates of the local Hölder constants are available
//! ([`EstimateScheme`]): the locally tuned estimate adapts to each
//! interval's neighbourhood, while the global estimate applies one constant
//! per constraint index everywhere. Both guarantee that each subdivision
//! shrinks the chosen interval by at least the factor `(r + 1) / (2 r)`.

use alloc::vec;
use alloc::vec::Vec;

use core::cmp::Ordering;
use core::fmt;

use num_traits::Float;

use crate::curve::{holder_distance, Bounds, CurveMap};
use crate::error::SolverError;
use crate::problem::{ConstrainedProblem, EvalCounters};

/// Tunable parameters of a search run.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverParams {
    /// Reliability multiplier `r > 1` applied to interval estimates; larger
    /// values search more conservatively.
    pub reliability: f64,
    /// Positive lower bound for interval estimates.
    pub xi: f64,
    /// Stopping tolerance on the Hölder length of the selected interval.
    pub tolerance: f64,
    /// Curve subdivision level.
    pub level: u32,
    /// Trial budget (two initial trials included).
    pub max_iterations: usize,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            reliability: 2.2,
            xi: 1e-8,
            tolerance: 1e-3,
            level: 10,
            max_iterations: 5000,
        }
    }
}

impl SolverParams {
    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.reliability > 1.0) || !self.reliability.is_finite() {
            return Err(SolverError::InvalidReliability(self.reliability));
        }
        if !(self.xi > 0.0) || !self.xi.is_finite() {
            return Err(SolverError::InvalidXi(self.xi));
        }
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(SolverError::InvalidTolerance(self.tolerance));
        }
        Ok(())
    }
}

/// Strategy for the per-interval Hölder constant estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateScheme {
    /// Blend of neighbourhood difference quotients and the scaled global
    /// estimate; adapts to local behaviour.
    LocallyTuned,
    /// One global estimate per constraint index, uniform over intervals.
    Global,
}

/// A performed trial on the reduced axis: position, constraint index
/// reached, and the raw value of the function that defined the index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialPoint {
    pub x: f64,
    pub index: usize,
    pub value: f64,
}

/// A trial with its multidimensional image, in evaluation order.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub x: f64,
    pub point: Vec<f64>,
    pub index: usize,
    pub value: f64,
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The selected interval's Hölder length reached the tolerance.
    Tolerance,
    /// The trial budget was exhausted.
    MaxIterations,
    /// The next trial would have been closer to an existing one than the
    /// curve approximation can distinguish.
    Resolution,
}

impl StopReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            StopReason::Tolerance => "tolerance",
            StopReason::MaxIterations => "max-iterations",
            StopReason::Resolution => "resolution",
        }
    }
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a search run.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverResult {
    /// Smallest objective value among feasible trials, if any were found.
    pub best_value: Option<f64>,
    /// The feasible trial point attaining `best_value`, in domain
    /// coordinates.
    pub best_point: Option<Vec<f64>>,
    /// Reduced-axis position of the best trial.
    pub best_x: Option<f64>,
    /// Number of trials performed (the two initial trials included).
    pub iterations: usize,
    pub stop_reason: StopReason,
    pub counters: EvalCounters,
    /// Every trial in evaluation order.
    pub trials: Vec<TrialRecord>,
}

/// Derived quantities of one search interval under a given scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalEstimate {
    /// Hölder length of the interval.
    pub delta: f64,
    /// Largest neighbourhood difference quotient (locally tuned scheme).
    pub lambda: f64,
    /// Globally scaled estimate component (locally tuned scheme).
    pub gamma: f64,
    /// Final estimate entering the characteristic.
    pub m_value: f64,
    pub characteristic: f64,
}

/// The interval chosen for the next subdivision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Selection {
    /// Interval position: between `trials()[interval]` and
    /// `trials()[interval + 1]`.
    pub interval: usize,
    pub delta: f64,
    pub m_value: f64,
    pub characteristic: f64,
}

/// Result of one subdivision attempt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepOutcome {
    /// A trial was placed strictly inside the selected interval.
    Placed { left_x: f64, new_x: f64, right_x: f64, index: usize },
    /// The new point would not be distinguishable from an existing trial at
    /// the curve's resolution; the state is unchanged.
    ResolutionReached,
}

/// Cached per-interval quantities: the Hölder length and the difference
/// quotient of the endpoint values (zero when the endpoint indices differ).
#[derive(Debug, Clone, Copy)]
struct GapCache {
    delta: f64,
    quotient: f64,
}

/// Mutable state of one search run over `[0, 1]`.
#[derive(Debug, Clone)]
pub struct SearchState {
    curve: CurveMap,
    domain: Bounds,
    dimension: usize,
    feasible_index: usize,
    trials: Vec<TrialPoint>,
    gaps: Vec<GapCache>,
    /// Per index class: (x, value) of every trial with that index.
    class_points: Vec<Vec<(f64, f64)>>,
    /// Per index class: largest `|dv|^N / dx` over same-class trial pairs.
    mu_pow: Vec<f64>,
    /// Per index class: the running difference-quotient estimate, the
    /// `N`-th root of `mu_pow`. Grows monotonically.
    mu: Vec<f64>,
    /// Per index class: largest interval Hölder length among intervals of
    /// that class; refreshed by [`SearchState::select`].
    x_max: Vec<f64>,
    /// Smallest objective value seen over feasible trials.
    z_star: Option<f64>,
    best_log: Option<usize>,
    log: Vec<TrialRecord>,
    counters: EvalCounters,
}

impl SearchState {
    /// Starts a run by evaluating the reduced endpoints `x = 0` and `x = 1`.
    pub fn initialize(
        problem: &ConstrainedProblem,
        params: &SolverParams,
    ) -> Result<SearchState, SolverError> {
        params.validate()?;
        let curve = CurveMap::new(problem.dimension(), params.level)?;
        let classes = problem.feasible_index();
        let mut state = SearchState {
            curve,
            domain: problem.domain().clone(),
            dimension: problem.dimension(),
            feasible_index: classes,
            trials: Vec::new(),
            gaps: Vec::new(),
            class_points: vec![Vec::new(); classes],
            mu_pow: vec![0.0; classes],
            mu: vec![0.0; classes],
            x_max: vec![0.0; classes],
            z_star: None,
            best_log: None,
            log: Vec::new(),
            counters: EvalCounters::new(problem.constraint_count()),
        };
        let first = state.evaluate_trial(0.0, problem)?;
        state.trials.push(first);
        let second = state.evaluate_trial(1.0, problem)?;
        let gap = state.gap_between(&state.trials[0], &second);
        state.trials.push(second);
        state.gaps.push(gap);
        Ok(state)
    }

    /// Trials sorted by position on the reduced axis.
    pub fn trials(&self) -> &[TrialPoint] {
        &self.trials
    }

    /// Trials in evaluation order, with domain coordinates.
    pub fn trial_log(&self) -> &[TrialRecord] {
        &self.log
    }

    /// Difference-quotient estimates, one per index class (entry `j - 1`
    /// for class `j`).
    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    /// Largest interval Hölder length per index class, as of the last
    /// [`SearchState::select`].
    pub fn x_max(&self) -> &[f64] {
        &self.x_max
    }

    /// Record objective value over feasible trials.
    pub fn z_star(&self) -> Option<f64> {
        self.z_star
    }

    pub fn counters(&self) -> &EvalCounters {
        &self.counters
    }

    /// Completed subdivisions: `trials().len() - 1`.
    pub fn iteration(&self) -> usize {
        self.trials.len() - 1
    }

    /// Number of trials performed.
    pub fn trial_count(&self) -> usize {
        self.trials.len()
    }

    pub fn resolution(&self) -> f64 {
        self.curve.resolution()
    }

    /// Value entering the characteristic for a trial: constraint values are
    /// used as recorded, objective values are shifted by the running record
    /// so that feasible z-values stay non-negative.
    fn z_of(&self, trial: &TrialPoint) -> f64 {
        if trial.index == self.feasible_index {
            trial.value - self.z_star.expect("a feasible trial implies a record value")
        } else {
            trial.value
        }
    }

    fn gap_between(&self, left: &TrialPoint, right: &TrialPoint) -> GapCache {
        debug_assert!(left.x < right.x);
        let delta = holder_distance(left.x, right.x, self.dimension);
        let quotient = if left.index == right.index {
            (right.value - left.value).abs() / delta
        } else {
            0.0
        };
        GapCache { delta, quotient }
    }

    /// Evaluates the problem at the curve image of `x` and folds the trial
    /// into the log, the record, and the difference-quotient estimates. The
    /// caller inserts the returned trial into the ordered list.
    fn evaluate_trial(
        &mut self,
        x: f64,
        problem: &ConstrainedProblem,
    ) -> Result<TrialPoint, SolverError> {
        let cube = self.curve.map_to_cube(x)?;
        let point = self.domain.from_cube(&cube);
        let eval = problem.evaluate_indexed(&point, &mut self.counters)?;
        self.log.push(TrialRecord { x, point, index: eval.index, value: eval.value });
        if eval.index == self.feasible_index {
            if self.z_star.is_none_or(|z| eval.value < z) {
                self.z_star = Some(eval.value);
                self.best_log = Some(self.log.len() - 1);
            }
        }
        self.absorb_into_mu(eval.index, x, eval.value);
        Ok(TrialPoint { x, index: eval.index, value: eval.value })
    }

    /// Extends the class-`j` estimate with the quotients of every pair the
    /// new trial forms. The estimate is a maximum over a growing set, so it
    /// never decreases.
    fn absorb_into_mu(&mut self, index: usize, x: f64, value: f64) {
        let slot = index - 1;
        let n = self.dimension as i32;
        let mut best = self.mu_pow[slot];
        for &(xp, vp) in &self.class_points[slot] {
            let q = (value - vp).abs().powi(n) / (x - xp).abs();
            if q > best {
                best = q;
            }
        }
        if best > self.mu_pow[slot] {
            self.mu_pow[slot] = best;
            self.mu[slot] =
                if self.dimension == 1 { best } else { best.powf(1.0 / self.dimension as f64) };
        }
        self.class_points[slot].push((x, value));
    }

    /// Estimates for the interval at position `q`; `x_max` must be fresh.
    fn estimate_gap(&self, q: usize, params: &SolverParams, scheme: EstimateScheme) -> IntervalEstimate {
        let left = &self.trials[q];
        let right = &self.trials[q + 1];
        let gap = &self.gaps[q];
        let center = gap.quotient;
        let left_q = if q >= 1
            && self.trials[q - 1].index == left.index
            && left.index >= right.index
        {
            self.gaps[q - 1].quotient
        } else {
            0.0
        };
        let right_q = if q + 1 < self.gaps.len()
            && self.trials[q + 2].index == right.index
            && right.index >= left.index
        {
            self.gaps[q + 1].quotient
        } else {
            0.0
        };
        let lambda = left_q.max(center).max(right_q);
        let class = left.index.max(right.index);
        let gamma = if self.x_max[class - 1] > 0.0 {
            self.mu[class - 1] * gap.delta / self.x_max[class - 1]
        } else {
            0.0
        };
        let m_value = match scheme {
            EstimateScheme::LocallyTuned => lambda.max(gamma).max(params.xi),
            EstimateScheme::Global => self.mu[class - 1].max(params.xi),
        };
        let rm = params.reliability * m_value;
        let characteristic =
            characteristic(gap.delta, left.index, self.z_of(left), right.index, self.z_of(right), rm);
        IntervalEstimate { delta: gap.delta, lambda, gamma, m_value, characteristic }
    }

    fn refresh_x_max(&mut self) {
        for entry in &mut self.x_max {
            *entry = 0.0;
        }
        for (q, gap) in self.gaps.iter().enumerate() {
            let class = self.trials[q].index.max(self.trials[q + 1].index);
            if gap.delta > self.x_max[class - 1] {
                self.x_max[class - 1] = gap.delta;
            }
        }
    }

    /// All interval estimates under the given scheme, in interval order.
    /// Refreshes the per-class length maxima first.
    pub fn interval_estimates(
        &mut self,
        params: &SolverParams,
        scheme: EstimateScheme,
    ) -> Vec<IntervalEstimate> {
        self.refresh_x_max();
        (0..self.gaps.len()).map(|q| self.estimate_gap(q, params, scheme)).collect()
    }

    /// Scores every interval and returns the one with the largest
    /// characteristic (ties broken toward the leftmost interval).
    pub fn select(&mut self, params: &SolverParams, scheme: EstimateScheme) -> Selection {
        self.refresh_x_max();
        let mut best: Option<Selection> = None;
        for q in 0..self.gaps.len() {
            let est = self.estimate_gap(q, params, scheme);
            if best.is_none_or(|b| est.characteristic > b.characteristic) {
                best = Some(Selection {
                    interval: q,
                    delta: est.delta,
                    m_value: est.m_value,
                    characteristic: est.characteristic,
                });
            }
        }
        best.expect("a search state always holds at least one interval")
    }

    /// Subdivides the selected interval: computes the new trial position,
    /// evaluates it, and splices it into the ordered state. Returns
    /// [`StepOutcome::ResolutionReached`] without evaluating when the new
    /// position is not distinguishable from an endpoint.
    pub fn place(
        &mut self,
        selection: &Selection,
        problem: &ConstrainedProblem,
        params: &SolverParams,
    ) -> Result<StepOutcome, SolverError> {
        let t = selection.interval;
        let left = self.trials[t];
        let right = self.trials[t + 1];
        let x_new = subdivision_point(
            &left,
            &right,
            selection.m_value,
            params.reliability,
            self.dimension,
        );
        let resolution = self.curve.resolution();
        if x_new - left.x < resolution || right.x - x_new < resolution {
            return Ok(StepOutcome::ResolutionReached);
        }
        debug_assert!(left.x < x_new && x_new < right.x);
        debug_assert!({
            let alpha = (params.reliability + 1.0) / (2.0 * params.reliability);
            let pieces = (x_new - left.x).max(right.x - x_new);
            pieces <= alpha * (right.x - left.x) * (1.0 + 1e-12)
        });
        let trial = self.evaluate_trial(x_new, problem)?;
        let gap_left = self.gap_between(&left, &trial);
        let gap_right = self.gap_between(&trial, &right);
        self.trials.insert(t + 1, trial);
        self.gaps[t] = gap_left;
        self.gaps.insert(t + 1, gap_right);
        Ok(StepOutcome::Placed {
            left_x: left.x,
            new_x: x_new,
            right_x: right.x,
            index: trial.index,
        })
    }

    /// One full search step: select the best interval and subdivide it.
    pub fn step(
        &mut self,
        problem: &ConstrainedProblem,
        params: &SolverParams,
        scheme: EstimateScheme,
    ) -> Result<StepOutcome, SolverError> {
        let selection = self.select(params, scheme);
        self.place(&selection, problem, params)
    }

    /// Finishes the run, consuming the state.
    pub fn into_result(self, stop_reason: StopReason) -> SolverResult {
        let best = self.best_log.map(|i| self.log[i].clone());
        debug_assert_eq!(
            self.log
                .iter()
                .filter(|t| t.index == self.feasible_index)
                .map(|t| t.value)
                .fold(f64::INFINITY, f64::min),
            best.as_ref().map_or(f64::INFINITY, |b| b.value)
        );
        SolverResult {
            best_value: best.as_ref().map(|b| b.value),
            best_point: best.as_ref().map(|b| b.point.clone()),
            best_x: best.map(|b| b.x),
            iterations: self.log.len(),
            stop_reason,
            counters: self.counters,
            trials: self.log,
        }
    }
}

/// Interval characteristic. `rm` is the reliability-weighted estimate
/// `r * M`; `z` values must already carry the record shift.
fn characteristic(
    delta: f64,
    index_left: usize,
    z_left: f64,
    index_right: usize,
    z_right: f64,
    rm: f64,
) -> f64 {
    match index_right.cmp(&index_left) {
        Ordering::Equal => {
            let dz = z_right - z_left;
            delta + dz * dz / (rm * rm * delta) - 2.0 * (z_right + z_left) / rm
        }
        Ordering::Greater => 2.0 * delta - 4.0 * z_right / rm,
        Ordering::Less => 2.0 * delta - 4.0 * z_left / rm,
    }
}

/// Position of the next trial inside the interval. With equal endpoint
/// indices the midpoint shifts toward the lower value, by at most
/// `(x_right - x_left) / (2 r)`; otherwise the interval is bisected.
fn subdivision_point(
    left: &TrialPoint,
    right: &TrialPoint,
    m_value: f64,
    reliability: f64,
    dimension: usize,
) -> f64 {
    let mid = 0.5 * (left.x + right.x);
    if left.index != right.index {
        return mid;
    }
    // Same class on both ends: any record shift cancels in the difference.
    let dv = right.value - left.value;
    if dv == 0.0 {
        return mid;
    }
    let n = dimension as i32;
    let offset = dv.abs().powi(n) / (2.0 * reliability * m_value.powi(n));
    if dv > 0.0 {
        mid - offset
    } else {
        mid + offset
    }
}

/// Runs the locally tuned index method on a problem.
pub fn solve(
    problem: &ConstrainedProblem,
    params: &SolverParams,
) -> Result<SolverResult, SolverError> {
    solve_with_scheme(problem, params, EstimateScheme::LocallyTuned)
}

/// Runs the index method with an explicit estimate scheme. The two schemes
/// share this entire pipeline and differ only in the per-interval estimate.
pub fn solve_with_scheme(
    problem: &ConstrainedProblem,
    params: &SolverParams,
    scheme: EstimateScheme,
) -> Result<SolverResult, SolverError> {
    let mut state = SearchState::initialize(problem, params)?;
    let reason = loop {
        let selection = state.select(params, scheme);
        if selection.delta <= params.tolerance {
            break StopReason::Tolerance;
        }
        if state.trial_count() >= params.max_iterations {
            break StopReason::MaxIterations;
        }
        match state.place(&selection, problem, params)? {
            StepOutcome::Placed { .. } => {}
            StepOutcome::ResolutionReached => break StopReason::Resolution,
        }
    };
    Ok(state.into_result(reason))
}

/// Reliability threshold sufficient for convergence to global minimizers,
/// from the problem's attached Lipschitz bounds: `None` when no bounds are
/// attached. `xi` must be positive.
pub fn reliability_threshold(problem: &ConstrainedProblem, xi: f64) -> Option<f64> {
    debug_assert!(xi > 0.0);
    let bounds = problem.lipschitz_bounds()?;
    let largest = bounds.iter().cloned().fold(0.0, f64::max);
    let n = problem.dimension() as f64;
    Some(2.0.powf(3.0 - 1.0 / n) / xi * (n + 3.0).sqrt() * largest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Bounds;
    use crate::problem::ProblemFn;
    use alloc::sync::Arc;

    fn unconstrained_1d(objective: fn(&[f64]) -> f64) -> ConstrainedProblem {
        let domain = Bounds::new(vec![0.0], vec![1.0]).unwrap();
        let obj: ProblemFn = Arc::new(objective);
        ConstrainedProblem::new("line", domain, vec![], obj)
    }

    #[test]
    fn characteristic_matches_worked_examples() {
        // Equal indices: delta + dz^2/(rm^2 delta) - 2 (z_l + z_r)/rm.
        let r = characteristic(1.0, 2, 0.0, 2, 1.0, 2.0);
        assert!((r - 0.25).abs() < 1e-15);
        // Right index larger: 2 delta - 4 z_r / rm.
        let r = characteristic(1.0, 1, 9.0, 2, 1.0, 2.0);
        assert!((r - 0.0).abs() < 1e-15);
        // Left index larger: 2 delta - 4 z_l / rm.
        let r = characteristic(0.5, 3, 2.0, 1, 9.0, 4.0);
        assert!((r - (1.0 - 2.0)).abs() < 1e-15);
    }

    #[test]
    fn subdivision_point_matches_worked_example() {
        let left = TrialPoint { x: 0.0, index: 1, value: 0.0 };
        let right = TrialPoint { x: 1.0, index: 1, value: 1.0 };
        // N = 2, r = 2, M = 2: midpoint shifted left by 1/16.
        let x = subdivision_point(&left, &right, 2.0, 2.0, 2);
        assert!((x - 0.4375).abs() < 1e-15);
        // Decreasing values shift right instead.
        let falling = TrialPoint { x: 0.0, index: 1, value: 2.0 };
        let x = subdivision_point(&falling, &TrialPoint { value: 1.0, ..right }, 2.0, 2.0, 2);
        assert!((x - 0.5625).abs() < 1e-15);
        // Different indices bisect.
        let mixed = TrialPoint { x: 1.0, index: 2, value: 1.0 };
        assert_eq!(subdivision_point(&left, &mixed, 2.0, 2.0, 2), 0.5);
        // Equal values bisect.
        let flat = TrialPoint { x: 1.0, index: 1, value: 0.0 };
        assert_eq!(subdivision_point(&left, &flat, 2.0, 2.0, 2), 0.5);
    }

    #[test]
    fn shrink_factor_bound_is_tight() {
        // The offset never exceeds gap / (2 r) because the estimate already
        // dominates the interval's own difference quotient.
        let left = TrialPoint { x: 0.0, index: 1, value: 0.0 };
        let right = TrialPoint { x: 1.0, index: 1, value: 3.0 };
        let m = 3.0f64; // exactly the difference quotient for N = 1
        let x = subdivision_point(&left, &right, m, 2.0, 1);
        let alpha = (2.0 + 1.0) / (2.0 * 2.0);
        assert!(x > 0.0 && x < 1.0);
        assert!(x.max(1.0 - x) <= alpha);
    }

    #[test]
    fn params_validation() {
        let mut params = SolverParams::default();
        params.reliability = 1.0;
        assert!(matches!(params.validate(), Err(SolverError::InvalidReliability(_))));
        params = SolverParams { xi: 0.0, ..SolverParams::default() };
        assert!(matches!(params.validate(), Err(SolverError::InvalidXi(_))));
        params = SolverParams { tolerance: -1.0, ..SolverParams::default() };
        assert!(matches!(params.validate(), Err(SolverError::InvalidTolerance(_))));
        assert!(SolverParams::default().validate().is_ok());
    }

    #[test]
    fn initialization_places_the_interval_endpoints() {
        let problem = crate::registry::get_problem("P1", None).unwrap();
        let params = SolverParams::default();
        let state = SearchState::initialize(&problem, &params).unwrap();
        assert_eq!(state.trial_count(), 2);
        assert_eq!(state.iteration(), 1);
        assert_eq!(state.trials()[0].x, 0.0);
        assert_eq!(state.trials()[1].x, 1.0);
        assert_eq!(state.counters().constraint_evals()[0], 2);
        assert_eq!(state.trial_log().len(), 2);
    }

    #[test]
    fn solves_a_smooth_line_problem() {
        let problem = unconstrained_1d(|y| (y[0] - 0.3) * (y[0] - 0.3));
        let params = SolverParams { tolerance: 1e-4, ..SolverParams::default() };
        let result = solve(&problem, &params).unwrap();
        assert_eq!(result.stop_reason, StopReason::Tolerance);
        let best = result.best_point.unwrap();
        assert!((best[0] - 0.3).abs() < 1e-3, "found {}", best[0]);
        assert!(result.best_value.unwrap() < 1e-6);
        assert_eq!(result.iterations, result.trials.len());
        // Unconstrained: every trial is feasible and counted once.
        assert_eq!(result.counters.objective_evals() as usize, result.iterations);
    }

    #[test]
    fn budget_stop_is_reported() {
        let problem = unconstrained_1d(|y| y[0]);
        let params =
            SolverParams { max_iterations: 2, tolerance: 1e-300, ..SolverParams::default() };
        let result = solve(&problem, &params).unwrap();
        assert_eq!(result.stop_reason, StopReason::MaxIterations);
        assert_eq!(result.iterations, 2);

        let params = SolverParams { max_iterations: 25, ..params };
        let result = solve(&problem, &params).unwrap();
        assert_eq!(result.stop_reason, StopReason::MaxIterations);
        assert_eq!(result.iterations, 25);
    }

    #[test]
    fn resolution_stop_on_a_coarse_curve() {
        let domain = Bounds::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let obj: ProblemFn = Arc::new(|y: &[f64]| y[0] + y[1]);
        let problem = ConstrainedProblem::new("coarse", domain, vec![], obj);
        let params = SolverParams {
            level: 1, // four cells, resolution 1/4
            tolerance: 1e-12,
            ..SolverParams::default()
        };
        let result = solve(&problem, &params).unwrap();
        assert_eq!(result.stop_reason, StopReason::Resolution);
        // No two trials sit closer than the resolution.
        let mut xs: Vec<f64> = result.trials.iter().map(|t| t.x).collect();
        xs.sort_by(f64::total_cmp);
        for pair in xs.windows(2) {
            assert!(pair[1] - pair[0] >= 0.25);
        }
    }

    #[test]
    fn best_value_is_the_exact_feasible_minimum() {
        let problem = crate::registry::get_problem("P1", None).unwrap();
        let params = SolverParams { max_iterations: 60, ..SolverParams::default() };
        let result = solve(&problem, &params).unwrap();
        let feasible_min = result
            .trials
            .iter()
            .filter(|t| t.index == 4)
            .map(|t| t.value)
            .fold(f64::INFINITY, f64::min);
        match result.best_value {
            Some(v) => assert_eq!(v, feasible_min),
            None => assert_eq!(feasible_min, f64::INFINITY),
        }
        // Raw constraint values at violated indices stay strictly positive.
        for t in &result.trials {
            assert!((1..=4).contains(&t.index));
            if t.index < 4 {
                assert!(t.value > 0.0);
            }
        }
    }

    #[test]
    fn reliability_threshold_matches_worked_example() {
        let domain = Bounds::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let obj: ProblemFn = Arc::new(|y: &[f64]| y[0] + y[1]);
        let problem = ConstrainedProblem::new("flat", domain, vec![], obj)
            .with_lipschitz_bounds(vec![1.0]);
        let r = reliability_threshold(&problem, 1.0).unwrap();
        assert!((r - 12.649110640673518).abs() < 1e-12);
        let without = ConstrainedProblem::new(
            "plain",
            Bounds::new(vec![0.0], vec![1.0]).unwrap(),
            vec![],
            Arc::new(|y: &[f64]| y[0]) as ProblemFn,
        );
        assert!(reliability_threshold(&without, 1.0).is_none());
    }
}
