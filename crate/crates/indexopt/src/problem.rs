//! Constrained global optimization problems and their indexed evaluation.
//!
//! A problem is a box domain, an ordered list of inequality constraints
//! `G_i(y) <= 0`, and an objective to minimize. Constraints are *partially
//! defined*: `G_{i+1}` is only meaningful where `G_1..G_i` all hold, so a
//! single evaluation walks the constraints in order and stops at the first
//! violation. The result carries the 1-based *index* of the stopping
//! function — `m + 1` means the point is feasible and the value is the
//! objective's.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::curve::Bounds;
use crate::error::EvalError;

/// Shared scalar function of a point.
pub type ProblemFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Reference minimizer attached to a problem, when one is known.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownSolution {
    pub point: Vec<f64>,
    pub value: f64,
}

/// Per-function evaluation tallies of one search run.
///
/// `constraint_evals()[i]` counts evaluations of the `i`-th constraint (in
/// defining order). Because evaluation stops at the first violated
/// constraint, the tallies are non-increasing along the list, and the
/// objective tally never exceeds the last constraint's.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EvalCounters {
    pub(crate) constraints: Vec<u64>,
    pub(crate) objective: u64,
}

impl EvalCounters {
    pub fn new(constraint_count: usize) -> Self {
        EvalCounters { constraints: vec![0; constraint_count], objective: 0 }
    }

    pub fn constraint_evals(&self) -> &[u64] {
        &self.constraints
    }

    pub fn objective_evals(&self) -> u64 {
        self.objective
    }

    /// Evaluations across all functions.
    pub fn total(&self) -> u64 {
        self.constraints.iter().sum::<u64>() + self.objective
    }
}

/// Outcome of an indexed evaluation: the 1-based index of the first violated
/// constraint and its (positive) value, or `m + 1` and the objective value
/// when every constraint holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexedValue {
    pub index: usize,
    pub value: f64,
}

/// A box-constrained minimization problem with ordered, partially defined
/// inequality constraints.
#[derive(Clone)]
pub struct ConstrainedProblem {
    name: String,
    domain: Bounds,
    constraints: Vec<ProblemFn>,
    objective: ProblemFn,
    known_solution: Option<KnownSolution>,
    lipschitz_bounds: Option<Vec<f64>>,
}

impl core::fmt::Debug for ConstrainedProblem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ConstrainedProblem")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("constraints", &self.constraints.len())
            .field("known_solution", &self.known_solution)
            .finish_non_exhaustive()
    }
}

impl ConstrainedProblem {
    pub fn new(
        name: impl Into<String>,
        domain: Bounds,
        constraints: Vec<ProblemFn>,
        objective: ProblemFn,
    ) -> Self {
        ConstrainedProblem {
            name: name.into(),
            domain,
            constraints,
            objective,
            known_solution: None,
            lipschitz_bounds: None,
        }
    }

    pub fn with_known_solution(mut self, point: Vec<f64>, value: f64) -> Self {
        assert_eq!(point.len(), self.dimension(), "known solution dimension");
        self.known_solution = Some(KnownSolution { point, value });
        self
    }

    /// Attaches Lipschitz bounds, one per constraint in order and the
    /// objective's last.
    pub fn with_lipschitz_bounds(mut self, bounds: Vec<f64>) -> Self {
        assert_eq!(bounds.len(), self.constraints.len() + 1, "one bound per function");
        self.lipschitz_bounds = Some(bounds);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.domain.dimension()
    }

    /// Number of constraints, `m`.
    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// Index reported for feasible points, `m + 1`.
    pub fn feasible_index(&self) -> usize {
        self.constraints.len() + 1
    }

    pub fn domain(&self) -> &Bounds {
        &self.domain
    }

    pub fn known_solution(&self) -> Option<&KnownSolution> {
        self.known_solution.as_ref()
    }

    pub fn lipschitz_bounds(&self) -> Option<&[f64]> {
        self.lipschitz_bounds.as_deref()
    }

    pub(crate) fn objective_fn(&self) -> &ProblemFn {
        &self.objective
    }

    pub(crate) fn constraint_fns(&self) -> &[ProblemFn] {
        &self.constraints
    }

    /// Evaluates constraints in order until one is violated (`G_i > 0`),
    /// then returns its index and value; if all hold, evaluates and returns
    /// the objective with index `m + 1`. Every function actually evaluated
    /// is tallied in `counters`.
    pub fn evaluate_indexed(
        &self,
        point: &[f64],
        counters: &mut EvalCounters,
    ) -> Result<IndexedValue, EvalError> {
        assert_eq!(point.len(), self.dimension(), "point dimension");
        debug_assert_eq!(counters.constraints.len(), self.constraints.len());
        for (axis, (&y, (&a, &b))) in point
            .iter()
            .zip(self.domain.lower().iter().zip(self.domain.upper()))
            .enumerate()
        {
            if !(y >= a && y <= b) {
                return Err(EvalError::OutsideDomain { axis, value: y });
            }
        }
        for (i, g) in self.constraints.iter().enumerate() {
            counters.constraints[i] += 1;
            let value = g(point);
            if !value.is_finite() {
                return Err(EvalError::NonFinite { index: i + 1 });
            }
            if value > 0.0 {
                return Ok(IndexedValue { index: i + 1, value });
            }
        }
        counters.objective += 1;
        let value = (self.objective)(point);
        if !value.is_finite() {
            return Err(EvalError::NonFinite { index: self.feasible_index() });
        }
        Ok(IndexedValue { index: self.feasible_index(), value })
    }

    /// Values of all constraints at a point, ignoring the partial-definition
    /// order. Used by exhaustive feasibility checks; not tallied.
    pub fn constraint_values(&self, point: &[f64]) -> Vec<f64> {
        self.constraints.iter().map(|g| g(point)).collect()
    }

    /// Raw objective value, untallied.
    pub fn objective_value(&self, point: &[f64]) -> f64 {
        (self.objective)(point)
    }
}

/// Best feasible point of a uniform grid with `points_per_axis` points per
/// axis (domain endpoints included), or `None` when no grid point satisfies
/// all constraints.
///
/// Exhaustive over `points_per_axis^N` points, so intended for small
/// dimensions as a reference oracle.
pub fn grid_reference_solution(
    problem: &ConstrainedProblem,
    points_per_axis: usize,
) -> Option<KnownSolution> {
    assert!(points_per_axis >= 2, "need at least the domain corners");
    let n = problem.dimension();
    let lower = problem.domain().lower();
    let upper = problem.domain().upper();
    let feasible = problem.feasible_index();
    let mut scratch = EvalCounters::new(problem.constraint_count());
    let mut best: Option<KnownSolution> = None;
    let mut ticks = vec![0usize; n];
    let mut point = vec![0.0f64; n];
    loop {
        for j in 0..n {
            let ratio = ticks[j] as f64 / (points_per_axis - 1) as f64;
            point[j] = lower[j] + (upper[j] - lower[j]) * ratio;
        }
        let eval = problem
            .evaluate_indexed(&point, &mut scratch)
            .expect("grid points lie inside the domain and registry functions are finite");
        if eval.index == feasible && best.as_ref().is_none_or(|b| eval.value < b.value) {
            best = Some(KnownSolution { point: point.clone(), value: eval.value });
        }
        // Odometer increment, first axis fastest.
        let mut j = 0;
        loop {
            if j == n {
                return best;
            }
            ticks[j] += 1;
            if ticks[j] < points_per_axis {
                break;
            }
            ticks[j] = 0;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_problem() -> ConstrainedProblem {
        let domain = Bounds::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let g1: ProblemFn = Arc::new(|y: &[f64]| y[0] - 0.5);
        let g2: ProblemFn = Arc::new(|y: &[f64]| y[1] - 0.5);
        let obj: ProblemFn = Arc::new(|y: &[f64]| y[0] + y[1]);
        ConstrainedProblem::new("toy", domain, vec![g1, g2], obj)
    }

    #[test]
    fn first_violation_wins_and_counts() {
        let p = toy_problem();
        let mut counters = EvalCounters::new(2);

        let v = p.evaluate_indexed(&[0.9, 0.9], &mut counters).unwrap();
        assert_eq!(v.index, 1);
        assert!((v.value - 0.4).abs() < 1e-15);

        let v = p.evaluate_indexed(&[0.1, 0.9], &mut counters).unwrap();
        assert_eq!(v.index, 2);

        let v = p.evaluate_indexed(&[0.1, 0.2], &mut counters).unwrap();
        assert_eq!(v.index, 3);
        assert!((v.value - 0.3).abs() < 1e-15);

        assert_eq!(counters.constraint_evals(), &[3, 2]);
        assert_eq!(counters.objective_evals(), 1);
        assert_eq!(counters.total(), 6);
    }

    #[test]
    fn boundary_counts_as_satisfied() {
        let p = toy_problem();
        let mut counters = EvalCounters::new(2);
        let v = p.evaluate_indexed(&[0.5, 0.5], &mut counters).unwrap();
        assert_eq!(v.index, 3);
    }

    #[test]
    fn domain_violation_is_an_error() {
        let p = toy_problem();
        let mut counters = EvalCounters::new(2);
        let err = p.evaluate_indexed(&[1.2, 0.0], &mut counters).unwrap_err();
        assert_eq!(err, EvalError::OutsideDomain { axis: 0, value: 1.2 });
        // Nothing was evaluated.
        assert_eq!(counters.total(), 0);
    }

    #[test]
    fn non_finite_reports_offender() {
        let domain = Bounds::new(vec![0.0], vec![1.0]).unwrap();
        let g: ProblemFn = Arc::new(|y: &[f64]| if y[0] < 0.5 { -1.0 } else { f64::NAN });
        let obj: ProblemFn = Arc::new(|_: &[f64]| f64::INFINITY);
        let p = ConstrainedProblem::new("bad", domain, vec![g], obj);
        let mut counters = EvalCounters::new(1);
        assert_eq!(
            p.evaluate_indexed(&[0.9], &mut counters),
            Err(EvalError::NonFinite { index: 1 })
        );
        assert_eq!(
            p.evaluate_indexed(&[0.1], &mut counters),
            Err(EvalError::NonFinite { index: 2 })
        );
    }

    #[test]
    fn unconstrained_problems_are_always_feasible() {
        let domain = Bounds::new(vec![-1.0], vec![1.0]).unwrap();
        let obj: ProblemFn = Arc::new(|y: &[f64]| y[0] * y[0]);
        let p = ConstrainedProblem::new("square", domain, vec![], obj);
        let mut counters = EvalCounters::new(0);
        let v = p.evaluate_indexed(&[0.5], &mut counters).unwrap();
        assert_eq!(v.index, 1);
        assert_eq!(p.feasible_index(), 1);
        assert_eq!(counters.objective_evals(), 1);
    }

    #[test]
    fn grid_oracle_on_toy_problem() {
        let p = toy_problem();
        // Feasible square is [0, 0.5]^2; the objective decreases toward the
        // origin, which is a grid point.
        let best = grid_reference_solution(&p, 11).unwrap();
        assert_eq!(best.point, vec![0.0, 0.0]);
        assert_eq!(best.value, 0.0);
    }

    #[test]
    fn grid_oracle_detects_infeasibility() {
        let domain = Bounds::new(vec![0.0], vec![1.0]).unwrap();
        let g: ProblemFn = Arc::new(|_: &[f64]| 1.0);
        let obj: ProblemFn = Arc::new(|y: &[f64]| y[0]);
        let p = ConstrainedProblem::new("empty", domain, vec![g], obj);
        assert!(grid_reference_solution(&p, 16).is_none());
    }
}
