//! Reference methods the index algorithm is compared against: the same
//! search with globally uniform estimates, and a penalty reformulation that
//! folds the constraints into the objective.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use alloc::sync::Arc;

use crate::error::PenaltyError;
use crate::problem::{ConstrainedProblem, EvalCounters, ProblemFn};
use crate::solver::{solve_with_scheme, EstimateScheme, SolverParams, SolverResult};

/// Runs the index method with globally uniform Hölder estimates: identical
/// to [`crate::solver::solve`] except that every interval of a class uses
/// the class-wide difference-quotient estimate.
pub fn solve_strongin_markin(
    problem: &ConstrainedProblem,
    params: &SolverParams,
) -> Result<SolverResult, crate::error::SolverError> {
    solve_with_scheme(problem, params, EstimateScheme::Global)
}

/// Parameters of the penalty method.
#[derive(Debug, Clone, PartialEq)]
pub struct PenaltyParams {
    /// Penalty coefficient of the first attempt.
    pub coefficient_start: f64,
    /// Additive coefficient increment between attempts.
    pub coefficient_step: f64,
    /// Largest constraint value still accepted as feasible when checking an
    /// attempt's answer.
    pub feasibility_tolerance: f64,
    /// Attempt budget before giving up.
    pub max_attempts: usize,
    /// Use the locally tuned estimate inside attempts instead of the
    /// globally uniform one.
    pub local_tuning_inner: bool,
    /// Parameters of the inner unconstrained runs.
    pub inner: SolverParams,
}

impl Default for PenaltyParams {
    fn default() -> Self {
        PenaltyParams {
            coefficient_start: 0.1,
            coefficient_step: 0.1,
            feasibility_tolerance: 0.0,
            max_attempts: 100,
            local_tuning_inner: false,
            inner: SolverParams::default(),
        }
    }
}

impl PenaltyParams {
    pub fn validate(&self) -> Result<(), PenaltyError> {
        if !self.coefficient_start.is_finite() || self.coefficient_start < 0.0 {
            return Err(PenaltyError::InvalidParams("coefficient start must be finite and non-negative"));
        }
        if !self.coefficient_step.is_finite() || !(self.coefficient_step > 0.0) {
            return Err(PenaltyError::InvalidParams("coefficient step must be positive"));
        }
        if !self.feasibility_tolerance.is_finite() || self.feasibility_tolerance < 0.0 {
            return Err(PenaltyError::InvalidParams("feasibility tolerance must be non-negative"));
        }
        if self.max_attempts == 0 {
            return Err(PenaltyError::InvalidParams("at least one attempt is required"));
        }
        self.inner.validate()?;
        Ok(())
    }
}

/// Outcome of a successful penalty run.
#[derive(Debug, Clone, PartialEq)]
pub struct PenaltyOutcome {
    /// Result of the successful attempt. `iterations` and `counters` are
    /// replaced by totals over every attempt — each trial of an attempt
    /// evaluates all constraints and the objective once — while `trials`
    /// keeps the successful attempt's log only.
    pub result: SolverResult,
    /// Penalty coefficient of the successful attempt.
    pub p_star: f64,
    /// Attempts performed, the successful one included.
    pub attempts: usize,
}

/// The unconstrained reformulation solved inside one attempt: the original
/// objective plus `coefficient` times the largest constraint violation.
pub fn penalized_objective(problem: &ConstrainedProblem, coefficient: f64) -> ConstrainedProblem {
    let constraints: Vec<ProblemFn> = problem.constraint_fns().to_vec();
    let objective = problem.objective_fn().clone();
    let combined: ProblemFn = Arc::new(move |point: &[f64]| {
        let mut worst = 0.0f64;
        for g in &constraints {
            let value = g(point);
            if value > worst {
                worst = value;
            }
        }
        objective(point) + coefficient * worst
    });
    ConstrainedProblem::new(
        format!("{}-penalized", problem.name()),
        problem.domain().clone(),
        vec![],
        combined,
    )
}

/// Penalty method: repeatedly minimizes the penalized reformulation,
/// raising the coefficient until the answer satisfies the original
/// constraints. The feasibility check of each attempt's answer is not
/// counted as problem evaluations.
pub fn solve_penalty(
    problem: &ConstrainedProblem,
    params: &PenaltyParams,
) -> Result<PenaltyOutcome, PenaltyError> {
    params.validate()?;
    let scheme = if params.local_tuning_inner {
        EstimateScheme::LocallyTuned
    } else {
        EstimateScheme::Global
    };
    let mut total_trials: u64 = 0;
    let mut coefficient = params.coefficient_start;
    for attempt in 1..=params.max_attempts {
        coefficient = params.coefficient_start + params.coefficient_step * (attempt - 1) as f64;
        let reformulated = penalized_objective(problem, coefficient);
        let mut result = solve_with_scheme(&reformulated, &params.inner, scheme)?;
        total_trials += result.iterations as u64;
        let feasible = result.best_point.as_ref().is_some_and(|point| {
            problem
                .constraint_values(point)
                .iter()
                .all(|&g| g <= params.feasibility_tolerance)
        });
        if feasible {
            result.iterations = total_trials as usize;
            result.counters = EvalCounters {
                constraints: vec![total_trials; problem.constraint_count()],
                objective: total_trials,
            };
            return Ok(PenaltyOutcome { result, p_star: coefficient, attempts: attempt });
        }
    }
    Err(PenaltyError::MaxAttemptsExceeded {
        attempts: params.max_attempts,
        last_coefficient: coefficient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Bounds;
    use crate::registry::get_problem;
    use crate::solver::solve;
    use num_traits::Float;

    fn line_problem(
        objective: impl Fn(f64) -> f64 + Send + Sync + 'static,
        constraint: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> ConstrainedProblem {
        let domain = Bounds::new(vec![0.0], vec![1.0]).unwrap();
        let g: ProblemFn = Arc::new(move |y: &[f64]| constraint(y[0]));
        let f: ProblemFn = Arc::new(move |y: &[f64]| objective(y[0]));
        ConstrainedProblem::new("line", domain, vec![g], f)
    }

    #[test]
    fn uniform_estimate_run_matches_the_shared_engine() {
        let problem = get_problem("P1", None).unwrap();
        let params = SolverParams { tolerance: 1e-2, ..SolverParams::default() };
        let direct = solve_with_scheme(&problem, &params, EstimateScheme::Global).unwrap();
        let named = solve_strongin_markin(&problem, &params).unwrap();
        assert_eq!(direct, named);
        // The two schemes genuinely differ on the same problem.
        let tuned = solve(&problem, &params).unwrap();
        assert_ne!(tuned.trials, named.trials);
    }

    #[test]
    fn penalized_objective_folds_the_worst_violation() {
        let problem = get_problem("P2", None).unwrap();
        let reformulated = penalized_objective(&problem, 2.5);
        assert_eq!(reformulated.constraint_count(), 0);
        assert_eq!(reformulated.dimension(), problem.dimension());
        for point in [[0.3, -0.4], [1.088, 1.088], [4.0, 3.0], [2.0, 0.5]] {
            let worst = problem
                .constraint_values(&point)
                .into_iter()
                .fold(0.0f64, f64::max);
            let expected = problem.objective_value(&point) + 2.5 * worst;
            assert_eq!(reformulated.objective_value(&point), expected);
        }
    }

    #[test]
    fn first_attempt_succeeds_when_the_plain_minimum_is_feasible() {
        let problem = line_problem(|y| (y - 0.7) * (y - 0.7), |y| y - 0.9);
        let outcome = solve_penalty(&problem, &PenaltyParams::default()).unwrap();
        assert_eq!(outcome.attempts, 1);
        assert_eq!(outcome.p_star, 0.1);
        let best = outcome.result.best_point.unwrap();
        assert!((best[0] - 0.7).abs() < 5e-3);
    }

    #[test]
    fn coefficient_escalates_until_the_answer_is_feasible() {
        // Two wells: the deeper one violates the constraint, the shallower
        // one sits strictly inside the feasible region. Small coefficients
        // leave the deep well optimal, so attempts must escalate.
        let problem = line_problem(
            |y| {
                -1.3 * (-50.0 * (y - 0.8) * (y - 0.8)).exp()
                    - (-50.0 * (y - 0.3) * (y - 0.3)).exp()
            },
            |y| y - 0.55,
        );
        let outcome = solve_penalty(&problem, &PenaltyParams::default()).unwrap();
        assert!(outcome.attempts > 1, "attempt 1 should favour the infeasible well");
        let expected_p = 0.1 + 0.1 * (outcome.attempts - 1) as f64;
        assert!((outcome.p_star - expected_p).abs() < 1e-12);
        assert!(outcome.p_star <= 3.0, "escalated too far: {}", outcome.p_star);
        let best = outcome.result.best_point.unwrap();
        assert!((best[0] - 0.3).abs() < 0.05, "found {}", best[0]);
        assert!(problem.constraint_values(&best).iter().all(|&g| g <= 0.0));
        // Aggregate accounting: every attempt trial counts once per
        // function, feasibility checks not at all.
        let total = outcome.result.iterations as u64;
        assert_eq!(outcome.result.counters.objective_evals(), total);
        assert_eq!(outcome.result.counters.constraint_evals(), &[total]);
        assert!(total as usize > outcome.result.trials.len());
    }

    #[test]
    fn attempt_budget_failure_reports_the_last_coefficient() {
        let problem = line_problem(|y| y, |y| 0.5 - y);
        let params = PenaltyParams { max_attempts: 3, ..PenaltyParams::default() };
        match solve_penalty(&problem, &params) {
            Err(PenaltyError::MaxAttemptsExceeded { attempts, last_coefficient }) => {
                assert_eq!(attempts, 3);
                assert!((last_coefficient - 0.3).abs() < 1e-12);
            }
            other => panic!("expected attempt budget failure, got {:?}", other),
        }
    }

    #[test]
    fn invalid_penalty_params_are_rejected() {
        let bad_step = PenaltyParams { coefficient_step: 0.0, ..PenaltyParams::default() };
        assert!(matches!(bad_step.validate(), Err(PenaltyError::InvalidParams(_))));
        let bad_attempts = PenaltyParams { max_attempts: 0, ..PenaltyParams::default() };
        assert!(matches!(bad_attempts.validate(), Err(PenaltyError::InvalidParams(_))));
        let bad_inner = PenaltyParams {
            inner: SolverParams { reliability: 0.5, ..SolverParams::default() },
            ..PenaltyParams::default()
        };
        assert!(bad_inner.validate().is_err());
    }
}
