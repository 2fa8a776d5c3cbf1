//! Global optimization of multiextremal problems with partially defined
//! constraints.
//!
//! The problem class: minimize a Lipschitz objective over a box, subject to
//! ordered Lipschitz constraints `g_i(y) <= 0` where each function is only
//! defined where all previous ones are satisfied. Every trial therefore
//! evaluates constraints in order and stops at the first violation — no
//! penalty coefficients and no evaluations of undefined functions.
//!
//! The search runs on a one-dimensional reduction: a space-filling curve
//! approximation maps `[0, 1]` onto the box, turning Lipschitz functions of
//! `N` variables into Hölder functions of one variable (exponent `1 / N`).
//! The index method then subdivides `[0, 1]` adaptively, estimating Hölder
//! constants per constraint index either globally or tuned to each
//! interval's neighbourhood ([`EstimateScheme`]).
//!
//! Entry points: [`solve`] (locally tuned index method),
//! [`solve_strongin_markin`] (globally uniform estimates), and
//! [`solve_penalty`] (penalty reformulation baseline). Ready-made test
//! problems live in [`registry`].
//!
//! The crate is `no_std` (with `alloc`).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod baselines;
pub mod curve;
pub mod error;
pub mod problem;
pub mod registry;
pub mod solver;

pub use baselines::{
    penalized_objective, solve_penalty, solve_strongin_markin, PenaltyOutcome, PenaltyParams,
};
pub use curve::{holder_distance, Bounds, CurveMap, MAX_TOTAL_BITS};
pub use error::{
    BoundsError, CurveError, EvalError, PenaltyError, RegistryError, SolverError,
};
pub use problem::{
    grid_reference_solution, ConstrainedProblem, EvalCounters, IndexedValue, KnownSolution,
    ProblemFn,
};
pub use registry::{get_problem, perturbed_annulus, PROBLEM_NAMES};
pub use solver::{
    reliability_threshold, solve, solve_with_scheme, EstimateScheme, IntervalEstimate,
    SearchState, Selection, SolverParams, SolverResult, StepOutcome, StopReason, TrialPoint,
    TrialRecord,
};
