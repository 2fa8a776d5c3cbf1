//! Built-in benchmark problems P1..P5.
//!
//! P1 and P2 share a two-dimensional multiextremal objective and differ in
//! their constraint systems (P2's feasible set is a narrow annulus). P3 is a
//! quartic-polynomial model with four constraints, P4 a trigonometric
//! objective with two sinusoidal constraints. P5 is a family scaling from 2
//! to 6 dimensions whose feasible set touches the unconstrained minimizer at
//! the origin. All constraints are in `G_i(y) <= 0` form.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::curve::Bounds;
use crate::error::RegistryError;
use crate::problem::{ConstrainedProblem, ProblemFn};

/// Identifiers accepted by [`get_problem`].
pub const PROBLEM_NAMES: [&str; 5] = ["P1", "P2", "P3", "P4", "P5"];

/// Looks up a benchmark problem by identifier (case-insensitive).
///
/// P1..P4 are two-dimensional; passing a dimension other than 2 for them is
/// an error. P5 requires an explicit dimension between 2 and 6.
pub fn get_problem(
    name: &str,
    dimension: Option<usize>,
) -> Result<ConstrainedProblem, RegistryError> {
    let check_fixed = |problem: &'static str| match dimension {
        None | Some(2) => Ok(()),
        Some(d) => Err(RegistryError::DimensionUnsupported { problem, dimension: d }),
    };
    if name.eq_ignore_ascii_case("P1") {
        check_fixed("P1")?;
        Ok(p1())
    } else if name.eq_ignore_ascii_case("P2") {
        check_fixed("P2")?;
        Ok(p2())
    } else if name.eq_ignore_ascii_case("P3") {
        check_fixed("P3")?;
        Ok(p3())
    } else if name.eq_ignore_ascii_case("P4") {
        check_fixed("P4")?;
        Ok(p4())
    } else if name.eq_ignore_ascii_case("P5") {
        match dimension {
            Some(d) if (2..=6).contains(&d) => Ok(p5(d)),
            Some(d) => Err(RegistryError::DimensionUnsupported { problem: "P5", dimension: d }),
            None => Err(RegistryError::DimensionRequired { problem: "P5", min: 2, max: 6 }),
        }
    } else {
        Err(RegistryError::UnknownProblem)
    }
}

/// Objective shared by P1 and P2.
fn two_well_objective() -> ProblemFn {
    Arc::new(|y: &[f64]| {
        let (y1, y2) = (y[0], y[1]);
        let a = 0.5 * (y1 - 1.0) * (y2 - 1.0);
        -1.5 * y1 * y1 * (1.0 - y1 * y1 - 20.25 * (y1 - y2) * (y1 - y2)).exp()
            - a.powi(4) * (2.0 - (0.5 * (y1 - 1.0)).powi(4) - (y2 - 1.0).powi(4)).exp()
    })
}

fn p1() -> ConstrainedProblem {
    let domain = Bounds::new(vec![0.0, -1.0], vec![4.0, 3.0]).unwrap();
    let g1: ProblemFn = Arc::new(|y: &[f64]| {
        0.01 * ((y[0] - 2.2) * (y[0] - 2.2) + (y[1] - 1.2) * (y[1] - 1.2) - 2.25)
    });
    let g2: ProblemFn = Arc::new(|y: &[f64]| {
        100.0 * (1.0 - (y[0] - 2.0) * (y[0] - 2.0) / 1.44 - (0.5 * y[1]) * (0.5 * y[1]))
    });
    let g3: ProblemFn =
        Arc::new(|y: &[f64]| 10.0 * (y[1] - 1.5 - 1.5 * (6.283 * (y[0] - 1.75)).sin()));
    ConstrainedProblem::new("P1", domain, vec![g1, g2, g3], two_well_objective())
        .with_known_solution(vec![0.942, 0.944], -1.489)
}

/// P2's constraints with the annulus centered at `center`.
fn annulus_constraints(center: (f64, f64)) -> Vec<ProblemFn> {
    let (cx, cy) = center;
    let g1: ProblemFn = Arc::new(move |y: &[f64]| {
        1.21 - (y[0] - cx) * (y[0] - cx) - (y[1] - cy) * (y[1] - cy)
    });
    let g2: ProblemFn = Arc::new(move |y: &[f64]| {
        (y[0] - cx) * (y[0] - cx) + (y[1] - cy) * (y[1] - cy) - 1.25
    });
    vec![g1, g2]
}

fn p2() -> ConstrainedProblem {
    let domain = Bounds::new(vec![0.0, -1.0], vec![4.0, 3.0]).unwrap();
    ConstrainedProblem::new("P2", domain, annulus_constraints((2.2, 1.2)), two_well_objective())
        .with_known_solution(vec![1.088, 1.088], -1.477)
}

fn p3() -> ConstrainedProblem {
    const B: [f64; 20] = [
        75.1963666677,
        -3.8112755343,
        0.1269366345,
        -0.0020567665,
        0.0000103450,
        -6.8306567613,
        0.0302344793,
        -0.0012813448,
        0.0000352559,
        -0.0000002266,
        0.2564581253,
        -0.0034604030,
        0.0000135139,
        -28.1064434908,
        -0.0000052375,
        -0.0000000063,
        0.0000000007,
        0.0003405462,
        -0.0000016638,
        -2.8673112392,
    ];
    let domain = Bounds::new(vec![0.0, 0.0], vec![80.0, 80.0]).unwrap();
    let g1: ProblemFn = Arc::new(|y: &[f64]| 450.0 - y[0] * y[1]);
    let g2: ProblemFn = Arc::new(|y: &[f64]| (0.1 * y[0] - 1.0) * (0.1 * y[0] - 1.0) - y[1]);
    let g3: ProblemFn =
        Arc::new(|y: &[f64]| 8.0 * (y[0] - 40.0) - (y[1] - 30.0) * (y[1] - 55.0));
    let g4: ProblemFn =
        Arc::new(|y: &[f64]| (y[0] - 35.0) * (y[0] - 30.0) / 125.0 + y[1] - 80.0);
    let objective: ProblemFn = Arc::new(move |y: &[f64]| {
        let (y1, y2) = (y[0], y[1]);
        -(B[0]
            + B[1] * y1
            + B[2] * y1.powi(2)
            + B[3] * y1.powi(3)
            + B[4] * y1.powi(4)
            + B[5] * y2
            + B[6] * y1 * y2
            + B[7] * y1.powi(2) * y2
            + B[8] * y1.powi(3) * y2
            + B[9] * y1.powi(4) * y2
            + B[10] * y2.powi(2)
            + B[11] * y2.powi(3)
            + B[12] * y2.powi(4)
            + B[13] / (1.0 + y2)
            + B[14] * y1.powi(2) * y2.powi(2)
            + B[15] * y1.powi(3) * y2.powi(2)
            + B[16] * y1.powi(3) * y2.powi(3)
            + B[17] * y1 * y2.powi(2)
            + B[18] * y1 * y2.powi(3)
            + B[19] * (0.0005 * y1 * y2).exp())
    });
    ConstrainedProblem::new("P3", domain, vec![g1, g2, g3, g4], objective)
        .with_known_solution(vec![77.19, 64.06], -59.59)
}

fn p4() -> ConstrainedProblem {
    let domain = Bounds::new(vec![0.0, 0.0], vec![2.0 * PI, 2.0 * PI]).unwrap();
    let g1: ProblemFn = Arc::new(|y: &[f64]| {
        1.0 - y[1] + PI / 2.0 - (2.0 * y[0]).sin().abs() + y[0] / 3.0
    });
    let g2: ProblemFn = Arc::new(|y: &[f64]| {
        y[1] - 1.5 * PI + 4.0 * (y[0] + PI).sin().abs() + y[0] / 3.0 - 1.9
    });
    let objective: ProblemFn = Arc::new(|y: &[f64]| {
        let (y1, y2) = (y[0], y[1]);
        -(y1.sin() * (2.0 * y2).sin()).abs()
            + 0.01 * (y1 * y2 + (y1 - PI) * (y1 - PI) + 3.0 * (y2 - PI) * (y2 - PI))
    });
    ConstrainedProblem::new("P4", domain, vec![g1, g2], objective)
        .with_known_solution(vec![1.247, 2.392], -0.864)
}

fn p5(dimension: usize) -> ConstrainedProblem {
    let mut lower = vec![-2.0];
    let mut upper = vec![8.0];
    lower.resize(dimension, -6.0);
    upper.resize(dimension, 4.0);
    let domain = Bounds::new(lower, upper).unwrap();
    let tail_sq = |y: &[f64]| y[1..].iter().map(|&c| c * c).sum::<f64>();
    let g1: ProblemFn =
        Arc::new(move |y: &[f64]| (y[0] - 2.5) * (y[0] - 2.5) - 6.25 + tail_sq(y));
    let g2: ProblemFn =
        Arc::new(move |y: &[f64]| -((y[0] - 2.0) * (y[0] - 2.0)) + 2.25 - tail_sq(y));
    let g3: ProblemFn = Arc::new(|y: &[f64]| {
        y[1] - 1.5 * PI + 4.0 * (y[0] + PI).sin().abs() + y[0] / 3.0 + 0.8
    });
    let objective: ProblemFn = Arc::new(|y: &[f64]| {
        let rho = y.iter().map(|&c| c * c).sum::<f64>().sqrt();
        y[0] + (rho - (rho * rho - 5.0 * rho + 4.0).abs()).exp()
    });
    ConstrainedProblem::new("P5", domain, vec![g1, g2, g3], objective)
        .with_known_solution(vec![0.0; dimension], (-4.0f64).exp())
}

/// Randomly shifted copies of P2's annulus for robustness studies.
///
/// Each copy moves the annulus center by an offset drawn uniformly from
/// `[-1, 1]` per coordinate (first the horizontal offset, then the
/// vertical, in problem order) from a ChaCha8 stream seeded with `seed`,
/// keeping the objective and domain unchanged. The shifted feasible ring
/// always intersects the domain. Copies carry no known solution.
pub fn perturbed_annulus(seed: u64, count: usize) -> Vec<ConstrainedProblem> {
    let domain = Bounds::new(vec![0.0, -1.0], vec![4.0, 3.0]).unwrap();
    let objective = two_well_objective();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unit = move || (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    (0..count)
        .map(|i| {
            let cx = 2.2 + (2.0 * unit() - 1.0);
            let cy = 1.2 + (2.0 * unit() - 1.0);
            ConstrainedProblem::new(
                format!("P2-perturbed-{:02}", i + 1),
                domain.clone(),
                annulus_constraints((cx, cy)),
                objective.clone(),
            )
        })
        .collect()
}
