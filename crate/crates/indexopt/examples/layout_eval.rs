use indexopt::{
    get_problem, grid_reference_solution, perturbed_annulus, solve_penalty, solve_with_scheme,
    EstimateScheme, PenaltyParams, SolverParams, SolverResult,
};

struct Run {
    n1: u64,
    nphi: u64,
    total: u64,
    phi: Option<f64>,
    feasible: bool,
}

fn run(name: &str, dim: Option<usize>, scheme: EstimateScheme, r: f64, delta: f64, cap: usize) -> Run {
    let p = get_problem(name, dim).unwrap();
    let params = SolverParams {
        reliability: r,
        tolerance: delta,
        max_iterations: cap,
        ..Default::default()
    };
    let res: SolverResult = solve_with_scheme(&p, &params, scheme).unwrap();
    let feasible = res
        .best_point
        .as_ref()
        .map(|pt| p.constraint_values(pt).iter().all(|&g| g <= 0.0))
        .unwrap_or(false);
    Run {
        n1: res.counters.constraint_evals()[0],
        nphi: res.counters.objective_evals(),
        total: res.counters.total(),
        phi: res.best_value,
        feasible,
    }
}

fn band(phi: Option<f64>, target: f64, feasible: bool) -> bool {
    feasible && phi.map(|v| (v - target).abs() <= 0.05).unwrap_or(false)
}

fn main() {
    let mut pass = 0;
    let mut fail = 0;
    let mut check = |label: &str, ok: bool| {
        if ok {
            pass += 1;
            println!("PASS {label}");
        } else {
            fail += 1;
            println!("FAIL {label}");
        }
    };

    // --- Criterion 1 + 2: experiment 1 at delta = 1e-4, r = 2.2
    let lt_targets = [-1.489, -1.439, -59.34, -0.863];
    let sm_targets = [-1.489, -1.478, -59.59, -0.864];
    let mut lts = Vec::new();
    let mut sms = Vec::new();
    for (i, name) in ["P1", "P2", "P3", "P4"].iter().enumerate() {
        let lt = run(name, None, EstimateScheme::LocallyTuned, 2.2, 1e-4, 5000);
        let sm = run(name, None, EstimateScheme::Global, 2.2, 1e-4, 5000);
        println!(
            "  {name}: LT phi={:?} n1={} nphi={} | SM phi={:?} n1={} nphi={}",
            lt.phi, lt.n1, lt.nphi, sm.phi, sm.n1, sm.nphi
        );
        check(&format!("c1 {name} LT band {}", lt_targets[i]), band(lt.phi, lt_targets[i], lt.feasible));
        check(&format!("c1 {name} SM band {}", sm_targets[i]), band(sm.phi, sm_targets[i], sm.feasible));
        lts.push(lt);
        sms.push(sm);
    }
    for i in 0..4 {
        let s1 = sms[i].n1 as f64 / lts[i].n1 as f64;
        let s2 = sms[i].nphi as f64 / lts[i].nphi as f64;
        let s3 = sms[i].total as f64 / lts[i].total as f64;
        println!("  P{}: S1={s1:.2} S2={s2:.2} S3={s3:.2}", i + 1);
        check(&format!("c2 P{} speedups>1", i + 1), s1 > 1.0 && s2 > 1.0 && s3 > 1.0);
        if i < 2 {
            check(&format!("c2 P{} S1>=2", i + 1), s1 >= 2.0);
        }
    }

    // --- Criterion 3: penalty on P2/P4 at delta = 1e-3
    for (name, target, plo, phi_hi) in [("P2", -1.478, 0.2, 0.4), ("P4", -0.864, 0.4, 0.6)] {
        let p = get_problem(name, None).unwrap();
        let params = PenaltyParams {
            inner: SolverParams { tolerance: 1e-3, ..Default::default() },
            ..Default::default()
        };
        match solve_penalty(&p, &params) {
            Ok(o) => {
                println!(
                    "  penalty {name}: p*={} attempts={} phi={:?}",
                    o.p_star, o.attempts, o.result.best_value
                );
                let v = o.result.best_value.unwrap_or(f64::NAN);
                check(
                    &format!("c3 {name} penalty"),
                    (v - target).abs() <= 0.05 && o.p_star >= plo - 1e-9 && o.p_star <= phi_hi + 1e-9,
                );
            }
            Err(e) => {
                println!("  penalty {name} error: {e}");
                check(&format!("c3 {name} penalty"), false);
            }
        }
    }

    // --- Criterion 4: experiment 2, LT at r = 3.0 and 2.5, delta = 1e-3
    let problems = perturbed_annulus(1, 20);
    let oracles: Vec<Option<f64>> = problems
        .iter()
        .map(|p| grid_reference_solution(p, 1000).map(|s| s.value))
        .collect();
    for (r, need) in [(3.0, 19), (2.5, 16)] {
        let mut successes = 0;
        for (p, oracle) in problems.iter().zip(&oracles) {
            let params = SolverParams {
                reliability: r,
                tolerance: 1e-3,
                max_iterations: 5000,
                ..Default::default()
            };
            let res = solve_with_scheme(p, &params, EstimateScheme::LocallyTuned).unwrap();
            if let (Some(v), Some(g)) = (res.best_value, oracle) {
                if (v - g).abs() <= 0.05 {
                    successes += 1;
                }
            }
        }
        println!("  exp2 LT r={r}: {successes}/20");
        check(&format!("c4 exp2 r={r} >= {need}"), successes >= need);
    }

    // --- Criterion 5: P5 N=2 and N=3
    let p5n2 = run("P5", Some(2), EstimateScheme::LocallyTuned, 2.35, 1e-4, 40000);
    println!("  P5 N=2: phi={:?} n1={}", p5n2.phi, p5n2.n1);
    check("c5 P5 N=2 <= 0.03", p5n2.feasible && p5n2.phi.map(|v| v <= 0.03).unwrap_or(false));
    let p5n3 = run("P5", Some(3), EstimateScheme::LocallyTuned, 2.45, 1e-4, 40000);
    println!("  P5 N=3: phi={:?} n1={}", p5n3.phi, p5n3.n1);
    check("c5 P5 N=3 <= 0.06", p5n3.feasible && p5n3.phi.map(|v| v <= 0.06).unwrap_or(false));

    println!("SUMMARY pass={pass} fail={fail}");
}
