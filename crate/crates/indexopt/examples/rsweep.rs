use indexopt::{get_problem, solve_with_scheme, EstimateScheme, SolverParams};

fn main() {
    let p = get_problem("P3", None).unwrap();
    for r in [2.2, 2.5, 2.9, 3.0, 3.5, 4.0] {
        for (scheme, label) in
            [(EstimateScheme::Global, "SM"), (EstimateScheme::LocallyTuned, "LT")]
        {
            let params = SolverParams {
                reliability: r,
                tolerance: 1e-4,
                max_iterations: 5000,
                ..Default::default()
            };
            let res = solve_with_scheme(&p, &params, scheme).unwrap();
            println!(
                "P3 {label} r={r}: iters={:5} best={:?} stop={}",
                res.iterations, res.best_value, res.stop_reason
            );
        }
    }
    let p2 = get_problem("P2", None).unwrap();
    for r in [2.2, 3.0, 4.0] {
        let params = SolverParams {
            reliability: r,
            tolerance: 1e-4,
            max_iterations: 5000,
            ..Default::default()
        };
        let res = solve_with_scheme(&p2, &params, EstimateScheme::LocallyTuned).unwrap();
        println!(
            "P2 LT r={r}: iters={:5} best={:?} stop={}",
            res.iterations, res.best_value, res.stop_reason
        );
    }
}
