use indexopt::{
    get_problem, solve_with_scheme, EstimateScheme, SolverParams,
};

fn main() {
    let params = SolverParams { tolerance: 1e-4, max_iterations: 20000, ..Default::default() };

    for (name, scheme, label) in [
        ("P2", EstimateScheme::LocallyTuned, "P2-LT"),
        ("P3", EstimateScheme::Global, "P3-SM"),
        ("P3", EstimateScheme::LocallyTuned, "P3-LT"),
    ] {
        let p = get_problem(name, None).unwrap();
        let r = solve_with_scheme(&p, &params, scheme).unwrap();
        println!(
            "==== {label}: iters={} best={:?} stop={}",
            r.iterations, r.best_value, r.stop_reason
        );
        // Index histogram
        let classes = p.feasible_index();
        let mut hist = vec![0usize; classes + 1];
        for t in &r.trials {
            hist[t.index] += 1;
        }
        println!("index histogram: {:?}", &hist[1..]);
        // Last 15 trials
        for t in r.trials.iter().rev().take(15).rev() {
            println!(
                "  x={:.9} nu={} g={:+.6} y=({:.4},{:.4})",
                t.x, t.index, t.value, t.point[0], t.point[1]
            );
        }
        // Tightest final cluster
        let mut xs: Vec<(f64, usize)> = r.trials.iter().map(|t| (t.x, t.index)).collect();
        xs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut tightest = f64::INFINITY;
        let mut at = 0;
        for (i, w) in xs.windows(2).enumerate() {
            let gap = w[1].0 - w[0].0;
            if gap < tightest {
                tightest = gap;
                at = i;
            }
        }
        println!(
            "tightest gap {:.3e} at x={:.9} (nu pair {} {})",
            tightest,
            xs[at].0,
            xs[at].1,
            xs[at + 1].1
        );
    }
}
