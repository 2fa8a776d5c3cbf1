use indexopt::{
    grid_reference_solution, perturbed_annulus, EstimateScheme, SearchState, SolverParams,
    StepOutcome,
};

fn main() {
    let problems = perturbed_annulus(1, 20);
    let params = SolverParams {
        reliability: 2.5,
        tolerance: 1e-3,
        max_iterations: 5000,
        ..Default::default()
    };
    for (i, p) in problems.iter().enumerate() {
        let oracle = grid_reference_solution(p, 1000).map(|s| s.value);
        let mut state = SearchState::initialize(p, &params).unwrap();
        let reason = loop {
            let sel = state.select(&params, EstimateScheme::LocallyTuned);
            if sel.delta <= params.tolerance {
                break "tol";
            }
            if state.trial_count() >= params.max_iterations {
                break "cap";
            }
            match state.place(&sel, p, &params).unwrap() {
                StepOutcome::Placed { .. } => {}
                StepOutcome::ResolutionReached => break "res",
            }
        };
        let best = state
            .trial_log()
            .iter()
            .filter(|t| t.index == 3)
            .map(|t| t.value)
            .fold(f64::INFINITY, f64::min);
        let ok = oracle.map(|g| (best - g).abs() <= 0.05).unwrap_or(false);
        println!(
            "#{i:02} {} stop={reason} k={:4} best={best:+.4} grid={:+.4} mu={:?}",
            if ok { "ok  " } else { "FAIL" },
            state.trial_count(),
            oracle.unwrap_or(f64::NAN),
            state.mu()
        );
        if !ok && i < 20 {
            // Post-mortem: top intervals by characteristic.
            let mut est = state.interval_estimates(&params, EstimateScheme::LocallyTuned);
            let trials = state.trials().to_vec();
            let mut order: Vec<usize> = (0..est.len()).collect();
            order.sort_by(|&a, &b| est[b].characteristic.total_cmp(&est[a].characteristic));
            for &q in order.iter().take(5) {
                let (l, r) = (&trials[q], &trials[q + 1]);
                println!(
                    "    R={:+.5e} del={:.3e} lam={:.3e} gam={:.3e} M={:.3e} nu=({},{}) z=({:+.3e},{:+.3e}) x=[{:.6},{:.6}]",
                    est[q].characteristic,
                    est[q].delta,
                    est[q].lambda,
                    est[q].gamma,
                    est[q].m_value,
                    l.index,
                    r.index,
                    l.value,
                    r.value,
                    l.x,
                    r.x
                );
            }
            est.sort_by(|a, b| b.characteristic.total_cmp(&a.characteristic));
        }
    }
}
