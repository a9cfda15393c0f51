use polytree_learning::generators::{gen_from_independent_set, gen_random_with_dependents, UndirectedGraph};
use polytree_learning::{
    kernelize, parse_instance, solve_enum, solve_with, verify_solution, write_instance, Algorithm, KernelOptions,
    SolveConfig,
};

#[test]
fn written_instances_parse_back_identically() {
    for seed in 0..20 {
        let inst = gen_random_with_dependents(9, 4, 5, 3, 40, seed).unwrap();
        let text = write_instance(&inst);
        let back = parse_instance(&text, inst.threshold()).unwrap();
        assert_eq!(write_instance(&back), text);
    }
}

#[test]
fn kernel_then_every_solver() {
    for seed in 0..15 {
        let inst = gen_random_with_dependents(18, 1 + seed as usize % 3, 5, 2, 60, 900 + seed).unwrap();
        let original = solve_enum(&inst).unwrap().best_score;
        let kernel = kernelize(&inst, KernelOptions { seed, ..KernelOptions::default() }).unwrap();
        for algo in Algorithm::ALL {
            let sol = solve_with(&kernel.reduced, algo, SolveConfig { seed, ..SolveConfig::default() }).unwrap();
            assert_eq!(sol.best_score, original, "seed {seed}, {algo}");
            // arcs of the kernel solution are arcs of the original instance
            let lifted = sol
                .best_arcs
                .iter()
                .map(|(u, v)| (kernel.vertex_map[u], kernel.vertex_map[v]))
                .collect();
            let report = verify_solution(&inst, &lifted).unwrap();
            assert!(report.polytree);
            assert_eq!(report.score, original);
        }
    }
}

#[test]
fn reduction_instances_solve_consistently() {
    // a 4-cycle has an independent set of size 2 but not 3
    let g = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    for (k, yes) in [(2, true), (3, false)] {
        let inst = gen_from_independent_set(&g, k).unwrap();
        for algo in Algorithm::ALL {
            let sol = solve_with(&inst, algo, SolveConfig::default()).unwrap();
            assert_eq!(sol.best_score >= inst.threshold(), yes, "k {k}, {algo}");
        }
    }
}
