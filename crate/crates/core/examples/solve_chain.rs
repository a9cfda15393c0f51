// Solves a small instance with every solver and prints the learned arcs.

use polytree_learning::{parse_instance, solve_with, verify_solution, Algorithm, SolveConfig};

const SCORES: &str = "\
4
a 0
b 2
3 1 a
1 1 d
c 2
2 1 b
4 2 a b
d 1
2 1 a
";

pub fn main() {
    let inst = parse_instance(SCORES, 6).expect("valid score file");
    println!("n = {}, d = {}, p = {}, delta = {}", inst.n(), inst.dependent_vertices().len(), inst.max_parent_size(), inst.delta());
    for algo in Algorithm::ALL {
        let sol = solve_with(&inst, algo, SolveConfig::default()).expect("solver runs");
        let report = verify_solution(&inst, &sol.best_arcs).expect("arcs in range");
        println!("{algo:>8}: score {} (meets t = {}: {})", sol.best_score, inst.threshold(), report.meets_t);
        print!("{}", inst.format_arcs(&sol.best_arcs));
    }
}
