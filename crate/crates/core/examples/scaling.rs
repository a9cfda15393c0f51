// Times the three solvers on seeded random instances of growing size.

use std::time::Instant;

use polytree_learning::generators::gen_random;
use polytree_learning::{solve_with, Algorithm, SolveConfig};

pub fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    println!("{:>3} {:>10} {:>10} {:>10}", "n", "dp ms", "enum ms", "repsets ms");
    for n in 4..=max_n {
        let inst = gen_random(n, 4, 2, 100, n as u64).expect("feasible parameters");
        let mut cells = Vec::new();
        let mut scores = Vec::new();
        for algo in Algorithm::ALL {
            let start = Instant::now();
            let sol = solve_with(&inst, algo, SolveConfig::default()).expect("solver runs");
            cells.push(start.elapsed().as_secs_f64() * 1e3);
            scores.push(sol.best_score);
        }
        assert!(scores.windows(2).all(|w| w[0] == w[1]), "solvers disagree on n = {n}");
        println!("{n:>3} {:>10.2} {:>10.2} {:>10.2}", cells[0], cells[1], cells[2]);
    }
}
