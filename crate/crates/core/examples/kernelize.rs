// Shrinks an instance with few dependent vertices and compares optima.

use polytree_learning::generators::gen_random_with_dependents;
use polytree_learning::{kernelize, solve_enum, KernelOptions};

pub fn main() {
    let inst = gen_random_with_dependents(40, 3, 5, 2, 100, 8).expect("feasible parameters");
    let kernel = kernelize(&inst, KernelOptions::default()).expect("kernel fits the budget");
    println!(
        "{} vertices -> {} (bound {}), nonempty parent sets per vertex {} (bound {})",
        inst.n(),
        kernel.reduced.n(),
        kernel.size_bound(),
        kernel.nonempty_delta(),
        kernel.delta_bound()
    );
    println!(
        "optimum {} before, {} after",
        solve_enum(&inst).unwrap().best_score,
        solve_enum(&kernel.reduced).unwrap().best_score
    );
    print!("{}", kernel.map_lines(&inst));
}
