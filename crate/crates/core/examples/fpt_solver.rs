// Runs the representative-family solver and shows how the families shrink.

use polytree_learning::generators::gen_random_with_dependents;
use polytree_learning::{solve_enum, solve_fpt_traced, FptOptions};

pub fn main() {
    let inst = gen_random_with_dependents(12, 4, 5, 2, 50, 3).expect("feasible parameters");
    let (sol, trace) = solve_fpt_traced(&inst, FptOptions::default()).expect("solver runs");
    for (i, fam) in trace.families.iter().enumerate() {
        println!("after {i} dependent vertices: {} partial solutions of {} arcs", fam.len(), fam.x());
    }
    println!("best score {} (enumeration: {})", sol.best_score, solve_enum(&inst).unwrap().best_score);
    print!("{}", inst.format_arcs(&sol.best_arcs));
}
