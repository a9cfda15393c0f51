// Compresses a weighted family of arc sets and checks the result exhaustively.

use polytree_learning::generators::gen_random;
use polytree_learning::matroid::{
    check_representative, representative_family, RepOptions, SuperMatroid, WeightedSet, WeightedSetFamily,
};

pub fn main() {
    let inst = gen_random(6, 3, 1, 10, 4).expect("feasible parameters");
    let s = inst.superstructure();
    let sm = SuperMatroid::new(&s);
    println!("superstructure with {} arcs", sm.m());

    // every pair of arcs, weighted by a simple function of the indices
    let mut family = WeightedSetFamily::new(2);
    for a in 0..sm.m() {
        for b in a + 1..sm.m() {
            family.push(WeightedSet::new(vec![a, b], ((a * 5 + b * 3) % 7) as u64)).unwrap();
        }
    }
    for q in 0..=2 {
        for truncate in [false, true] {
            let hat = representative_family(&sm, &family, q, RepOptions { truncate, seed: 1, ..Default::default() })
                .expect("representation fits the budget");
            println!(
                "q = {q}, truncate = {truncate:5}: kept {:3} of {} (valid: {})",
                hat.len(),
                family.len(),
                check_representative(&sm, &family, &hat, q)
            );
        }
    }
}
