// Encodes Independent Set questions as polytree instances and decides them.

use polytree_learning::generators::{
    brute_is, brute_multicolored_is, gen_from_independent_set, gen_from_multicolored_is, gen_random_cluster_graph,
    parse_graph,
};
use polytree_learning::{decide_enum, write_instance};

pub fn main() {
    // a 5-cycle has independent sets of size 2 but not 3
    let cycle = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").expect("valid graph");
    for k in 1..=3 {
        let inst = gen_from_independent_set(&cycle, k).expect("no isolated vertices");
        println!(
            "C5, k = {k}: {} vertices, polytree answer {}, brute force {}",
            inst.n(),
            decide_enum(&inst).unwrap(),
            brute_is(&cycle, k).unwrap()
        );
    }
    print!("{}", write_instance(&gen_from_independent_set(&cycle, 2).unwrap()));

    let (g, partition) = gen_random_cluster_graph(&[2, 2, 3], 0.4, 5);
    let inst = gen_from_multicolored_is(&g, &partition).expect("valid partition");
    println!(
        "multicolored: {} vertices, polytree answer {}, brute force {}",
        inst.n(),
        decide_enum(&inst).unwrap(),
        brute_multicolored_is(&g, &partition).unwrap()
    );
}
