// Queries individual entries of the subset dynamic program.

use polytree_learning::{parse_instance, DpOptions, DpTable};

pub fn main() {
    let inst = parse_instance("3\na 0\nb 1\n1 1 a\nc 1\n1 1 b\n", 0).expect("valid score file");
    let mut table = DpTable::new(&inst, DpOptions::default()).expect("small instance");
    // T[v, P, S, i]: best polytree on {v} ∪ P ∪ S where v is a sink with
    // parents P and only the first i parents may connect to S
    let queries: [(&str, &[&str], &[&str], usize); 3] = [
        ("c", &["b"], &["a"], 1),
        ("c", &["b"], &["a"], 0),
        ("b", &["a"], &["c"], 1),
    ];
    for (v, parents, s, i) in queries {
        let idx = |names: &[&str]| names.iter().map(|n| inst.index_of(n).unwrap()).collect::<Vec<_>>();
        let value = table
            .entry(inst.index_of(v).unwrap(), &idx(parents), &idx(s), i)
            .expect("valid key");
        println!("T[{v}, {parents:?}, {s:?}, {i}] = {value}");
    }
    let sol = table.solve();
    println!("optimum {}", sol.best_score);
}
