macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!("../examples/", $file));
        }

        #[test]
        fn $name() {
            $name::main();
        }
    };
}

example!(solve_chain, "solve_chain.rs");
example!(dp_table, "dp_table.rs");
example!(representative_sets, "representative_sets.rs");
example!(fpt_solver, "fpt_solver.rs");
example!(kernelize, "kernelize.rs");
example!(is_reduction, "is_reduction.rs");
example!(scaling, "scaling.rs");
