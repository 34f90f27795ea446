macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(perfect_graphs, "perfect_graphs.rs", perfect_graphs_runs);
example!(stable_set_complexes, "stable_set_complexes.rs", stable_set_complexes_runs);
example!(toric_groebner, "toric_groebner.rs", toric_groebner_runs);
example!(compressed, "compressed.rs", compressed_runs);
example!(merged_polytope, "merged_polytope.rs", merged_polytope_runs);
example!(merged_initial_ideal, "merged_initial_ideal.rs", merged_initial_ideal_runs);
example!(obstruction, "obstruction.rs", obstruction_runs);
example!(cli_reports, "cli_reports.rs", cli_reports_runs);
