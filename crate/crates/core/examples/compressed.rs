// Compressed incidence configurations: facet widths against the sweep over
// every reverse lexicographic order.

use reflexive_forge::complexes::{all_complexes, incidence_matrix, is_flag};
use reflexive_forge::graphs::is_perfect;
use reflexive_forge::toric::{exists_squarefree_revlex_z_smallest, is_compressed};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for c in all_complexes(3) {
        let a = incidence_matrix(&c);
        let report = is_compressed(&a)?;
        let perfect = is_flag(&c).is_some_and(|g| is_perfect(&g));
        let order = exists_squarefree_revlex_z_smallest(&a)?;
        println!(
            "{c:28} compressed {:5} perfect flag {:5} z-smallest order {}",
            report.compressed,
            perfect,
            order.map_or("none".to_string(), |o| o.format(&a.var_names()))
        );
        assert_eq!(report.compressed, perfect);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
