// Certificates that `conv(P_Δ ∪ -P_Δ)` is not reflexive when Δ is not the
// stable set complex of a perfect graph.

use reflexive_forge::complexes::{stable_set_complex, SimplicialComplex};
use reflexive_forge::graphs::Graph;
use reflexive_forge::polytopes::{find_obstruction, merge_polytope, verify_obstruction_facet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("triangle boundary", SimplicialComplex::simplex_boundary(3)),
        ("S(C5)", stable_set_complex(&Graph::cycle(5))),
        ("S(complement of C7)", stable_set_complex(&Graph::cycle(7).complement())),
    ];
    for (name, delta) in cases {
        let p = merge_polytope(&delta, &delta)?;
        let found = find_obstruction(&delta).expect("not a perfect graph's complex");
        let check = verify_obstruction_facet(&p, found.obstruction, &found.vertices)?;
        println!(
            "{name}: {:?} on {:?}, level {}, {} contact points, {} facets, certified {}",
            found.obstruction,
            found.vertices,
            check.level,
            check.contact.len(),
            check.facets.len(),
            check.certified
        );
        for f in &check.facets {
            println!("  normal {:?} at {}", f.normal, f.rhs);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
