// Stable set complexes, flagness and the incidence configuration `A_Δ`.

use reflexive_forge::complexes::{incidence_matrix, is_flag, stable_set_complex, SimplicialComplex};
use reflexive_forge::graphs::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p3 = Graph::path(3);
    let s = stable_set_complex(&p3);
    println!("S(P3) facets: {s}");
    println!("faces: {}", s.faces().len());
    println!("A_S(P3):\n{}", incidence_matrix(&s).to_text());

    // the boundary of a triangle is not flag: its minimal nonface has three vertices
    let hollow = SimplicialComplex::parse("3\n1 2\n1 3\n2 3\n")?;
    println!("{hollow} flag: {}", is_flag(&hollow).is_some());
    for f in hollow.minimal_nonfaces() {
        println!("minimal nonface mask {f:#b}");
    }

    let g = is_flag(&s).expect("stable set complexes are flag");
    assert_eq!(g, p3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
