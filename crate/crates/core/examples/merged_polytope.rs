// The polytope `conv(P_Δ ∪ -P_Δ')` for two stable set complexes, its facets,
// dual and lattice properties.

use reflexive_forge::complexes::stable_set_complex;
use reflexive_forge::graphs::Graph;
use reflexive_forge::polytopes::{
    dual_polytope, is_fano, is_gorenstein_fano, is_smooth, is_terminal, merge_polytope, normalized_volume,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k3 = stable_set_complex(&Graph::complete(3));
    let p = merge_polytope(&k3, &k3)?;
    println!("K3 with K3: {} vertices", p.vertices.len());
    for f in p.facets() {
        println!("  {f}");
    }
    println!(
        "fano {} gorenstein {} terminal {} smooth {}",
        is_fano(&p),
        is_gorenstein_fano(&p)?.gorenstein,
        is_terminal(&p)?,
        is_smooth(&p)?
    );

    let empty = stable_set_complex(&Graph::empty(3));
    let q = merge_polytope(&empty, &k3)?;
    let dual = dual_polytope(&q)?;
    println!(
        "empty with K3: {} vertices, volume {}, dual integral {}",
        q.vertices.len(),
        normalized_volume(&q),
        dual.is_integral()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
