// Two configurations of harmony, the order on `[-B, A]^♯` built from their
// divisibility orders, and the squarefree initial ideal it produces.

use reflexive_forge::exactmath::IntVec;
use reflexive_forge::polytopes::{normalized_volume, VPolytope};
use reflexive_forge::toric::{is_harmony, triangulation_from_initial_ideal, verify_theorem1, Configuration};

fn config(cols: &[&[i64]]) -> Configuration {
    Configuration::new(cols[0].len(), cols.iter().map(|c| IntVec::from_i64(c)).collect()).unwrap()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = config(&[&[1, 0], &[0, 1], &[1, 1]]);
    let b = config(&[&[1, 0], &[0, 1]]);
    println!("harmony: {}", is_harmony(&a, &b));

    let v = verify_theorem1(&a, &b)?;
    let merged = &v.construction.merged;
    let names = merged.var_names();
    println!("merged:\n{}", merged.to_text());
    println!("order: {}", v.construction.order.format(&names));
    println!("constructed: {:?}", v.construction.monomials.format(&names));
    println!("computed:    {:?}", v.computed.format(&names));
    assert!(v.holds());

    let t = triangulation_from_initial_ideal(merged, &v.computed)?;
    let p = VPolytope::new(merged.d(), merged.columns().to_vec())?;
    println!(
        "{} simplices, unimodular {}, volume {} (polytope {})",
        t.triangulation.simplices.len(),
        t.unimodular,
        t.volume,
        normalized_volume(&p)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
