// A toric ideal with one generator whose initial term is squarefree under one
// reverse lexicographic order and not under another.

use reflexive_forge::toric::{
    buchberger, initial_ideal, standard_monomials_match_fibers, toric_ideal_generators, Configuration,
    MonomialOrder,
};

const MATRIX: &str = "6 7
1 0 1 1 0 0 0
1 1 0 0 0 0 0
0 1 1 0 0 0 0
0 0 0 1 1 0 1
0 0 0 0 1 1 0
0 0 0 0 0 1 1
sharp
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = Configuration::parse(MATRIX)?;
    let names = c.var_names();
    let gens = toric_ideal_generators(&c);
    for g in &gens {
        println!("generator: {}", g.format(&names));
    }
    for order in ["z < x2 < x1 < x3 < x4 < x5 < x6 < x7", "z < x1 < x2 < x3 < x4 < x5 < x6 < x7"] {
        let o = MonomialOrder::parse(order, &names)?;
        let ini = initial_ideal(&buchberger(&gens, &o));
        println!("{order}: in = {:?}, squarefree {}", ini.format(&names), ini.is_squarefree());
        let check = standard_monomials_match_fibers(&c, &ini, 3, 6)?;
        println!("  {} fibers up to degree 3, one standard monomial each: {}", check.fibers, check.ok());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
