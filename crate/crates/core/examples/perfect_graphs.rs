// Perfection by odd holes and antiholes, and the census of perfect graphs.
//
// ```text
// cargo run --example perfect_graphs
// ```

use reflexive_forge::graphs::{
    chromatic_number, clique_number, count_perfect, count_perfect_pairs, find_odd_antihole, find_odd_hole,
    is_perfect, Graph,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = Graph::cycle(5);
    println!("C5: omega = {}, chi = {}", clique_number(&c5), chromatic_number(&c5));
    let hole = find_odd_hole(&c5).expect("C5 is its own odd hole");
    println!("odd hole (0-based): {hole:?}");
    assert!(!is_perfect(&c5));

    let anti = Graph::cycle(7).complement();
    println!("complement of C7 has antihole {:?}", find_odd_antihole(&anti));

    let house = Graph::parse("5\n1 2\n2 3\n3 4\n4 1\n1 5\n2 5\n")?;
    println!("house {house} perfect: {}", is_perfect(&house));

    for n in 2..=6 {
        println!("n = {n}: {} perfect graphs, {} pairs", count_perfect(n)?, count_perfect_pairs(n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
