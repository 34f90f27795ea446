//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use reflexive_forge::complexes::{
    all_complexes, incidence_block, incidence_matrix, is_flag, stable_set_complex, SimplicialComplex,
};
use reflexive_forge::exactmath::IntVec;
use reflexive_forge::graphs::census::{count_perfect, count_perfect_pairs, perfect_graphs};
use reflexive_forge::graphs::{is_perfect, is_perfect_by_coloring, Graph};
use reflexive_forge::polytopes::{
    dual_polytope, find_obstruction, is_fano, is_gorenstein_fano, is_terminal, merge_polytope,
    normalized_volume, verify_obstruction_facet, RationalPolytope, VPolytope,
};
use reflexive_forge::toric::{
    buchberger, exists_squarefree_revlex_z_smallest, initial_ideal, is_compressed, is_harmony,
    standard_monomials_match_fibers, toric_ideal_generators, triangulation_from_initial_ideal,
    verify_theorem1, Binomial, Configuration, MonomialOrder,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn config(cols: &[&[i64]]) -> Configuration {
    let d = cols[0].len();
    Configuration::new(d, cols.iter().map(|c| IntVec::from_i64(c)).collect()).unwrap()
}

fn a1() -> Configuration {
    config(&[&[1, 0], &[0, 1]])
}

fn a2() -> Configuration {
    config(&[&[1, 0], &[0, 1], &[1, 1]])
}

fn counterexample() -> Configuration {
    Configuration::parse(
        "6 7
         1 0 1 1 0 0 0
         1 1 0 0 0 0 0
         0 1 1 0 0 0 0
         0 0 0 1 1 0 1
         0 0 0 0 1 1 0
         0 0 0 0 0 1 1
         sharp",
    )
    .unwrap()
}

/// Stable-set complexes of the perfect graphs on `d` vertices, one per isomorphism class.
fn perfect_complexes(d: usize) -> Vec<SimplicialComplex> {
    perfect_graphs(d)
        .unwrap()
        .iter()
        .map(|c| stable_set_complex(&c.to_graph()))
        .collect()
}

fn unordered_pairs<T: Clone>(items: &[T]) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i..items.len() {
            out.push((items[i].clone(), items[j].clone()));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let expected = [(2, 2, 3), (3, 4, 10), (4, 11, 66), (5, 33, 561), (6, 148, 11026)];
    let start = Instant::now();
    for (n, k, pairs) in expected {
        let got = count_perfect(n).map_err(|e| e.to_string())?;
        let got_pairs = count_perfect_pairs(n).map_err(|e| e.to_string())?;
        ensure(got == k && got_pairs == pairs, || {
            format!("n={n}: {got} graphs / {got_pairs} pairs, expected {k} / {pairs}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok("2, 4, 11, 33, 148 graphs; 3, 10, 66, 561, 11026 pairs".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for d in 2..=4 {
        let pairs = unordered_pairs(&perfect_complexes(d));
        let failures: Vec<String> = pairs
            .par_iter()
            .filter_map(|(g1, g2)| {
                let p = merge_polytope(g1, g2).ok()?;
                let fano = is_fano(&p);
                let gor = is_gorenstein_fano(&p).map(|r| r.gorenstein).unwrap_or(false);
                let term = is_terminal(&p).unwrap_or(false);
                (!(fano && gor && term)).then(|| format!("d={d}: {g1} / {g2}"))
            })
            .collect();
        ensure(failures.is_empty(), || failures.join("; "))?;
        total += pairs.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{total} pairs Fano, Gorenstein and terminal"))
}

fn converse_case(delta: &SimplicialComplex) -> Result<(), String> {
    let p = merge_polytope(delta, delta).map_err(|e| e.to_string())?;
    let gorenstein = is_gorenstein_fano(&p).map(|r| r.gorenstein).unwrap_or(false);
    ensure(!gorenstein, || format!("{delta} is Gorenstein Fano"))?;
    let found = find_obstruction(delta).ok_or_else(|| format!("{delta}: no obstruction found"))?;
    let check = verify_obstruction_facet(&p, found.obstruction, &found.vertices).map_err(|e| e.to_string())?;
    ensure(check.certified, || format!("{delta}: obstruction {:?} not certified", found.obstruction))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for d in 1..=4 {
        let bad: Vec<SimplicialComplex> = all_complexes(d)
            .into_iter()
            .filter(|c| !is_flag(c).is_some_and(|g| is_perfect(&g)))
            .collect();
        let failures: Vec<String> = bad.par_iter().filter_map(|c| converse_case(c).err()).collect();
        ensure(failures.is_empty(), || failures.join("; "))?;
        count += bad.len();
    }
    // imperfect graphs first appear at five vertices; the antihole case is
    // distinguished from the hole case at seven
    let extra = [
        stable_set_complex(&Graph::cycle(5)),
        stable_set_complex(&Graph::cycle(7)),
        stable_set_complex(&Graph::cycle(7).complement()),
    ];
    for c in &extra {
        converse_case(c)?;
    }
    Ok(format!(
        "{count} non-perfect complexes on d <= 4 plus S(C5), S(C7), S(complement of C7) certified"
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for d in 1..=4 {
        let complexes = all_complexes(d);
        let failures: Vec<String> = complexes
            .par_iter()
            .filter_map(|c| {
                let a = incidence_matrix(c);
                let expected = is_flag(c).is_some_and(|g| is_perfect(&g));
                let compressed = match is_compressed(&a) {
                    Ok(r) => r.compressed,
                    Err(e) => return Some(format!("{c}: {e}")),
                };
                if compressed != expected {
                    return Some(format!("{c}: compressed {compressed}, perfect flag {expected}"));
                }
                if d <= 3 {
                    let found = match exists_squarefree_revlex_z_smallest(&a) {
                        Ok(o) => o.is_some(),
                        Err(e) => return Some(format!("{c}: {e}")),
                    };
                    if found != expected {
                        return Some(format!("{c}: z-smallest squarefree order {found}, perfect flag {expected}"));
                    }
                }
                None
            })
            .collect();
        ensure(failures.is_empty(), || failures.join("; "))?;
        count += complexes.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} labelled complexes on d <= 4"))
}

fn criterion_5() -> Outcome {
    let c = counterexample();
    let names = c.var_names();
    let gens: Vec<String> = toric_ideal_generators(&c).iter().map(|b| b.format(&names)).collect();
    ensure(gens == ["x1*x3*x5*x7 - x2*x4^2*x6"], || format!("generators {gens:?}"))?;
    let gens = toric_ideal_generators(&c);
    let initial = |order: &str| {
        let o = MonomialOrder::parse(order, &names).unwrap();
        initial_ideal(&buchberger(&gens, &o))
    };
    let first = initial("z < x2 < x1 < x3 < x4 < x5 < x6 < x7");
    ensure(first.format(&names) == ["x1*x3*x5*x7"] && first.is_squarefree(), || {
        format!("first order gives {:?}", first.format(&names))
    })?;
    let second = initial("z < x1 < x2 < x3 < x4 < x5 < x6 < x7");
    ensure(second.format(&names) == ["x2*x4^2*x6"] && !second.is_squarefree(), || {
        format!("second order gives {:?}", second.format(&names))
    })?;
    let compressed = is_compressed(&c).map_err(|e| e.to_string())?;
    ensure(!compressed.compressed, || "reported compressed".into())?;
    Ok("generator, both initial ideals and non-compressedness match".into())
}

/// Every labelled graph on `d` vertices.
fn labelled_graphs(d: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(d, &edges).unwrap()
        })
        .collect()
}

/// Pairs for the constructive check: the example blocks and all ordered pairs
/// of incidence blocks of labelled perfect graphs on up to three vertices.
fn theorem1_instances() -> Vec<(String, Configuration, Configuration)> {
    let mut out = vec![
        ("(A1, A1)".to_string(), a1(), a1()),
        ("(A1, A2)".to_string(), a1(), a2()),
        ("(A2, A2)".to_string(), a2(), a2()),
    ];
    for d in 1..=3 {
        let blocks: Vec<(String, Configuration)> = labelled_graphs(d)
            .into_iter()
            .filter(is_perfect)
            .map(|g| (format!("{g}"), incidence_block(&stable_set_complex(&g))))
            .collect();
        for (na, a) in &blocks {
            for (nb, b) in &blocks {
                out.push((format!("d={d} ({na}, {nb})"), a.clone(), b.clone()));
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let instances = theorem1_instances();
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|(name, a, b)| match verify_theorem1(a, b) {
            Ok(v) if v.holds() => None,
            Ok(v) => Some(format!("{name}: computed {:?}", v.computed)),
            Err(e) => Some(format!("{name}: {e}")),
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    for (a, b) in [(a1(), a1()), (a1(), a2()), (a2(), a2())] {
        let mut points: Vec<IntVec> = b.columns().iter().map(IntVec::neg).collect();
        points.extend(a.columns().iter().cloned());
        let p = VPolytope::new(2, points).map_err(|e| e.to_string())?;
        let g = is_gorenstein_fano(&p).map_err(|e| e.to_string())?;
        ensure(g.gorenstein, || format!("polygon {:?} not Gorenstein", p.vertices))?;
    }
    Ok(format!("{} instances verified; three polygons Gorenstein Fano", instances.len()))
}

fn criterion_7() -> Outcome {
    let instances = theorem1_instances();
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|(name, a, b)| {
            let v = verify_theorem1(a, b).ok()?;
            let merged = &v.construction.merged;
            let t = match triangulation_from_initial_ideal(merged, &v.computed) {
                Ok(t) => t,
                Err(e) => return Some(format!("{name}: {e}")),
            };
            let p = VPolytope::new(merged.d(), merged.columns().to_vec()).ok()?;
            let vol = normalized_volume(&p);
            (!(t.unimodular && t.all_contain_zero && t.volume == vol)).then(|| {
                format!(
                    "{name}: unimodular {}, contain z {}, volume {} vs {}",
                    t.unimodular, t.all_contain_zero, t.volume, vol
                )
            })
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} triangulations unimodular, coned from z, volumes agree", instances.len()))
}

/// Every configuration with at most six columns appearing in this suite.
fn small_configurations() -> Vec<(String, Configuration)> {
    let mut out = vec![
        ("A1#".to_string(), a1().sharp()),
        ("A2#".to_string(), a2().sharp()),
        ("twisted cubic".to_string(), config(&[&[3], &[2], &[1], &[0]])),
    ];
    for (name, a, b) in theorem1_instances() {
        if a.len() + b.len() < 6 {
            let m = reflexive_forge::toric::merge_config(&a, &b).unwrap();
            out.push((format!("merged {name}"), m));
        }
    }
    for d in 1..=3 {
        for c in all_complexes(d) {
            let a = incidence_matrix(&c);
            if a.len() <= 6 {
                out.push((format!("A of {c}"), a));
            }
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let configs = small_configurations();
    let failures: Vec<String> = configs
        .par_iter()
        .flat_map_iter(|(name, c)| {
            let gens = toric_ideal_generators(c);
            let n = c.len();
            let orders = [MonomialOrder::natural(n), MonomialOrder::revlex((0..n).rev().collect()).unwrap()];
            orders
                .into_iter()
                .filter_map(|o| {
                    let ideal = initial_ideal(&buchberger(&gens, &o));
                    match standard_monomials_match_fibers(c, &ideal, 4, 6) {
                        Ok(r) if r.ok() => None,
                        Ok(r) => Some(format!("{name}: fiber {:?}", r.failure)),
                        Err(e) => Some(format!("{name}: {e}")),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} configurations x 2 orders, degrees <= 4", configs.len()))
}

fn criterion_9() -> Outcome {
    // dual of the dual on every reflexive polytope of the main sweep
    let mut duals = 0;
    for d in 2..=4 {
        for (g1, g2) in unordered_pairs(&perfect_complexes(d)) {
            let p = merge_polytope(&g1, &g2).unwrap();
            let dd = dual_polytope(&p).and_then(|q| q.dual()).map_err(|e| e.to_string())?;
            ensure(dd == RationalPolytope::from(&p), || format!("dual of dual differs for {g1} / {g2}"))?;
            duals += 1;
        }
    }

    // reduced Gröbner bases do not depend on generator order
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut shuffled = 0;
    for (name, c) in small_configurations().into_iter().chain([("counterexample".into(), counterexample())]) {
        let gens = toric_ideal_generators(&c);
        let n = c.len();
        let order = MonomialOrder::with_smallest(n, n - 1);
        let reference = buchberger(&gens, &order);
        for _ in 0..3 {
            let mut g: Vec<Binomial> = gens.iter().map(|b| b.swapped()).collect();
            g.shuffle(&mut rng);
            ensure(buchberger(&g, &order) == reference, || format!("{name}: basis depends on input order"))?;
        }
        shuffled += 1;
    }

    // perfection by holes agrees with chromatic = clique on every induced subgraph
    for d in 1..=6 {
        let graphs = labelled_graphs(d);
        let bad = graphs.par_iter().find_any(|g| is_perfect(g) != is_perfect_by_coloring(g));
        ensure(bad.is_none(), || format!("d={d}: disagreement on {bad:?}"))?;
    }

    // any two complexes on the same vertex set are of harmony
    let mut harmony_pairs = 0;
    for d in 1..=4 {
        let blocks: Vec<Configuration> = all_complexes(d).iter().map(incidence_block).collect();
        let bad = blocks
            .par_iter()
            .enumerate()
            .find_any(|(_, a)| blocks.iter().any(|b| !is_harmony(a, b)));
        ensure(bad.is_none(), || format!("d={d}: harmony fails"))?;
        harmony_pairs += blocks.len() * blocks.len();
    }

    Ok(format!(
        "{duals} dual pairs, {shuffled} shuffled bases, graphs on d <= 6, {harmony_pairs} harmony pairs"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("perfect graph census", criterion_1),
        ("reflexive merged polytopes of perfect pairs", criterion_2),
        ("obstructions for non-perfect complexes", criterion_3),
        ("compressed iff perfect", criterion_4),
        ("counterexample", criterion_5),
        ("squarefree merged initial ideals", criterion_6),
        ("unimodular triangulations", criterion_7),
        ("fiber oracle", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS in {secs:.1}s: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL in {secs:.1}s: {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
