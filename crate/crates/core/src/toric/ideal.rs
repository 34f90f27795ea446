//! Generators of toric ideals: lattice basis binomials, then saturation.

use super::binomial::{Binomial, Monomial, MonomialOrder};
use super::groebner::buchberger;
use super::Configuration;
use crate::exactmath::kernel_lattice_basis;

/// `I : x_var^∞` for a homogeneous binomial ideal.
///
/// Under a reverse lexicographic order with `x_var` smallest, a homogeneous
/// polynomial is divisible by `x_var` exactly when its leading term is, so
/// dividing each basis element by its largest power of `x_var` generates
/// the saturation.
pub fn saturate(gens: &[Binomial], var: usize) -> Vec<Binomial> {
    let Some(n) = gens.first().map(|g| g.plus.nvars()) else {
        return Vec::new();
    };
    let order = MonomialOrder::with_smallest(n, var);
    let gb = buchberger(gens, &order);
    let mut out: Vec<Binomial> = gb
        .into_elements()
        .into_iter()
        .map(|b| {
            let k = b.plus.exponent(var).min(b.minus.exponent(var));
            if k == 0 {
                return b;
            }
            let mut e = vec![0u32; n];
            e[var] = k;
            let xk = Monomial::new(e);
            Binomial::new(b.plus.div(&xk), b.minus.div(&xk))
        })
        .filter(|b| !b.is_zero())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A minimal generating set of the toric ideal `I_C`.
///
/// The integer kernel of the homogenized matrix gives a lattice basis; the
/// binomials it spells out generate an ideal whose saturation by every
/// variable is `I_C`. The saturated ideal is then thinned to a minimal
/// generating set, degree by degree, and returned in a fixed orientation.
pub fn toric_ideal_generators(c: &Configuration) -> Vec<Binomial> {
    let n = c.len();
    let mut gens: Vec<Binomial> = kernel_lattice_basis(&c.homogenized_matrix())
        .iter()
        .map(Binomial::from_vector)
        .collect();
    if gens.is_empty() {
        return gens;
    }
    let mut before = buchberger(&gens, &MonomialOrder::natural(n));
    loop {
        for var in 0..n {
            gens = saturate(&gens, var);
        }
        let after = buchberger(&gens, &MonomialOrder::natural(n));
        if after == before {
            break;
        }
        before = after;
    }
    minimal_generators(gens, n)
}

fn minimal_generators(gens: Vec<Binomial>, n: usize) -> Vec<Binomial> {
    let order = MonomialOrder::natural(n);
    let mut candidates: Vec<Binomial> = buchberger(&gens, &order)
        .into_elements()
        .into_iter()
        .map(Binomial::canonical)
        .collect();
    candidates.sort_by(|a, b| a.plus.degree().cmp(&b.plus.degree()).then_with(|| b.cmp(a)));
    let mut kept: Vec<Binomial> = Vec::new();
    for g in candidates {
        if kept.is_empty() || !buchberger(&kept, &order).contains(&g) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::IntVec;

    fn config(cols: &[&[i64]]) -> Configuration {
        let d = cols[0].len();
        Configuration::new(d, cols.iter().map(|c| IntVec::from_i64(c)).collect()).unwrap()
    }

    #[test]
    fn independent_columns_give_zero_ideal() {
        let c = config(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(toric_ideal_generators(&c).is_empty());
    }

    #[test]
    fn a2_sharp() {
        let c = config(&[&[1, 0], &[0, 1], &[1, 1]]).sharp();
        let g = toric_ideal_generators(&c);
        let names = c.var_names();
        let shown: Vec<String> = g.iter().map(|b| b.format(&names)).collect();
        assert_eq!(shown, vec!["x1*x2 - x3*z"]);
    }

    #[test]
    fn generators_lie_in_the_kernel() {
        // twisted cubic needs saturation: the lattice basis alone misses x1 x4 - x2 x3
        let c = config(&[&[3], &[2], &[1], &[0]]);
        let g = toric_ideal_generators(&c);
        assert_eq!(g.len(), 3);
        for b in &g {
            assert!(c.homogenized_matrix().mul_vec(&b.to_vector()).is_zero());
            assert!(b.is_irreducible());
        }
    }
}
