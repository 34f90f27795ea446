//! Squarefree reverse lexicographic initial ideals, by order enumeration and
//! by facet widths.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::binomial::{Binomial, MonomialOrder};
use super::groebner::{buchberger, initial_ideal};
use super::ideal::toric_ideal_generators;
use super::Configuration;
use crate::error::{Error, Result};
use crate::exactmath::affine_lattice_coordinates;
use crate::polytopes::{all_facet_widths_one, VPolytope};

/// Largest number of nonzero columns for the `(N-1)!` sweep with `z` fixed last.
pub const Z_SMALLEST_LIMIT: usize = 8;

/// Largest number of nonzero columns for the full order sweep behind the cross-check.
pub const CROSS_CHECK_LIMIT: usize = 6;

fn squarefree_under(gens: &[Binomial], order: &MonomialOrder) -> bool {
    gens.is_empty() || initial_ideal(&buchberger(gens, order)).is_squarefree()
}

/// First ranking (in lexicographic permutation order) with `z` smallest whose
/// initial ideal is squarefree.
pub fn exists_squarefree_revlex_z_smallest(c: &Configuration) -> Result<Option<MonomialOrder>> {
    let z = c
        .zero_index()
        .ok_or_else(|| Error::InvalidInput("configuration has no zero column".into()))?;
    if c.nonzero_count() > Z_SMALLEST_LIMIT {
        return Err(Error::TooLarge {
            what: "nonzero columns for exhaustive order search",
            value: c.nonzero_count(),
            limit: Z_SMALLEST_LIMIT,
        });
    }
    let gens = toric_ideal_generators(c);
    let others: Vec<usize> = (0..c.len()).filter(|&i| i != z).collect();
    let perms: Vec<Vec<usize>> = others.iter().copied().permutations(others.len()).collect();
    Ok(perms.into_par_iter().find_map_first(|mut ranking| {
        ranking.push(z);
        let order = MonomialOrder::revlex(ranking).expect("a permutation");
        squarefree_under(&gens, &order).then_some(order)
    }))
}

/// First of the given orders with a squarefree initial ideal.
pub fn exists_squarefree_revlex_among(c: &Configuration, orders: &[MonomialOrder]) -> Option<MonomialOrder> {
    let gens = toric_ideal_generators(c);
    orders.iter().find(|o| squarefree_under(&gens, o)).cloned()
}

/// Squarefree initial ideal under every reverse lexicographic order, by
/// trying all `N!` variable rankings.
pub fn is_compressed_by_enumeration(c: &Configuration) -> bool {
    let gens = toric_ideal_generators(c);
    let perms: Vec<Vec<usize>> = (0..c.len()).permutations(c.len()).collect();
    perms.into_par_iter().all(|ranking| {
        let order = MonomialOrder::revlex(ranking).expect("a permutation");
        squarefree_under(&gens, &order)
    })
}

/// Both routes to compressedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressedReport {
    pub compressed: bool,
    pub facet_widths_one: bool,
    /// Result of the order sweep, when the configuration is small enough.
    pub enumeration: Option<bool>,
}

/// Compressed iff every facet of the column polytope has lattice width one.
///
/// Widths are measured in the affine lattice generated by the columns. For at
/// most six nonzero columns the answer is also obtained by enumerating every
/// order, and a disagreement is reported as an error.
pub fn is_compressed(c: &Configuration) -> Result<CompressedReport> {
    let facet_widths_one = widths_one(c)?;
    let enumeration = (c.nonzero_count() <= CROSS_CHECK_LIMIT).then(|| is_compressed_by_enumeration(c));
    if let Some(e) = enumeration {
        if e != facet_widths_one {
            return Err(Error::CrossCheckMismatch {
                facet_widths: facet_widths_one,
                enumeration: e,
            });
        }
    }
    Ok(CompressedReport {
        compressed: facet_widths_one,
        facet_widths_one,
        enumeration,
    })
}

fn widths_one(c: &Configuration) -> Result<bool> {
    let coords = affine_lattice_coordinates(c.columns());
    let dim = coords.first().map_or(0, |v| v.len());
    if dim == 0 {
        return Ok(true);
    }
    let p = VPolytope::new(dim, coords)?;
    Ok(all_facet_widths_one(&p))
}
