//! Brute-force canonical forms and the perfect graph census.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use super::{is_perfect, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Canonical representative of an isomorphism class: the lexicographically
/// smallest sorted edge list over all relabellings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub d: usize,
    /// Sorted 0-based edges `(i, j)`, `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.d, &self.edges).expect("canonical forms are simple graphs")
    }
}

/// Relabelling tables for one vertex count.
///
/// Edge `(i, j)` (lexicographic index `k` among all pairs) is stored at bit
/// `pairs - 1 - k`. For edge sets of equal size, the lexicographically smaller
/// sorted list is the one owning the smallest pair of the symmetric difference,
/// i.e. the numerically larger mask, so the canonical form is the maximum mask.
struct Relabeller {
    d: usize,
    pairs: usize,
    /// For each permutation, the new bit position of each old bit position.
    tables: Vec<Vec<u8>>,
}

impl Relabeller {
    fn new(d: usize) -> Self {
        let pairs = d * d.saturating_sub(1) / 2;
        let index = pair_index_table(d);
        let tables = (0..d)
            .permutations(d)
            .map(|perm| {
                let mut t = vec![0u8; pairs];
                for i in 0..d {
                    for j in i + 1..d {
                        let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                        t[pairs - 1 - index[i][j]] = (pairs - 1 - index[a][b]) as u8;
                    }
                }
                t
            })
            .collect();
        Relabeller { d, pairs, tables }
    }

    fn canonical_mask(&self, mask: u32) -> u32 {
        self.tables
            .iter()
            .map(|t| {
                let mut out = 0u32;
                let mut m = mask;
                while m != 0 {
                    let b = m.trailing_zeros() as usize;
                    out |= 1 << t[b];
                    m &= m - 1;
                }
                out
            })
            .max()
            .unwrap_or(mask)
    }

    fn mask_of(&self, g: &Graph) -> u32 {
        let index = pair_index_table(self.d);
        g.edges()
            .into_iter()
            .map(|(i, j)| 1u32 << (self.pairs - 1 - index[i][j]))
            .fold(0, |a, b| a | b)
    }

    fn graph_of(&self, mask: u32) -> Graph {
        let mut g = Graph::empty(self.d);
        let mut k = 0;
        for i in 0..self.d {
            for j in i + 1..self.d {
                if mask >> (self.pairs - 1 - k) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

fn pair_index_table(d: usize) -> Vec<Vec<usize>> {
    let mut index = vec![vec![0; d]; d];
    let mut k = 0;
    for i in 0..d {
        for j in i + 1..d {
            index[i][j] = k;
            k += 1;
        }
    }
    index
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let d = g.order();
    if d > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge {
            what: "vertex count for canonical form",
            value: d,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    let r = Relabeller::new(d);
    let mask = r.canonical_mask(r.mask_of(g));
    Ok(CanonicalForm {
        d,
        edges: r.graph_of(mask).edges(),
    })
}

/// Largest vertex count handled by the labelled-graph sweep.
const LABELLED_SWEEP_LIMIT: usize = 6;

/// Perfect graphs on `n` vertices up to isomorphism, as canonical forms in sorted order.
///
/// Up to six vertices every labelled graph is enumerated and bucketed by canonical form.
/// From seven vertices on, each class is grown from the perfect classes on `n - 1`
/// vertices by adding a vertex with an arbitrary neighbourhood; this reaches every
/// class because induced subgraphs of perfect graphs are perfect.
pub fn perfect_graphs(n: usize) -> Result<Vec<CanonicalForm>> {
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge {
            what: "census vertex count",
            value: n,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    if n <= LABELLED_SWEEP_LIMIT {
        Ok(perfect_graphs_labelled_sweep(n))
    } else {
        Ok(perfect_graphs_by_extension(n))
    }
}

pub fn perfect_graphs_labelled_sweep(n: usize) -> Vec<CanonicalForm> {
    let r = Relabeller::new(n);
    let masks: BTreeSet<u32> = (0..1u32 << r.pairs)
        .into_par_iter()
        .filter_map(|mask| is_perfect(&r.graph_of(mask)).then(|| r.canonical_mask(mask)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    to_forms(&r, masks)
}

pub fn perfect_graphs_by_extension(n: usize) -> Vec<CanonicalForm> {
    if n <= 1 {
        return perfect_graphs_labelled_sweep(n);
    }
    let smaller = perfect_graphs_by_extension(n - 1);
    let r = Relabeller::new(n);
    let masks: BTreeSet<u32> = smaller
        .par_iter()
        .flat_map_iter(|base| {
            let base = base.to_graph();
            let r = &r;
            (0..1u64 << (n - 1)).filter_map(move |nbhd| {
                let mut g = Graph::empty(n);
                for (i, j) in base.edges() {
                    g.add_edge(i, j);
                }
                for v in super::members(nbhd) {
                    g.add_edge(v, n - 1);
                }
                is_perfect(&g).then(|| r.canonical_mask(r.mask_of(&g)))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    to_forms(&r, masks)
}

fn to_forms(r: &Relabeller, masks: BTreeSet<u32>) -> Vec<CanonicalForm> {
    let mut forms: Vec<CanonicalForm> = masks
        .into_iter()
        .map(|m| CanonicalForm {
            d: r.d,
            edges: r.graph_of(m).edges(),
        })
        .collect();
    forms.sort();
    forms
}

/// Number of perfect graphs on `n` vertices up to isomorphism.
pub fn count_perfect(n: usize) -> Result<usize> {
    Ok(perfect_graphs(n)?.len())
}

/// Unordered pairs with repetition: `k (k + 1) / 2` for `k` perfect classes.
pub fn count_perfect_pairs(n: usize) -> Result<usize> {
    let k = count_perfect(n)?;
    Ok(k * (k + 1) / 2)
}
