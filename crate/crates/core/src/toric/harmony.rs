//! Harmony of two configurations and the squarefree initial ideal of the
//! merged configuration `[-B, A]^♯`.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::binomial::{Monomial, MonomialIdeal, MonomialOrder};
use super::groebner::{buchberger, initial_ideal};
use super::ideal::toric_ideal_generators;
use super::{Configuration, MergeRoles};
use crate::error::{Error, Result};
use crate::exactmath::{positive_negative_parts, IntVec};

/// A pair of columns `a ∈ A^♯`, `b ∈ B^♯` on which harmony fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonyWitness {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

fn check_block(c: &Configuration, block: &'static str) -> Result<()> {
    if !c.is_nonnegative() {
        return Err(Error::InvalidInput(format!("block {block} has a negative entry")));
    }
    if c.has_zero_column() {
        return Err(Error::InvalidInput(format!("block {block} has a zero column")));
    }
    Ok(())
}

/// The first pair of columns violating harmony, if any.
///
/// For every `a` in `A^♯` and `b` in `B^♯`, with `c = a - b`, the positive
/// part of `c` must be a column of `A^♯` and the negative part a column of `B^♯`.
pub fn harmony_violation(a: &Configuration, b: &Configuration) -> Option<HarmonyWitness> {
    let a_cols: HashSet<IntVec> = a.sharp().columns().iter().cloned().collect();
    let b_cols: HashSet<IntVec> = b.sharp().columns().iter().cloned().collect();
    for x in a.sharp().columns() {
        for y in b.sharp().columns() {
            let (plus, minus) = positive_negative_parts(&x.sub(y));
            if !a_cols.contains(&plus) || !b_cols.contains(&minus) {
                return Some(HarmonyWitness {
                    a: x.to_i64().expect("fits in i64"),
                    b: y.to_i64().expect("fits in i64"),
                });
            }
        }
    }
    None
}

pub fn is_harmony(a: &Configuration, b: &Configuration) -> bool {
    harmony_violation(a, b).is_none()
}

/// `[-b_1, ..., -b_m, a_1, ..., a_n, 0]` with variables `y1..ym, x1..xn, z`.
pub fn merge_config(a: &Configuration, b: &Configuration) -> Result<Configuration> {
    check_block(a, "A")?;
    check_block(b, "B")?;
    if a.d() != b.d() {
        return Err(Error::DimensionMismatch {
            expected: a.d(),
            got: b.d(),
        });
    }
    let mut cols: Vec<IntVec> = b.columns().iter().map(IntVec::neg).collect();
    cols.extend(a.columns().iter().cloned());
    cols.push(IntVec::zeros(a.d()));
    Ok(Configuration::new(a.d(), cols)?.with_roles(MergeRoles {
        m: b.len(),
        n: a.len(),
    }))
}

fn divisibility_cmp(x: &IntVec, y: &IntVec) -> Ordering {
    y.sum().cmp(&x.sum()).then_with(|| y.cmp(x))
}

/// Reverse lexicographic order on the variables of `C^♯` ranking larger
/// columns first: by coordinate sum, then lexicographically, with `z` last.
///
/// Any column dominated componentwise by another gets a smaller variable.
pub fn divisibility_order(c: &Configuration) -> MonomialOrder {
    let s = c.sharp();
    let z = s.zero_index().expect("sharp configurations have a zero column");
    let mut ranking: Vec<usize> = (0..s.len()).filter(|&i| i != z).collect();
    ranking.sort_by(|&i, &j| divisibility_cmp(s.column(i), s.column(j)));
    ranking.push(z);
    MonomialOrder::revlex(ranking).expect("a permutation")
}

/// The order, pair set and monomials that should generate the initial ideal
/// of the merged configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedOrderConstruction {
    pub merged: Configuration,
    /// `z < x_n < ... < x_1 < y_m < ... < y_1`, with the `x` and `y` blocks
    /// ranked by their divisibility orders.
    pub order: MonomialOrder,
    /// Pairs `(i, j)` (0-based indices into `A` and `B`) with intersecting supports.
    pub pairs: Vec<(usize, usize)>,
    /// Minimal generators of `in(I_{A^♯})`, in merged variables.
    pub m_a: Vec<Monomial>,
    /// Minimal generators of `in(I_{B^♯})`, in merged variables.
    pub m_b: Vec<Monomial>,
    /// `{x_i y_j : (i, j) ∈ E} ∪ M_A ∪ M_B`.
    pub monomials: MonomialIdeal,
}

/// Initial ideal of `I_{C^♯}` under the divisibility order, as monomials in
/// the merged ring (variable `k` of `C^♯` goes to `map[k]`).
fn block_initial(c: &Configuration, block: &'static str, map: &[usize], total: usize) -> Result<Vec<Monomial>> {
    let s = c.sharp();
    let gb = buchberger(&toric_ideal_generators(&s), &divisibility_order(c));
    let ini = initial_ideal(&gb);
    if !ini.is_squarefree() {
        return Err(Error::NotSquarefreeInput { block });
    }
    Ok(ini
        .generators()
        .iter()
        .map(|g| {
            let vars: Vec<usize> = g.support().iter().map(|&k| map[k]).collect();
            Monomial::product(total, &vars)
        })
        .collect())
}

pub fn theorem1_construction(a: &Configuration, b: &Configuration) -> Result<MergedOrderConstruction> {
    let merged = merge_config(a, b)?;
    if !is_harmony(a, b) {
        return Err(Error::NotHarmony);
    }
    let (m, n) = (b.len(), a.len());
    let total = m + n + 1;
    let z = m + n;
    // variable k of B^♯ (k < m) is y_{k+1}, the zero column is z; likewise for A^♯
    let b_map: Vec<usize> = (0..m).chain([z]).collect();
    let a_map: Vec<usize> = (m..m + n).chain([z]).collect();
    let m_b = block_initial(b, "B", &b_map, total)?;
    let m_a = block_initial(a, "A", &a_map, total)?;

    let mut ranking: Vec<usize> = divisibility_order(b).ranking()[..m].iter().map(|&k| b_map[k]).collect();
    ranking.extend(divisibility_order(a).ranking()[..n].iter().map(|&k| a_map[k]));
    ranking.push(z);
    let order = MonomialOrder::revlex(ranking)?;

    let mut pairs = Vec::new();
    let mut gens: Vec<Monomial> = Vec::new();
    for i in 0..n {
        let sa: HashSet<usize> = a.column(i).support().into_iter().collect();
        for j in 0..m {
            if b.column(j).support().iter().any(|k| sa.contains(k)) {
                pairs.push((i, j));
                gens.push(Monomial::product(total, &[m + i, j]));
            }
        }
    }
    gens.extend(m_a.iter().cloned());
    gens.extend(m_b.iter().cloned());
    Ok(MergedOrderConstruction {
        merged,
        order,
        pairs,
        m_a,
        m_b,
        monomials: MonomialIdeal::new(gens),
    })
}

/// The constructed monomials against a direct Gröbner basis computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Verification {
    pub construction: MergedOrderConstruction,
    /// Initial ideal of `I_{[-B, A]^♯}` computed from scratch under the merged order.
    pub computed: MonomialIdeal,
    pub matches: bool,
    pub squarefree: bool,
}

impl Theorem1Verification {
    pub fn holds(&self) -> bool {
        self.matches && self.squarefree
    }
}

pub fn verify_theorem1(a: &Configuration, b: &Configuration) -> Result<Theorem1Verification> {
    let construction = theorem1_construction(a, b)?;
    let gens = toric_ideal_generators(&construction.merged);
    let gb = buchberger(&gens, &construction.order);
    let computed = initial_ideal(&gb);
    let matches = computed == construction.monomials;
    let squarefree = computed.is_squarefree();
    Ok(Theorem1Verification {
        construction,
        computed,
        matches,
        squarefree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn harmony_examples() {
        for x in [a1(), a2()] {
            for y in [a1(), a2()] {
                assert!(is_harmony(&x, &y));
            }
        }
        assert!(!is_harmony(&config(&[&[2]]), &config(&[&[1]])));
    }

    #[test]
    fn merge_layout() {
        let m = merge_config(&a1(), &a1()).unwrap();
        assert_eq!(m.to_text(), "2 5\n-1 0 1 0 0\n0 -1 0 1 0\n");
        assert_eq!(m.var_names(), vec!["y1", "y2", "x1", "x2", "z"]);
        assert_eq!(merge_config(&a2(), &a1()).unwrap().len(), 6);
        assert!(merge_config(&a1().sharp(), &a1()).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let c = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(divisibility_order(&c).ranking(), &[2, 0, 1, 3]);
        let id = config(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(divisibility_order(&id).ranking(), &[0, 1, 2, 3]);
    }

    #[test]
    fn construction_examples() {
        let t = theorem1_construction(&a1(), &a1()).unwrap();
        assert_eq!(t.pairs, vec![(0, 0), (1, 1)]);
        assert!(t.m_a.is_empty() && t.m_b.is_empty());
        let names = t.merged.var_names();
        assert_eq!(t.monomials.format(&names), vec!["y2*x2", "y1*x1"]);

        let t = theorem1_construction(&a2(), &a1()).unwrap();
        assert_eq!(t.pairs, vec![(0, 0), (1, 1), (2, 0), (2, 1)]);
        let names = t.merged.var_names();
        let shown: Vec<String> = t.m_a.iter().map(|m| m.format(&names)).collect();
        assert_eq!(shown, vec!["x1*x2"]);
        assert!(t.m_b.is_empty());
    }

    #[test]
    fn verification_examples() {
        for (x, y) in [(a1(), a1()), (a2(), a1()), (a1(), a2()), (a2(), a2())] {
            let v = verify_theorem1(&x, &y).unwrap();
            assert!(v.holds(), "{:?}", v.computed);
        }
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            theorem1_construction(&config(&[&[2]]), &config(&[&[1]])).unwrap_err(),
            Error::NotHarmony
        );
    }
}
