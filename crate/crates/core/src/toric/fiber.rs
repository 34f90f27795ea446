//! Fibers of the monomial map, by direct enumeration.
//!
//! Two monomials of the same degree have the same image exactly when their
//! difference is in the toric ideal. A monomial ideal is an initial ideal of
//! `I_C` exactly when every fiber holds one monomial outside it; checking this
//! up to a degree bound is an oracle independent of Buchberger's algorithm.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::binomial::{Monomial, MonomialIdeal};
use super::Configuration;
use crate::error::{Error, Result};
use crate::exactmath::IntVec;

/// Default total degree bound for fiber enumeration.
pub const DEFAULT_DEGREE_BOUND: u32 = 6;

fn compositions(n: usize, k: u32, f: &mut impl FnMut(&[u32])) {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if i + 1 == cur.len() {
            cur[i] = left;
            f(cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, f);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if k == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0; n];
    go(0, k, &mut cur, f);
}

/// All monomials of degree `k`, grouped by image.
pub fn fibers_of_degree(c: &Configuration, k: u32, bound: u32) -> Result<BTreeMap<IntVec, Vec<Monomial>>> {
    if k > bound {
        return Err(Error::DegreeBoundExceeded { degree: k, bound });
    }
    let mut fibers: BTreeMap<IntVec, Vec<Monomial>> = BTreeMap::new();
    compositions(c.len(), k, &mut |e| {
        let m = Monomial::new(e.to_vec());
        fibers.entry(c.image(&m)).or_default().push(m);
    });
    for f in fibers.values_mut() {
        f.sort();
    }
    Ok(fibers)
}

/// Monomials whose image is `target` (a vector in `Z^{d+1}`, last entry the degree).
pub fn fiber(c: &Configuration, target: &IntVec, bound: u32) -> Result<Vec<Monomial>> {
    if target.len() != c.d() + 1 {
        return Err(Error::DimensionMismatch {
            expected: c.d() + 1,
            got: target.len(),
        });
    }
    use num_traits::ToPrimitive;
    let Some(k) = target[c.d()].to_u32() else {
        return Ok(Vec::new());
    };
    Ok(fibers_of_degree(c, k, bound)?.remove(target).unwrap_or_default())
}

/// Result of comparing standard monomials with fibers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCheck {
    pub max_degree: u32,
    pub fibers: usize,
    /// A fiber without exactly one standard monomial, as its image.
    pub failure: Option<Vec<i64>>,
}

impl FiberCheck {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that every fiber of degree `<= max_degree` has exactly one monomial
/// outside `ideal`.
pub fn standard_monomials_match_fibers(
    c: &Configuration,
    ideal: &MonomialIdeal,
    max_degree: u32,
    bound: u32,
) -> Result<FiberCheck> {
    let mut count = 0;
    for k in 0..=max_degree {
        for (image, members) in fibers_of_degree(c, k, bound)? {
            count += 1;
            let standard = members.iter().filter(|m| !ideal.contains(m)).count();
            if standard != 1 {
                return Ok(FiberCheck {
                    max_degree,
                    fibers: count,
                    failure: Some(image.to_i64().expect("fits in i64")),
                });
            }
        }
    }
    Ok(FiberCheck {
        max_degree,
        fibers: count,
        failure: None,
    })
}
