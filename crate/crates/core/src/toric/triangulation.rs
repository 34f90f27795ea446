//! The triangulation encoded by a squarefree initial ideal: its maximal
//! simplices are the facets of the Stanley–Reisner complex of the ideal.

use num_traits::Zero;

use super::binomial::MonomialIdeal;
use super::Configuration;
use crate::error::{Error, Result};
use crate::exactmath::{determinant, Int, IntMat, IntVec};
use crate::polytopes::Triangulation;

/// A triangulation read off an initial ideal, with its flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialTriangulation {
    pub triangulation: Triangulation,
    /// Every maximal simplex has normalized volume 1.
    pub unimodular: bool,
    /// Every generator of the ideal has degree 2.
    pub quadratic: bool,
    /// Every maximal simplex uses the zero column.
    pub all_contain_zero: bool,
    /// Sum of the normalized simplex volumes.
    pub volume: Int,
}

fn homogenized_det(c: &Configuration, simplex: &[usize]) -> Int {
    let cols: Vec<IntVec> = simplex
        .iter()
        .map(|&i| {
            let mut v = c.column(i).entries().to_vec();
            v.push(Int::from(1));
            IntVec::new(v)
        })
        .collect();
    determinant(&IntMat::from_columns(c.d() + 1, &cols))
}

/// Column sets of size `d + 1` containing no generator support, kept when
/// they span a full-dimensional simplex.
pub fn triangulation_from_initial_ideal(c: &Configuration, ideal: &MonomialIdeal) -> Result<InitialTriangulation> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if c.len() > 64 {
        return Err(Error::TooLarge {
            what: "columns for triangulation",
            value: c.len(),
            limit: 64,
        });
    }
    let forbidden: Vec<u64> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let n = c.len();
    let max_size = c.d() + 1;
    let mut faces: Vec<u64> = Vec::new();

    // (d+1)-element faces of the Stanley–Reisner complex, by depth-first search
    fn go(start: usize, cur: u64, left: usize, n: usize, forbidden: &[u64], out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - left {
            let next = cur | 1 << i;
            if forbidden.iter().all(|&f| f & !next != 0) {
                go(i + 1, next, left - 1, n, forbidden, out);
            }
        }
    }
    if n >= max_size {
        go(0, 0, max_size, n, &forbidden, &mut faces);
    }

    let mut simplices = Vec::new();
    let mut dets = Vec::new();
    for f in faces {
        let idx: Vec<usize> = (0..n).filter(|&i| f >> i & 1 == 1).collect();
        let det = homogenized_det(c, &idx);
        if det.is_zero() {
            continue;
        }
        dets.push(num_traits::Signed::abs(&det));
        simplices.push(idx);
    }
    let zero = c.zero_index();
    let all_contain_zero = zero.is_some_and(|z| simplices.iter().all(|s| s.contains(&z)));
    Ok(InitialTriangulation {
        unimodular: !dets.is_empty() && dets.iter().all(|d| *d == Int::from(1)),
        quadratic: ideal.is_quadratic(),
        all_contain_zero,
        volume: dets.iter().sum(),
        triangulation: Triangulation::new(simplices),
    })
}
