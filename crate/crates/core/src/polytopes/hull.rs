//! Exact V-to-H conversion by double description over the homogenized cone.
//!
//! Each point `p` becomes the generator `(p, 1)`. The facets of the cone they
//! span are the extreme rays of the polar cone `{h : h·(p, 1) <= 0}`, which
//! are built one inequality at a time. Two rays are combined only when they
//! are adjacent (no third ray is tight on everything both are tight on), so
//! the result is irredundant without a separate cleanup pass.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Facet;
use crate::error::{Error, Result};
use crate::exactmath::{kernel_lattice_basis, rank, Int, IntMat, IntVec, Rat};

/// Tight-set bitmap over point indices.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn contains_all(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    h: IntVec,
    tight: Bits,
}

fn lifted(p: &IntVec) -> IntVec {
    let mut v = p.entries().to_vec();
    v.push(Int::from(1));
    IntVec::new(v)
}

/// Affine rank of a point set (dimension of its affine hull).
pub fn affine_rank(points: &[IntVec]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let lifted: Vec<IntVec> = points.iter().map(lifted).collect();
    rank(&IntMat::from_columns(lifted[0].len(), &lifted)) - 1
}

/// Indices of a maximal affinely independent subset, chosen greedily in order.
pub(crate) fn independent_prefix(points: &[IntVec]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut cols: Vec<IntVec> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        cols.push(lifted(p));
        if rank(&IntMat::from_columns(cols[0].len(), &cols)) == cols.len() {
            chosen.push(i);
        } else {
            cols.pop();
        }
    }
    chosen
}

/// Facets of `conv(points)`, with primitive outward normals.
///
/// Points must be distinct. The facets are sorted by normal.
pub(crate) fn facets_of(d: usize, points: &[IntVec]) -> Result<Vec<Facet>> {
    let start = independent_prefix(points);
    if start.len() != d + 1 {
        return Err(Error::NotFullDimensional {
            rank: start.len().saturating_sub(1),
            dim: d,
        });
    }
    let n = points.len();
    let gens: Vec<IntVec> = points.iter().map(lifted).collect();

    // polar rays of the initial simplex: one per omitted vertex
    let mut rays: Vec<Ray> = Vec::new();
    for (k, &j) in start.iter().enumerate() {
        let others: Vec<IntVec> = start
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, &i)| gens[i].clone())
            .collect();
        let m = IntMat::from_columns(d + 1, &others).transpose();
        let kernel = kernel_lattice_basis(&m);
        debug_assert_eq!(kernel.len(), 1);
        let mut h = kernel[0].primitive();
        if h.dot(&gens[j]).is_positive() {
            h = h.neg();
        }
        let mut tight = Bits::new(n);
        for (l, &i) in start.iter().enumerate() {
            if l != k {
                tight.set(i);
            }
        }
        rays.push(Ray { h, tight });
    }

    let mut processed: Vec<usize> = start.clone();
    for i in (0..n).filter(|i| !start.contains(i)) {
        let g = &gens[i];
        let values: Vec<Int> = rays.iter().map(|r| r.h.dot(g)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        if pos.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.tight.set(i);
                }
            }
            processed.push(i);
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                // adjacency needs at least d - 1 common tight generators
                if common.count() + 1 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !r.tight.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let a = -&values[q];
                let b = values[p].clone();
                let h = IntVec::new(
                    rays[p]
                        .h
                        .iter()
                        .zip(rays[q].h.iter())
                        .map(|(x, y)| &a * x + &b * y)
                        .collect(),
                )
                .primitive();
                let mut tight = common;
                tight.set(i);
                new_rays.push(Ray { h, tight });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (k, mut r) in rays.into_iter().enumerate() {
            if values[k].is_positive() {
                continue;
            }
            if values[k].is_zero() {
                r.tight.set(i);
            }
            kept.push(r);
        }
        kept.extend(new_rays);
        rays = kept;
        processed.push(i);
    }

    let mut facets: Vec<Facet> = rays
        .into_iter()
        .map(|r| {
            let normal_raw = IntVec::new(r.h.entries()[..d].to_vec());
            let g = normal_raw.content();
            let normal = normal_raw.primitive();
            let rhs = Rat::new(-&r.h[d], g);
            Facet { normal, rhs }
        })
        .collect();
    facets.sort();
    facets.dedup();
    Ok(facets)
}

/// Points whose tight facet normals span rank `d`.
pub(crate) fn vertices_of(d: usize, points: &[IntVec], facets: &[Facet]) -> Vec<IntVec> {
    points
        .iter()
        .filter(|p| {
            let tight: Vec<IntVec> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| f.normal.clone())
                .collect();
            !tight.is_empty() && rank(&IntMat::from_columns(d, &tight)) == d
        })
        .cloned()
        .collect()
}

/// Common denominator of a set of rationals.
pub(crate) fn denominator_lcm<'a>(values: impl Iterator<Item = &'a Rat>) -> Int {
    values.fold(Int::from(1), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<IntVec> {
        v.iter().map(|p| IntVec::from_i64(p)).collect()
    }

    #[test]
    fn square_has_four_facets() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let f = facets_of(2, &p).unwrap();
        assert_eq!(f.len(), 4);
        for facet in &f {
            let tight = p.iter().filter(|q| facet.is_tight(q)).count();
            assert_eq!(tight, 2);
        }
    }

    #[test]
    fn interior_points_are_not_vertices() {
        let p = pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 0], &[1, 1], &[0, 1]]);
        let f = facets_of(2, &p).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(vertices_of(2, &p, &f), pts(&[&[0, 0], &[2, 0], &[0, 2]]));
    }

    #[test]
    fn flat_input_is_rejected() {
        let p = pts(&[&[0, 0], &[1, 1], &[2, 2]]);
        assert_eq!(
            facets_of(2, &p),
            Err(Error::NotFullDimensional { rank: 1, dim: 2 })
        );
        assert_eq!(affine_rank(&p), 1);
    }

    #[test]
    fn cube_in_three_dimensions() {
        let mut p = Vec::new();
        for mask in 0..8i64 {
            p.push(IntVec::from_i64(&[mask & 1, mask >> 1 & 1, mask >> 2 & 1]));
        }
        let f = facets_of(3, &p).unwrap();
        assert_eq!(f.len(), 6);
        assert_eq!(vertices_of(3, &p, &f).len(), 8);
    }
}
