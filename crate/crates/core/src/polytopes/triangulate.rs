//! Placing triangulations and normalized volume.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{hull::independent_prefix, VPolytope};
use crate::error::{Error, Result};
use crate::exactmath::{determinant, Int, IntMat, IntVec};

/// Simplices as sorted lists of point indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn new(mut simplices: Vec<Vec<usize>>) -> Self {
        for s in &mut simplices {
            s.sort_unstable();
        }
        simplices.sort();
        Triangulation { simplices }
    }

    /// Sum of normalized simplex volumes.
    pub fn volume(&self, points: &[IntVec]) -> Int {
        self.simplices.iter().map(|s| simplex_volume(points, s)).sum()
    }

    pub fn is_unimodular(&self, points: &[IntVec]) -> bool {
        self.simplices.iter().all(|s| simplex_volume(points, s) == Int::from(1))
    }
}

fn homogenized(points: &[IntVec], idx: &[usize]) -> IntMat {
    let d = points[idx[0]].len();
    let cols: Vec<IntVec> = idx
        .iter()
        .map(|&i| {
            let mut v = points[i].entries().to_vec();
            v.push(Int::from(1));
            IntVec::new(v)
        })
        .collect();
    IntMat::from_columns(d + 1, &cols)
}

/// `|det|` of the homogenized vertex matrix: `d!` times the Euclidean volume.
pub fn simplex_volume(points: &[IntVec], simplex: &[usize]) -> Int {
    determinant(&homogenized(points, simplex)).abs()
}

fn orientation(points: &[IntVec], face: &[usize], apex: usize) -> Int {
    let mut idx = face.to_vec();
    idx.push(apex);
    determinant(&homogenized(points, &idx))
}

/// Placing triangulation: points are added in the given order, and each point
/// outside the current hull is coned over the boundary faces it sees.
pub fn placing_triangulation(points: &[IntVec], order: &[usize]) -> Result<Triangulation> {
    let d = points.first().map(IntVec::len).unwrap_or(0);
    let ordered: Vec<IntVec> = order.iter().map(|&i| points[i].clone()).collect();
    let start: Vec<usize> = independent_prefix(&ordered).into_iter().map(|k| order[k]).collect();
    if start.len() != d + 1 {
        return Err(Error::NotFullDimensional {
            rank: start.len().saturating_sub(1),
            dim: d,
        });
    }
    let mut simplices: Vec<Vec<usize>> = vec![start.clone()];
    // boundary faces of the current triangulation, with the opposite vertex
    let mut boundary: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for &v in &start {
        let mut face: Vec<usize> = start.iter().copied().filter(|&u| u != v).collect();
        face.sort_unstable();
        boundary.insert(face, v);
    }
    for &p in order.iter().filter(|p| !start.contains(p)) {
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(face, &opp)| {
                let sp = orientation(points, face, p);
                let so = orientation(points, face, opp);
                !sp.is_zero() && sp.is_positive() != so.is_positive()
            })
            .map(|(face, _)| face.clone())
            .collect();
        for face in visible {
            boundary.remove(&face);
            let mut simplex = face.clone();
            simplex.push(p);
            for &v in &face {
                let mut sub: Vec<usize> = simplex.iter().copied().filter(|&u| u != v).collect();
                sub.sort_unstable();
                if boundary.remove(&sub).is_none() {
                    boundary.insert(sub, v);
                }
            }
            simplices.push(simplex);
        }
    }
    Ok(Triangulation::new(simplices))
}

/// `d!` times the Euclidean volume, summed over a placing triangulation.
pub fn normalized_volume(p: &VPolytope) -> Int {
    let order: Vec<usize> = (0..p.vertices.len()).collect();
    placing_triangulation(&p.vertices, &order)
        .expect("polytopes are full-dimensional")
        .volume(&p.vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[&[i64]]) -> VPolytope {
        VPolytope::new(v[0].len(), v.iter().map(|p| IntVec::from_i64(p)).collect()).unwrap()
    }

    #[test]
    fn volume_examples() {
        assert_eq!(normalized_volume(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), Int::from(2));
        assert_eq!(normalized_volume(&poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), Int::from(1));
        let hex = poly(&[&[1, 0], &[0, 1], &[1, 1], &[-1, 0], &[0, -1], &[-1, -1]]);
        assert_eq!(normalized_volume(&hex), Int::from(6));
    }

    #[test]
    fn different_orders_agree() {
        let pts: Vec<IntVec> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [-1, 0, 0], [0, -1, -1], [0, 0, 0], [-1, -1, 0]]
            .iter()
            .map(|p| IntVec::from_i64(p))
            .collect();
        let fwd: Vec<usize> = (0..pts.len()).collect();
        let rev: Vec<usize> = (0..pts.len()).rev().collect();
        let a = placing_triangulation(&pts, &fwd).unwrap();
        let b = placing_triangulation(&pts, &rev).unwrap();
        assert_eq!(a.volume(&pts), b.volume(&pts));
        assert_eq!(a.volume(&pts), normalized_volume(&VPolytope::new(3, pts.clone()).unwrap()));
    }
}
