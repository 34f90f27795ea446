//! Certificates that a merged polytope is not reflexive.
//!
//! A non-flag complex or an imperfect graph yields a hyperplane `Σ_{i∈V} z_i = c`
//! supporting the merged polytope, such that every facet through its contact
//! set has a non-integral equation at right-hand side 1.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{lattice_points, FacetReport, VPolytope};
use crate::complexes::{is_flag, SimplicialComplex};
use crate::error::Result;
use crate::exactmath::{Int, IntVec};
use crate::graphs::{find_odd_antihole, find_odd_hole, members, VertexSet};

/// The three obstruction shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// A minimal nonface with `e >= 3` vertices; level `e - 1`.
    Nonflag { e: usize },
    /// An induced cycle of length `2ℓ + 1 >= 5`; level `ℓ`.
    OddHole { l: usize },
    /// The complement of such a cycle; level 2.
    OddAntihole { l: usize },
}

impl Obstruction {
    /// Right-hand side `c` of the hyperplane `Σ z_i = c`.
    pub fn level(&self) -> usize {
        match *self {
            Obstruction::Nonflag { e } => e - 1,
            Obstruction::OddHole { l } => l,
            Obstruction::OddAntihole { .. } => 2,
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            Obstruction::Nonflag { e } => e,
            Obstruction::OddHole { l } | Obstruction::OddAntihole { l } => 2 * l + 1,
        }
    }
}

/// An obstruction located in a complex, with its vertex set (0-based, in
/// cycle order for holes and antiholes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocatedObstruction {
    pub obstruction: Obstruction,
    pub vertices: Vec<usize>,
}

/// A non-flag minimal nonface if there is one, otherwise an odd hole or odd
/// antihole of the graph; `None` when the complex is `S(G)` with `G` perfect.
pub fn find_obstruction(complex: &SimplicialComplex) -> Option<LocatedObstruction> {
    let Some(g) = is_flag(complex) else {
        let v: VertexSet = complex
            .minimal_nonfaces()
            .into_iter()
            .find(|f| f.count_ones() >= 3)
            .expect("non-flag complexes have a large minimal nonface");
        let vertices: Vec<usize> = members(v).collect();
        return Some(LocatedObstruction {
            obstruction: Obstruction::Nonflag { e: vertices.len() },
            vertices,
        });
    };
    if let Some(cycle) = find_odd_hole(&g) {
        return Some(LocatedObstruction {
            obstruction: Obstruction::OddHole { l: cycle.len() / 2 },
            vertices: cycle,
        });
    }
    find_odd_antihole(&g).map(|cycle| LocatedObstruction {
        obstruction: Obstruction::OddAntihole { l: cycle.len() / 2 },
        vertices: cycle,
    })
}

/// What the obstruction check found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCheck {
    pub level: usize,
    /// The maximum of `Σ_{i∈V} z_i` over the polytope equals the level.
    pub supporting: bool,
    /// Lattice points of the polytope on the hyperplane.
    pub contact: Vec<Vec<i64>>,
    /// Facets containing the whole contact set.
    pub facets: Vec<FacetReport>,
    /// Supporting, at least one facet through the contact set, and none of
    /// them integral at right-hand side 1.
    pub certified: bool,
}

/// Checks the hyperplane `Σ_{i∈V} z_i = level` against the merged polytope.
pub fn verify_obstruction_facet(
    p: &VPolytope,
    obstruction: Obstruction,
    vertices: &[usize],
) -> Result<ObstructionCheck> {
    let level = obstruction.level();
    let mut normal = IntVec::zeros(p.d);
    for &v in vertices {
        normal[v] = Int::from(1);
    }
    let max = p.vertices.iter().map(|v| normal.dot(v)).max().unwrap_or_else(Int::zero);
    let supporting = vertices.len() == obstruction.size() && max == Int::from(level);
    let contact: Vec<IntVec> = lattice_points(p)
        .into_iter()
        .filter(|x| normal.dot(x) == Int::from(level))
        .collect();
    let facets: Vec<FacetReport> = if supporting {
        p.facets_containing(&contact)
            .map(FacetReport::of)
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    let certified = supporting && !facets.is_empty() && facets.iter().all(|f| !f.integral_at_one);
    Ok(ObstructionCheck {
        level,
        supporting,
        contact: contact.iter().map(|x| x.to_i64().expect("fits in i64")).collect(),
        facets,
        certified,
    })
}
