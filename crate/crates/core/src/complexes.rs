//! Simplicial complexes on `0..d` containing every vertex, stored as sorted face bitmasks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::IntVec;
use crate::graphs::{full_set, members, stable_sets, Graph, VertexSet, MAX_VERTICES};
use crate::toric::Configuration;

/// A down-closed family of subsets of `0..d` containing the empty set and all singletons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    d: usize,
    faces: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Down-closure of `facets` together with all singletons and the empty set.
    pub fn from_facets(d: usize, facets: &[VertexSet]) -> Result<Self> {
        if d > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: d,
                limit: MAX_VERTICES,
            });
        }
        let full = full_set(d);
        let mut faces = vec![0];
        faces.extend((0..d).map(|i| 1u64 << i));
        for &f in facets {
            if f & !full != 0 {
                let v = (f & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v + 1, d });
            }
            if f.count_ones() > 24 {
                return Err(Error::TooLarge {
                    what: "facet size",
                    value: f.count_ones() as usize,
                    limit: 24,
                });
            }
            // all submasks of f
            let mut sub = f;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces.sort_unstable();
        faces.dedup();
        Ok(SimplicialComplex { d, faces })
    }

    /// The full simplex on `0..d`.
    pub fn simplex(d: usize) -> Self {
        Self::from_facets(d, &[full_set(d)]).expect("in range")
    }

    /// The boundary of the simplex on `0..e`: facets are all `e - 1`-subsets.
    pub fn simplex_boundary(e: usize) -> Self {
        let full = full_set(e);
        let facets: Vec<VertexSet> = (0..e).map(|i| full & !(1 << i)).collect();
        Self::from_facets(e, &facets).expect("in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    /// All faces in increasing mask order (the empty face first).
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Inclusion-maximal faces, in increasing mask order.
    pub fn facets(&self) -> Vec<VertexSet> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| (0..self.d).all(|v| f >> v & 1 == 1 || !self.contains(f | 1 << v)))
            .collect()
    }

    /// Nonfaces all of whose proper subsets are faces.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        // a minimal nonface is F ∪ {v} for a face F, v ∉ F, with every F∪{v}∖{u} a face
        let mut out: Vec<VertexSet> = Vec::new();
        for &f in &self.faces {
            for v in 0..self.d {
                let s = f | 1 << v;
                if s == f || self.contains(s) {
                    continue;
                }
                if members(s).all(|u| self.contains(s & !(1 << u))) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Parses `d` followed by one facet per line (1-based vertices); closes on load.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let d: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::Parse("vertex count must be an integer".into()))?;
        if d > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: d,
                limit: MAX_VERTICES,
            });
        }
        let mut facets = Vec::new();
        for line in lines {
            let mut f: VertexSet = 0;
            for t in line.split_whitespace() {
                let v: usize = t.parse().map_err(|_| Error::Parse(format!("bad vertex `{t}`")))?;
                if v == 0 || v > d {
                    return Err(Error::VertexOutOfRange { vertex: v, d });
                }
                f |= 1 << (v - 1);
            }
            facets.push(f);
        }
        Self::from_facets(d, &facets)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.d);
        for f in self.facets() {
            let vs: Vec<String> = members(f).map(|v| (v + 1).to_string()).collect();
            out.push_str(&vs.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(d={}, facets={self})", self.d)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets().into_iter().map(format_face).collect();
        write!(f, "{{{}}}", facets.join(","))
    }
}

/// Formats a face as its 1-based vertices, e.g. `{1,3}`.
pub fn format_face(face: VertexSet) -> String {
    let vs: Vec<String> = members(face).map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", vs.join(","))
}

pub fn stable_set_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex {
        d: g.order(),
        faces: stable_sets(g),
    }
}

/// If every minimal nonface has two elements, the graph whose edges are those
/// nonfaces; the complex is then its stable-set complex.
pub fn is_flag(complex: &SimplicialComplex) -> Option<Graph> {
    let nonfaces = complex.minimal_nonfaces();
    if nonfaces.iter().any(|s| s.count_ones() != 2) {
        return None;
    }
    let edges: Vec<(usize, usize)> = nonfaces
        .iter()
        .map(|&s| {
            let mut it = members(s);
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    Some(Graph::new(complex.d, &edges).expect("distinct vertex pairs"))
}

/// Column order of incidence matrices: larger faces first, then lexicographic
/// on the sorted vertex lists. The empty face therefore comes last.
pub fn incidence_order(a: VertexSet, b: VertexSet) -> Ordering {
    b.count_ones()
        .cmp(&a.count_ones())
        .then_with(|| members(a).cmp(members(b)))
}

pub fn indicator(d: usize, face: VertexSet) -> IntVec {
    let mut v = IntVec::zeros(d);
    for i in members(face) {
        v[i] = 1.into();
    }
    v
}

/// Faces in incidence-column order.
pub fn ordered_faces(complex: &SimplicialComplex) -> Vec<VertexSet> {
    let mut faces = complex.faces.clone();
    faces.sort_by(|&a, &b| incidence_order(a, b));
    faces
}

/// The incidence matrix `A_Δ`: one 0/1 column per face, the empty face giving
/// the trailing zero column.
pub fn incidence_matrix(complex: &SimplicialComplex) -> Configuration {
    let mut cols: Vec<IntVec> = ordered_faces(complex)
        .into_iter()
        .filter(|&f| f != 0)
        .map(|f| indicator(complex.d, f))
        .collect();
    cols.push(IntVec::zeros(complex.d));
    Configuration::new(complex.d, cols).expect("faces are distinct")
}

/// `A_Δ` without the zero column, as used for harmony and merging.
pub fn incidence_block(complex: &SimplicialComplex) -> Configuration {
    incidence_matrix(complex).without_zero_column()
}

/// Faces contained in `vertices`, reindexed to `0..|vertices|` preserving order.
pub fn induced_subcomplex(complex: &SimplicialComplex, vertices: VertexSet) -> SimplicialComplex {
    let vs: Vec<usize> = members(vertices).collect();
    let reindex = |f: VertexSet| -> VertexSet {
        vs.iter()
            .enumerate()
            .filter(|(_, &v)| f >> v & 1 == 1)
            .fold(0, |acc, (k, _)| acc | 1 << k)
    };
    let mut faces: Vec<VertexSet> = complex
        .faces
        .iter()
        .filter(|&&f| f & !vertices == 0)
        .map(|&f| reindex(f))
        .collect();
    faces.sort_unstable();
    SimplicialComplex { d: vs.len(), faces }
}

/// Every simplicial complex on `0..d` (all singletons present), labelled.
///
/// Counts grow very fast; intended for `d <= 5`.
pub fn all_complexes(d: usize) -> Vec<SimplicialComplex> {
    let mut candidates: Vec<VertexSet> = (0..=full_set(d)).filter(|s| s.count_ones() >= 2).collect();
    candidates.sort_by_key(|s| (s.count_ones(), *s));
    let mut base: Vec<VertexSet> = vec![0];
    base.extend((0..d).map(|i| 1u64 << i));
    let mut out = Vec::new();
    fn go(
        k: usize,
        candidates: &[VertexSet],
        chosen: &mut Vec<VertexSet>,
        d: usize,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if k == candidates.len() {
            let mut faces = chosen.clone();
            faces.sort_unstable();
            out.push(SimplicialComplex { d, faces });
            return;
        }
        let s = candidates[k];
        go(k + 1, candidates, chosen, d, out);
        let boundary_present = members(s).all(|u| {
            let t = s & !(1 << u);
            t.count_ones() < 2 || chosen.contains(&t)
        });
        if boundary_present {
            chosen.push(s);
            go(k + 1, candidates, chosen, d, out);
            chosen.pop();
        }
    }
    go(0, &candidates, &mut base, d, &mut out);
    out
}
