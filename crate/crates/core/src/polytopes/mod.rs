//! Exact lattice polytopes: hulls, lattice points, the Fano family of
//! predicates, duality, volumes and the merged polytopes of simplicial complexes.

mod hull;
pub mod obstruction;
pub mod triangulate;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complexes::{indicator, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactmath::{determinant, lattice_span_is_full, rat_to_string, Int, IntMat, IntVec, Rat};

pub use hull::affine_rank;
pub use obstruction::{
    find_obstruction, verify_obstruction_facet, LocatedObstruction, Obstruction, ObstructionCheck,
};
pub use triangulate::{normalized_volume, placing_triangulation, simplex_volume, Triangulation};

/// The inequality `normal · x <= rhs`, with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVec,
    pub rhs: Rat,
}

impl Facet {
    pub fn value(&self, x: &IntVec) -> Int {
        self.normal.dot(x)
    }

    pub fn is_tight(&self, x: &IntVec) -> bool {
        Rat::from_integer(self.value(x)) == self.rhs
    }

    pub fn contains(&self, x: &IntVec) -> bool {
        Rat::from_integer(self.value(x)) <= self.rhs
    }

    pub fn strictly_contains(&self, x: &IntVec) -> bool {
        Rat::from_integer(self.value(x)) < self.rhs
    }

    /// `normal / rhs`, the facet equation rescaled to right-hand side 1.
    pub fn scaled_to_one(&self) -> Result<Vec<Rat>> {
        if self.rhs.is_zero() {
            return Err(Error::OriginOnFacet);
        }
        Ok(self
            .normal
            .iter()
            .map(|a| Rat::from_integer(a.clone()) / &self.rhs)
            .collect())
    }

    /// True iff `normal / rhs` is an integer vector.
    pub fn integral_at_one(&self) -> bool {
        // the normal is primitive, so this holds iff rhs = ±1/k
        !self.rhs.is_zero() && self.rhs.numer().abs().is_one()
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · x <= {}", self.normal, rat_to_string(&self.rhs))
    }
}

/// An H-representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    pub d: usize,
    pub facets: Vec<Facet>,
}

impl HPolytope {
    pub fn contains(&self, x: &IntVec) -> bool {
        self.facets.iter().all(|f| f.contains(x))
    }

    pub fn is_interior(&self, x: &IntVec) -> bool {
        self.facets.iter().all(|f| f.strictly_contains(x))
    }

    /// Integer points in the box `lo..=hi` satisfying every inequality.
    ///
    /// Coordinates are fixed one at a time; a partial point is abandoned as soon
    /// as some inequality cannot be met by any completion inside the box.
    pub fn lattice_points_in_box(&self, lo: &[i64], hi: &[i64]) -> Vec<IntVec> {
        let normals: Vec<Vec<i64>> = self
            .facets
            .iter()
            .map(|f| f.normal.to_i64().expect("facet normals fit in i64"))
            .collect();
        // tail_min[f][k]: least possible value of the facet over coordinates k..d
        let tail_min: Vec<Vec<i64>> = normals
            .iter()
            .map(|a| {
                let mut t = vec![0i64; self.d + 1];
                for k in (0..self.d).rev() {
                    t[k] = t[k + 1] + (a[k] * lo[k]).min(a[k] * hi[k]);
                }
                t
            })
            .collect();
        let rhs: Vec<&Rat> = self.facets.iter().map(|f| &f.rhs).collect();
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.d];
        let mut partial = vec![0i64; normals.len()];
        scan(0, self.d, lo, hi, &normals, &tail_min, &rhs, &mut cur, &mut partial, &mut out);
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn scan(
    k: usize,
    d: usize,
    lo: &[i64],
    hi: &[i64],
    normals: &[Vec<i64>],
    tail_min: &[Vec<i64>],
    rhs: &[&Rat],
    cur: &mut Vec<i64>,
    partial: &mut Vec<i64>,
    out: &mut Vec<IntVec>,
) {
    if k == d {
        out.push(IntVec::from_i64(cur));
        return;
    }
    for x in lo[k]..=hi[k] {
        let ok = normals.iter().enumerate().all(|(f, a)| {
            let v = partial[f] + a[k] * x + tail_min[f][k + 1];
            Rat::from_integer(Int::from(v)) <= *rhs[f]
        });
        if !ok {
            continue;
        }
        cur[k] = x;
        for (f, a) in normals.iter().enumerate() {
            partial[f] += a[k] * x;
        }
        scan(k + 1, d, lo, hi, normals, tail_min, rhs, cur, partial, out);
        for (f, a) in normals.iter().enumerate() {
            partial[f] -= a[k] * x;
        }
    }
}

/// A full-dimensional lattice polytope given by generating points, with its
/// vertices and facets computed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    pub d: usize,
    /// Distinct generating points, in input order.
    pub points: Vec<IntVec>,
    /// Extreme points, a sublist of `points` in the same order.
    pub vertices: Vec<IntVec>,
    hrep: HPolytope,
}

impl VPolytope {
    /// Hull of the points; duplicates are dropped, flat input is an error.
    pub fn new(d: usize, points: Vec<IntVec>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut distinct = Vec::new();
        for p in points {
            if p.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.len(),
                });
            }
            if seen.insert(p.clone()) {
                distinct.push(p);
            }
        }
        let facets = hull::facets_of(d, &distinct)?;
        let vertices = hull::vertices_of(d, &distinct, &facets);
        Ok(VPolytope {
            d,
            points: distinct,
            vertices,
            hrep: HPolytope { d, facets },
        })
    }

    pub fn facets(&self) -> &[Facet] {
        &self.hrep.facets
    }

    pub fn hrep(&self) -> &HPolytope {
        &self.hrep
    }

    /// Facets containing every point of `set`.
    pub fn facets_containing<'a>(&'a self, set: &'a [IntVec]) -> impl Iterator<Item = &'a Facet> + 'a {
        self.facets()
            .iter()
            .filter(move |f| set.iter().all(|p| f.is_tight(p)))
    }

    pub fn vertices_on(&self, facet: &Facet) -> Vec<IntVec> {
        self.vertices.iter().filter(|v| facet.is_tight(v)).cloned().collect()
    }

    /// Componentwise vertex bounds.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let coords: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| v.to_i64().expect("vertex coordinates fit in i64"))
            .collect();
        let lo = (0..self.d).map(|k| coords.iter().map(|c| c[k]).min().unwrap()).collect();
        let hi = (0..self.d).map(|k| coords.iter().map(|c| c[k]).max().unwrap()).collect();
        (lo, hi)
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            d: self.d,
            points: self.points.iter().map(|p| p.to_i64().expect("fits in i64")).collect(),
        }
    }

    pub fn parse_json(text: &str) -> Result<VPolytope> {
        let j: PolytopeJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("polytope JSON: {e}")))?;
        VPolytope::new(j.d, j.points.iter().map(|p| IntVec::from_i64(p)).collect())
    }
}

/// Polytope file format: `{"d": 2, "points": [[1, 0], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub d: usize,
    pub points: Vec<Vec<i64>>,
}

/// Facets and vertices of `conv(points)`.
pub fn hull(points: &[IntVec]) -> Result<(HPolytope, Vec<IntVec>)> {
    let d = points
        .first()
        .map(IntVec::len)
        .ok_or_else(|| Error::InvalidInput("hull of an empty point set".into()))?;
    let p = VPolytope::new(d, points.to_vec())?;
    Ok((p.hrep.clone(), p.vertices))
}

/// All lattice points of the polytope.
pub fn lattice_points(p: &VPolytope) -> Vec<IntVec> {
    let (lo, hi) = p.bounding_box();
    p.hrep.lattice_points_in_box(&lo, &hi)
}

/// True iff the origin is interior and is the only interior lattice point.
pub fn is_fano(p: &VPolytope) -> bool {
    let origin = IntVec::zeros(p.d);
    if !p.hrep.is_interior(&origin) {
        return false;
    }
    lattice_points(p)
        .iter()
        .all(|x| x.is_zero() || !p.hrep.is_interior(x))
}

/// One facet line of the reflexivity report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetReport {
    pub normal: Vec<i64>,
    /// Right-hand side as `p/q`.
    pub rhs: String,
    pub integral_at_one: bool,
    /// `normal / rhs` as `p/q` strings.
    pub scaled_normal: Vec<String>,
}

impl FacetReport {
    pub fn of(f: &Facet) -> Result<FacetReport> {
        Ok(FacetReport {
            normal: f.normal.to_i64().expect("fits in i64"),
            rhs: rat_to_string(&f.rhs),
            integral_at_one: f.integral_at_one(),
            scaled_normal: f.scaled_to_one()?.iter().map(rat_to_string).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub facets: Vec<FacetReport>,
}

/// Fano polytopes whose facets all read `a · x = 1` with `a` integral.
pub fn is_gorenstein_fano(p: &VPolytope) -> Result<GorensteinReport> {
    if !is_fano(p) {
        return Err(Error::NotFano);
    }
    let facets = p.facets().iter().map(FacetReport::of).collect::<Result<Vec<_>>>()?;
    Ok(GorensteinReport {
        gorenstein: facets.iter().all(|f| f.integral_at_one),
        facets,
    })
}

/// Every boundary lattice point is a vertex.
pub fn is_terminal(p: &VPolytope) -> Result<bool> {
    if !is_fano(p) {
        return Err(Error::NotFano);
    }
    let vertices: BTreeSet<&IntVec> = p.vertices.iter().collect();
    Ok(lattice_points(p)
        .iter()
        .filter(|x| !x.is_zero())
        .all(|x| vertices.contains(x)))
}

/// Simplicial, and the vertices of each facet form a basis of `Z^d`.
pub fn is_smooth(p: &VPolytope) -> Result<bool> {
    if !is_fano(p) {
        return Err(Error::NotFano);
    }
    for f in p.facets() {
        let vs = p.vertices_on(f);
        if vs.len() != p.d || !determinant(&IntMat::from_columns(p.d, &vs)).abs().is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `max normal · v - min normal · v` over the vertices.
pub fn facet_width(p: &VPolytope, facet: &Facet) -> Int {
    let values: Vec<Int> = p.vertices.iter().map(|v| facet.value(v)).collect();
    values.iter().max().unwrap() - values.iter().min().unwrap()
}

pub fn all_facet_widths_one(p: &VPolytope) -> bool {
    p.facets().iter().all(|f| facet_width(p, f).is_one())
}

/// A polytope with rational vertices, as produced by duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    pub d: usize,
    /// Sorted vertices.
    pub vertices: Vec<Vec<Rat>>,
    pub facets: Vec<Facet>,
}

impl RationalPolytope {
    /// Hull of rational points, computed on the integer multiple that clears denominators.
    pub fn from_points(d: usize, points: &[Vec<Rat>]) -> Result<RationalPolytope> {
        let scale = hull::denominator_lcm(points.iter().flatten());
        let scaled: Vec<IntVec> = points
            .iter()
            .map(|p| IntVec::new(p.iter().map(|x| (x * &scale).to_integer()).collect()))
            .collect();
        let q = VPolytope::new(d, scaled)?;
        let scale_r = Rat::from_integer(scale);
        let mut vertices: Vec<Vec<Rat>> = q
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| Rat::from_integer(x.clone()) / &scale_r).collect())
            .collect();
        vertices.sort();
        let facets = q
            .facets()
            .iter()
            .map(|f| Facet {
                normal: f.normal.clone(),
                rhs: &f.rhs / &scale_r,
            })
            .collect();
        Ok(RationalPolytope { d, vertices, facets })
    }

    /// `{y : x · y <= 1 for all x}`; its vertices are the facets scaled to one.
    pub fn dual(&self) -> Result<RationalPolytope> {
        if !self.facets.iter().all(|f| f.rhs.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let points: Vec<Vec<Rat>> = self
            .facets
            .iter()
            .map(Facet::scaled_to_one)
            .collect::<Result<_>>()?;
        RationalPolytope::from_points(self.d, &points)
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().flatten().all(|x| x.is_integer())
    }
}

impl From<&VPolytope> for RationalPolytope {
    fn from(p: &VPolytope) -> Self {
        let mut vertices: Vec<Vec<Rat>> = p
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        vertices.sort();
        RationalPolytope {
            d: p.d,
            vertices,
            facets: p.facets().to_vec(),
        }
    }
}

pub fn dual_polytope(p: &VPolytope) -> Result<RationalPolytope> {
    RationalPolytope::from(p).dual()
}

/// Lattice facts about one facet not through the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetLatticeReport {
    /// The lattice points on the facet span `Z^d`.
    pub z_span_full: bool,
    /// The facet equation rescaled to right-hand side 1 is integral.
    pub rhs_one_integral: bool,
}

pub fn facet_lattice_report(p: &VPolytope, facet: &Facet) -> Result<FacetLatticeReport> {
    if facet.rhs.is_zero() {
        return Err(Error::OriginOnFacet);
    }
    let on: Vec<IntVec> = lattice_points(p).into_iter().filter(|x| facet.is_tight(x)).collect();
    Ok(FacetLatticeReport {
        z_span_full: lattice_span_is_full(&on, p.d),
        rhs_one_integral: facet.integral_at_one(),
    })
}

/// Points `ρ(F)` for `F ∈ Δ` and `-ρ(F')` for `F' ∈ Δ'`, the origin once.
pub fn merge_points(delta: &SimplicialComplex, delta_prime: &SimplicialComplex) -> Result<Vec<IntVec>> {
    let d = delta.vertex_count();
    if delta_prime.vertex_count() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: delta_prime.vertex_count(),
        });
    }
    let mut points: Vec<IntVec> = delta.faces().iter().map(|&f| indicator(d, f)).collect();
    points.extend(
        delta_prime
            .faces()
            .iter()
            .filter(|&&f| f != 0)
            .map(|&f| indicator(d, f).neg()),
    );
    Ok(points)
}

/// `conv(P_Δ ∪ -P_Δ')`.
pub fn merge_polytope(delta: &SimplicialComplex, delta_prime: &SimplicialComplex) -> Result<VPolytope> {
    VPolytope::new(delta.vertex_count(), merge_points(delta, delta_prime)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::stable_set_complex;
    use crate::graphs::Graph;

    fn poly(v: &[&[i64]]) -> VPolytope {
        VPolytope::new(v[0].len(), v.iter().map(|p| IntVec::from_i64(p)).collect()).unwrap()
    }

    fn cross2() -> VPolytope {
        poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])
    }

    fn hexagon() -> VPolytope {
        poly(&[&[1, 0], &[0, 1], &[1, 1], &[-1, 0], &[0, -1], &[-1, -1]])
    }

    fn square() -> VPolytope {
        poly(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])
    }

    fn facet_set(p: &VPolytope) -> Vec<(Vec<i64>, String)> {
        p.facets()
            .iter()
            .map(|f| (f.normal.to_i64().unwrap(), rat_to_string(&f.rhs)))
            .collect()
    }

    #[test]
    fn hull_examples() {
        let c = cross2();
        assert_eq!(c.vertices.len(), 4);
        let mut f = facet_set(&c);
        f.sort();
        let one = "1/1".to_string();
        assert_eq!(
            f,
            vec![
                (vec![-1, -1], one.clone()),
                (vec![-1, 1], one.clone()),
                (vec![1, -1], one.clone()),
                (vec![1, 1], one.clone())
            ]
        );
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(unit.facets().len(), 4);
        let h = hexagon();
        assert_eq!(h.facets().len(), 6);
        // each hexagon facet is tight on exactly two vertices
        for f in h.facets() {
            assert_eq!(h.vertices_on(f).len(), 2);
            assert_eq!(f.rhs, Rat::one());
        }
        let normals: BTreeSet<Vec<i64>> = h.facets().iter().map(|f| f.normal.to_i64().unwrap()).collect();
        for n in [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]] {
            assert!(normals.contains(&n.to_vec()));
        }
    }

    #[test]
    fn lattice_point_examples() {
        let seg = poly(&[&[-1], &[1]]);
        assert_eq!(lattice_points(&seg).len(), 3);
        assert_eq!(lattice_points(&cross2()).len(), 5);
        assert_eq!(lattice_points(&hexagon()).len(), 7);
    }

    #[test]
    fn fano_family() {
        assert!(is_fano(&poly(&[&[-1], &[1]])));
        assert!(!is_fano(&poly(&[&[-2], &[1]])));
        assert!(is_fano(&hexagon()));
        assert!(is_gorenstein_fano(&cross2()).unwrap().gorenstein);
        assert!(is_gorenstein_fano(&hexagon()).unwrap().gorenstein);
        assert_eq!(is_gorenstein_fano(&poly(&[&[-2], &[1]])), Err(Error::NotFano));
        assert!(is_terminal(&hexagon()).unwrap());
        assert!(!is_terminal(&square()).unwrap());
        assert!(is_terminal(&cross2()).unwrap());
        assert!(is_smooth(&cross2()).unwrap());
        assert!(is_smooth(&hexagon()).unwrap());
        let mut cube = Vec::new();
        for m in 0..8i64 {
            cube.push(IntVec::from_i64(&[2 * (m & 1) - 1, 2 * (m >> 1 & 1) - 1, 2 * (m >> 2 & 1) - 1]));
        }
        assert!(!is_smooth(&VPolytope::new(3, cube).unwrap()).unwrap());
    }

    #[test]
    fn segment_reflexivity() {
        let seg = poly(&[&[-2], &[2]]);
        assert!(!is_fano(&seg));
        let f = seg.facets().iter().find(|f| f.normal[0] == Int::from(1)).unwrap();
        let r = facet_lattice_report(&seg, f).unwrap();
        // the only lattice point on the facet is 2, which spans 2Z
        assert_eq!(
            r,
            FacetLatticeReport {
                z_span_full: false,
                rhs_one_integral: false
            }
        );
    }

    #[test]
    fn facet_reports() {
        let c = cross2();
        let f = c.facets().iter().find(|f| f.normal == IntVec::from_i64(&[1, 1])).unwrap();
        assert_eq!(
            facet_lattice_report(&c, f).unwrap(),
            FacetLatticeReport {
                z_span_full: true,
                rhs_one_integral: true
            }
        );
        let h = hexagon();
        let f = h.facets().iter().find(|f| f.normal == IntVec::from_i64(&[1, 0])).unwrap();
        assert!(facet_lattice_report(&h, f).unwrap().z_span_full);
    }

    #[test]
    fn widths() {
        let mut cube = Vec::new();
        for m in 0..8i64 {
            cube.push(IntVec::from_i64(&[m & 1, m >> 1 & 1, m >> 2 & 1]));
        }
        let cube = VPolytope::new(3, cube).unwrap();
        assert!(all_facet_widths_one(&cube));
        let seg = poly(&[&[-2], &[2]]);
        assert_eq!(facet_width(&seg, &seg.facets()[0]), Int::from(4));
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        let f = tri.facets().iter().find(|f| f.normal == IntVec::from_i64(&[1, 1])).unwrap();
        assert_eq!(facet_width(&tri, f), Int::from(2));
    }

    #[test]
    fn duality() {
        let d = dual_polytope(&cross2()).unwrap();
        assert!(d.is_integral());
        assert_eq!(d, RationalPolytope::from(&square()));
        assert_eq!(dual_polytope(&square()).unwrap(), RationalPolytope::from(&cross2()));
        let hd = dual_polytope(&hexagon()).unwrap();
        let expected = poly(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        assert_eq!(hd, RationalPolytope::from(&expected));
        assert_eq!(hd.dual().unwrap(), RationalPolytope::from(&hexagon()));
        let off = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(dual_polytope(&off), Err(Error::OriginNotInterior));
    }

    #[test]
    fn merged_polytope_vertex_counts() {
        let k2 = stable_set_complex(&Graph::complete(2));
        assert_eq!(merge_polytope(&k2, &k2).unwrap().vertices.len(), 4);
        let full = stable_set_complex(&Graph::empty(2));
        let hex = merge_polytope(&full, &full).unwrap();
        assert_eq!(hex.vertices.len(), 6);
        assert_eq!(RationalPolytope::from(&hex), RationalPolytope::from(&hexagon()));
        let k3 = stable_set_complex(&Graph::complete(3));
        assert_eq!(merge_polytope(&k3, &k3).unwrap().vertices.len(), 6);
        for d in 2..=4 {
            let e = stable_set_complex(&Graph::empty(d));
            assert_eq!(merge_polytope(&e, &e).unwrap().vertices.len(), (1 << (d + 1)) - 2);
        }
    }
}
