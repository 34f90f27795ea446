//! Finite simple graphs on at most 64 vertices, stable sets, and perfection.
//!
//! Vertices are 0-based in the API (`0..d`); the text and JSON formats and all
//! `Display` output are 1-based. Vertex sets are `u64` bitmasks.

pub mod census;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use census::{canonical_form, count_perfect, count_perfect_pairs, perfect_graphs, CanonicalForm};

/// Bitmask of vertices; bit `i` is vertex `i`.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

pub(crate) fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut s = set;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_set(d: usize) -> VertexSet {
    if d == 64 {
        u64::MAX
    } else {
        (1u64 << d) - 1
    }
}

/// A finite simple graph on the vertex set `0..d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(d: usize) -> Self {
        assert!(d <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { d, adj: vec![0; d] }
    }

    /// Builds a graph from 0-based edges, rejecting loops, duplicates and out-of-range vertices.
    pub fn new(d: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if d > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: d,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(d);
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= d {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, d });
                }
            }
            if i == j {
                return Err(Error::InvalidInput(format!("loop at vertex {}", i + 1)));
            }
            if g.has_edge(i, j) {
                return Err(Error::InvalidInput(format!("repeated edge {} {}", i + 1, j + 1)));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn complete(d: usize) -> Self {
        let mut g = Graph::empty(d);
        for i in 0..d {
            g.adj[i] = full_set(d) & !(1 << i);
        }
        g
    }

    /// The cycle `0-1-...-(d-1)-0`; needs `d >= 3`.
    pub fn cycle(d: usize) -> Self {
        assert!(d >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::empty(d);
        for i in 0..d {
            g.add_edge(i, (i + 1) % d);
        }
        g
    }

    pub fn path(d: usize) -> Self {
        let mut g = Graph::empty(d);
        for i in 1..d {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn order(&self) -> usize {
        self.d
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adj[i]
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.d {
            for j in members(self.adj[i] >> (i + 1) << (i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let full = full_set(self.d);
        Graph {
            d: self.d,
            adj: (0..self.d).map(|i| !self.adj[i] & full & !(1 << i)).collect(),
        }
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in increasing order.
    pub fn induced(&self, vertices: VertexSet) -> Graph {
        let vs: Vec<usize> = members(vertices).collect();
        let mut g = Graph::empty(vs.len());
        for (a, &i) in vs.iter().enumerate() {
            for (b, &j) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.d);
        for (i, j) in self.edges() {
            g.add_edge(perm[i], perm[j]);
        }
        g
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        members(set).all(|i| self.adj[i] & set == 0)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|i| (self.adj[i] | 1 << i) & set == set)
    }

    /// Parses `d` followed by one `i j` line per edge (1-based), or the JSON form.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            let json: GraphJson =
                serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            return json.try_into();
        }
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let d: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::Parse("vertex count must be an integer".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad vertex `{t}`"))))
                .collect::<Result<_>>()?;
            let [i, j] = nums[..] else {
                return Err(Error::Parse(format!("edge line must be `i j`, got `{line}`")));
            };
            edges.push(one_based_pair(i, j, d)?);
        }
        Graph::new(d, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.d);
        for (i, j) in self.edges() {
            out.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            d: self.d,
            edges: self.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

fn one_based_pair(i: usize, j: usize, d: usize) -> Result<(usize, usize)> {
    for v in [i, j] {
        if v == 0 || v > d {
            return Err(Error::VertexOutOfRange { vertex: v, d });
        }
    }
    Ok((i - 1, j - 1))
}

/// JSON form of a graph, 1-based.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub d: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(json: GraphJson) -> Result<Graph> {
        let edges = json
            .edges
            .iter()
            .map(|&[i, j]| one_based_pair(i, j, json.d))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(json.d, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(d={}, {self})", self.d)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
            .collect();
        write!(f, "{{{}}}", edges.join(","))
    }
}

/// All stable sets, including the empty set and the singletons, in increasing mask order.
pub fn stable_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    // grow stable sets vertex by vertex, only adding larger non-neighbours
    fn grow(g: &Graph, current: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current);
        for v in members(allowed) {
            let higher = allowed & !((1u64 << v) | ((1u64 << v) - 1));
            grow(g, current | 1 << v, higher & !g.adj[v], out);
        }
    }
    grow(g, 0, full_set(g.d), &mut out);
    out.sort_unstable();
    out
}

pub fn clique_number(g: &Graph) -> usize {
    max_stable_size(&g.complement())
}

fn max_stable_size(g: &Graph) -> usize {
    fn go(g: &Graph, allowed: VertexSet, size: usize, best: &mut usize) {
        if allowed == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + allowed.count_ones() as usize <= *best {
            return;
        }
        let v = allowed.trailing_zeros() as usize;
        go(g, allowed & !(1 << v) & !g.adj[v], size + 1, best);
        go(g, allowed & !(1 << v), size, best);
    }
    let mut best = 0;
    go(g, full_set(g.d), 0, &mut best);
    best
}

/// Smallest number of stable sets covering all vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.d == 0 {
        return 0;
    }
    let lower = clique_number(g);
    (lower..=g.d)
        .find(|&k| colorable(g, k))
        .expect("d colours always suffice")
}

fn colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, v: usize, k: usize, classes: &mut Vec<VertexSet>) -> bool {
        if v == g.d {
            return true;
        }
        let used = classes.len();
        for c in 0..used {
            if g.adj[v] & classes[c] == 0 {
                classes[c] |= 1 << v;
                if go(g, v + 1, k, classes) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        // opening a fresh class; all fresh classes are interchangeable
        if used < k {
            classes.push(1 << v);
            if go(g, v + 1, k, classes) {
                return true;
            }
            classes.pop();
        }
        false
    }
    go(g, 0, k, &mut Vec::with_capacity(k))
}

/// An induced odd cycle of length at least 5, in cycle order, if one exists.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut size = 5;
    while size <= g.d {
        if let Some(c) = subsets_of_size(g.d, size).find_map(|s| induced_cycle(g, s)) {
            return Some(c);
        }
        size += 2;
    }
    None
}

/// An odd antihole, returned as the vertex order of the hole in the complement.
pub fn find_odd_antihole(g: &Graph) -> Option<Vec<usize>> {
    find_odd_hole(&g.complement())
}

fn subsets_of_size(d: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    // Gosper's hack over d-bit words
    let limit = if d == 64 { None } else { Some(1u64 << d) };
    let mut next = if k == 0 || k > d { None } else { Some(full_set(k)) };
    std::iter::from_fn(move || {
        let cur = next?;
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        next = if r == 0 {
            None
        } else {
            let n = (((r ^ cur) >> 2) / c) | r;
            match limit {
                Some(l) if n >= l => None,
                _ => Some(n),
            }
        };
        Some(cur)
    })
}

/// If the subgraph induced on `set` is a single cycle, returns it in order.
fn induced_cycle(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    if members(set).any(|v| (g.adj[v] & set).count_ones() != 2) {
        return None;
    }
    let start = set.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.adj[start] & set).trailing_zeros() as usize;
    while cur != start {
        order.push(cur);
        let next_set = g.adj[cur] & set & !(1 << prev);
        prev = cur;
        cur = next_set.trailing_zeros() as usize;
    }
    (order.len() == set.count_ones() as usize).then_some(order)
}

/// Perfection via forbidden odd holes in the graph and its complement.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_hole(g).is_none() && find_odd_antihole(g).is_none()
}

/// Perfection straight from the definition: every induced subgraph has
/// chromatic number equal to clique number. Exponential; for cross-checks.
pub fn is_perfect_by_coloring(g: &Graph) -> bool {
    (1..=full_set(g.d)).all(|s| {
        let h = g.induced(s);
        chromatic_number(&h) == clique_number(&h)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(d: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(d, &edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect::<Vec<_>>()).unwrap()
    }

    fn graph_from_mask(d: usize, mask: u32) -> Graph {
        let mut gr = Graph::empty(d);
        let mut bit = 0;
        for i in 0..d {
            for j in i + 1..d {
                if mask >> bit & 1 == 1 {
                    gr.add_edge(i, j);
                }
                bit += 1;
            }
        }
        gr
    }

    #[test]
    fn stable_set_examples() {
        assert_eq!(stable_sets(&Graph::complete(3)), vec![0, 1, 2, 4]);
        assert_eq!(stable_sets(&Graph::empty(2)).len(), 4);
        let c5 = stable_sets(&Graph::cycle(5));
        assert_eq!(c5.len(), 11);
        assert_eq!(c5.iter().filter(|s| s.count_ones() == 2).count(), 5);
    }

    #[test]
    fn stable_sets_match_brute_force() {
        for mask in 0..1u32 << 10 {
            let gr = graph_from_mask(5, mask);
            let brute: Vec<u64> = (0..32u64).filter(|&s| gr.is_stable(s)).collect();
            assert_eq!(stable_sets(&gr), brute);
        }
    }

    #[test]
    fn clique_and_chromatic_examples() {
        assert_eq!(clique_number(&Graph::complete(4)), 4);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::complete(4)), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(chromatic_number(&Graph::cycle(4)), 2);
    }

    #[test]
    fn odd_hole_examples() {
        assert_eq!(find_odd_hole(&Graph::cycle(5)), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_odd_hole(&Graph::cycle(6)), None);
        assert_eq!(find_odd_hole(&g(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 4)])), None);
        // C6 plus chord 1-5 cuts off the induced 5-cycle 1-2-3-4-5
        let chorded = g(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 5)]);
        let hole = find_odd_hole(&chorded).unwrap();
        let mut sorted = hole.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn perfection_examples() {
        assert!(!is_perfect(&Graph::cycle(5)));
        for d in 1..=7 {
            assert!(is_perfect(&Graph::complete(d)));
        }
        let anti_c7 = Graph::cycle(7).complement();
        assert!(find_odd_hole(&anti_c7).is_none());
        assert!(find_odd_antihole(&anti_c7).is_some());
        assert!(!is_perfect(&anti_c7));
        assert!(is_perfect(&Graph::path(6)));
    }

    #[test]
    fn complement_and_induced() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.induced(0b00111), Graph::path(3));
        assert_eq!(c5.complement().edge_count(), 5);
    }

    #[test]
    fn formats() {
        let c5 = Graph::cycle(5);
        assert_eq!(Graph::parse(&c5.to_text()).unwrap(), c5);
        let json = serde_json::to_string(&c5.to_json()).unwrap();
        assert_eq!(Graph::parse(&json).unwrap(), c5);
        assert!(Graph::parse("3\n1 1\n").is_err());
        assert!(Graph::parse("3\n1 4\n").is_err());
        assert!(Graph::parse("3\n1 2\n2 1\n").is_err());
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn holes_agree_with_coloring_up_to_six_vertices() {
        for d in 1..=6usize {
            let pairs = d * (d - 1) / 2;
            for mask in 0..1u32 << pairs {
                let gr = graph_from_mask(d, mask);
                let by_holes = is_perfect(&gr);
                assert_eq!(by_holes, is_perfect_by_coloring(&gr), "{gr}");
                assert_eq!(by_holes, is_perfect(&gr.complement()), "{gr}");
            }
        }
    }

    proptest! {
        #[test]
        fn stable_sets_form_a_complex(mask in 0u32..1 << 15) {
            let gr = graph_from_mask(6, mask);
            let sets = stable_sets(&gr);
            for i in 0..6 {
                prop_assert!(sets.contains(&(1 << i)));
            }
            for &s in &sets {
                for v in members(s) {
                    prop_assert!(sets.binary_search(&(s & !(1 << v))).is_ok());
                }
            }
        }
    }
}
