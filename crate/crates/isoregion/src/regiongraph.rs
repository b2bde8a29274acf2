//! Region-connect graphs and isolated-region counting.
//!
//! The region-connect graph has one vertex per region and an edge between
//! regions that share a crossing (or an edge, which only matters for the
//! zero-crossing circle). Its complement is the region-disconnect graph;
//! isolated-region sets of the projection are exactly the independent sets
//! of the region-connect graph, equivalently the cliques of its complement.
//!
//! [`RegionGraph::igen_polynomial`] counts isolated sets by size. The
//! maximum degree of that polynomial is the isolate-region number `I(L)`,
//! which [`RegionGraph::isolate_number`] also computes directly by exact
//! branch and bound.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pdcode::LinkProjection;

/// Hard cap on graph size; census- and family-scale graphs stay far below.
pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph on region ids `0..n`, adjacency as bitset rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionGraph {
    n: usize,
    adj: Vec<u64>,
}

impl RegionGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge(n));
        }
        Ok(RegionGraph { n, adj: vec![0; n] })
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidRegion(u));
            }
            if v >= n {
                return Err(Error::InvalidRegion(v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Region-connect graph of a valid projection: `u ~ v` iff the regions
    /// share a crossing. The circle yields two regions joined by an edge.
    pub fn from_projection(l: &LinkProjection) -> Result<Self> {
        if l.is_trivial_circle() {
            return Self::with_edges(2, &[(0, 1)]);
        }
        let rs = l.regions()?;
        let mut g = Self::new(rs.len())?;
        // regions around one crossing form a clique
        for v in 0..l.crossing_count() {
            let mut around: Vec<usize> = (0..4)
                .map(|s| rs.region_of(crate::pdcode::Dart::new(v, s)))
                .collect();
            around.sort_unstable();
            around.dedup();
            for i in 0..around.len() {
                for j in i + 1..around.len() {
                    g.add_edge(around[i], around[j]);
                }
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n);
        if u == v {
            return;
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn neighbors_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Edges as a sorted list of `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] & (1 << v) != 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// The region-disconnect graph.
    pub fn complement(&self) -> Self {
        let full = full_mask(self.n);
        let adj = (0..self.n)
            .map(|u| (full & !self.adj[u]) & !(1 << u))
            .collect();
        RegionGraph { n: self.n, adj }
    }

    fn full(&self) -> u64 {
        full_mask(self.n)
    }

    /// Maximum independent-set size, by branch and bound with a greedy
    /// clique-cover bound. Equals the maximum clique of the complement.
    pub fn isolate_number(&self) -> u64 {
        self.max_independent_in(self.full())
    }

    /// Exact MIS restricted to the vertices in `mask`.
    pub(crate) fn max_independent_in(&self, mask: u64) -> u64 {
        let mut best = 0u32;
        self.mis(mask, 0, &mut best);
        best as u64
    }

    fn mis(&self, cand: u64, current: u32, best: &mut u32) {
        if cand == 0 {
            *best = (*best).max(current);
            return;
        }
        if current + self.clique_cover_bound(cand) <= *best {
            return;
        }
        // branch on a maximum-degree candidate, inclusion first
        let v = self.max_degree_vertex(cand);
        self.mis(cand & !self.adj[v] & !(1u64 << v), current + 1, best);
        self.mis(cand & !(1u64 << v), current, best);
    }

    fn max_degree_vertex(&self, cand: u64) -> usize {
        let mut bestv = cand.trailing_zeros() as usize;
        let mut bestd = (self.adj[bestv] & cand).count_ones();
        let mut rest = cand & !(1u64 << bestv);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & cand).count_ones();
            if d > bestd {
                bestd = d;
                bestv = v;
            }
        }
        bestv
    }

    /// Greedily cover `cand` by cliques; the number of cliques bounds any
    /// independent set inside `cand`.
    fn clique_cover_bound(&self, cand: u64) -> u32 {
        let mut rest = cand;
        let mut classes = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut members = 1u64 << v;
            let mut scan = rest;
            while scan != 0 {
                let w = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if self.adj[w] & members == members {
                    members |= 1u64 << w;
                }
            }
            rest &= !members;
            classes += 1;
        }
        classes
    }

    /// Counting polynomial of the isolated-region sets: coefficient `k` is
    /// the number of independent sets of size `k`. Computed by the deletion
    /// recursion `P(G) = P(G - v) + x * P(G - N[v])` pivoting on a vertex
    /// of maximum degree.
    pub fn igen_polynomial(&self) -> IGenPolynomial {
        let coeffs = self.indep_poly(self.full());
        IGenPolynomial { coeffs }
    }

    fn indep_poly(&self, mask: u64) -> Vec<u64> {
        if mask == 0 {
            return vec![1];
        }
        let v = self.max_degree_vertex(mask);
        if self.adj[v] & mask == 0 {
            // edgeless remainder: binomial row
            return binomial_row(mask.count_ones() as usize);
        }
        let without_v = self.indep_poly(mask & !(1u64 << v));
        let without_nbhd = self.indep_poly(mask & !self.adj[v] & !(1u64 << v));
        let mut out = without_v;
        if out.len() < without_nbhd.len() + 1 {
            out.resize(without_nbhd.len() + 1, 0);
        }
        for (k, &a) in without_nbhd.iter().enumerate() {
            out[k + 1] += a;
        }
        out
    }

    /// All isolated sets, smallest-lexicographic first, optionally filtered
    /// to a single size. The empty set is isolated.
    pub fn list_isolated_sets(&self, size: Option<usize>) -> Vec<IsolatedSet> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.list_rec(0, self.full(), &mut current, size, &mut out);
        out
    }

    fn list_rec(
        &self,
        start: usize,
        allowed: u64,
        current: &mut Vec<usize>,
        size: Option<usize>,
        out: &mut Vec<IsolatedSet>,
    ) {
        match size {
            Some(k) if current.len() == k => {
                out.push(IsolatedSet { regions: current.clone() });
                return;
            }
            Some(_) => {}
            None => out.push(IsolatedSet { regions: current.clone() }),
        }
        for v in start..self.n {
            if allowed & (1u64 << v) == 0 {
                continue;
            }
            current.push(v);
            self.list_rec(v + 1, allowed & !self.adj[v], current, size, out);
            current.pop();
        }
    }
}

impl Serialize for RegionGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RegionGraph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for _ in 0..n {
        for k in (1..=n).rev() {
            row[k] += row[k - 1];
        }
    }
    row
}

/// Counting polynomial of isolated-region sets; `coeffs[k]` counts sets of
/// size `k`. For projections: `coeffs[0] = 1`, `coeffs[1] = c + 2`, every
/// coefficient up to the top degree is positive, and the top degree is the
/// isolate-region number.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IGenPolynomial {
    coeffs: Vec<u64>,
}

impl IGenPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IGenPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn maxdeg(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Total number of isolated sets: the polynomial evaluated at 1.
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for IGenPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &a) in self.coeffs.iter().enumerate() {
            if a == 0 && !(k == 0 && self.coeffs.len() == 1) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// A set of pairwise disconnected regions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IsolatedSet {
    pub regions: Vec<usize>,
}

/// Disjoint union of two region graphs with one vertex from each merged,
/// modelling a split sum that places one projection inside a region of the
/// other. Vertices of `a` keep their ids; the merged vertex is `ra`.
pub fn split_sum_graph(
    a: &RegionGraph,
    ra: usize,
    b: &RegionGraph,
    rb: usize,
) -> Result<RegionGraph> {
    if ra >= a.vertex_count() {
        return Err(Error::InvalidRegion(ra));
    }
    if rb >= b.vertex_count() {
        return Err(Error::InvalidRegion(rb));
    }
    let n = a.vertex_count() + b.vertex_count() - 1;
    let mut g = RegionGraph::new(n)?;
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    let map_b = |v: usize| {
        if v == rb {
            ra
        } else if v < rb {
            a.vertex_count() + v
        } else {
            a.vertex_count() + v - 1
        }
    };
    for (u, v) in b.edges() {
        g.add_edge(map_b(u), map_b(v));
    }
    Ok(g)
}

/// Maximum independent set among regions avoiding a crossing, maximized
/// over all crossings. Undefined for the zero-crossing circle.
pub fn independent_region_number(l: &LinkProjection) -> Result<u64> {
    if l.is_trivial_circle() {
        return Err(Error::TrivialProjection);
    }
    let rs = l.regions()?;
    let g = RegionGraph::from_projection(l)?;
    let mut best = 0;
    for v in 0..l.crossing_count() {
        let mut mask = 0u64;
        for (i, r) in rs.iter().enumerate() {
            if !r.touches_crossing(v) {
                mask |= 1u64 << i;
            }
        }
        best = best.max(g.max_independent_in(mask));
    }
    Ok(best)
}

/// Result of checking `(c^2 - 5c + 2)/2 <= a_2 <= (c^2 + 3c + 2)/2` for a
/// connected irreducible projection. Both bounds are always integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct A2Bounds {
    pub a2: u64,
    pub lower: i64,
    pub upper: i64,
    pub ok: bool,
}

pub fn a2_bounds_check(l: &LinkProjection) -> Result<A2Bounds> {
    let report = l.validate();
    if !report.connected {
        return Err(Error::NotConnected);
    }
    if !report.is_valid {
        return Err(Error::InvalidProjection(report.messages.join("; ")));
    }
    if l.is_trivial_circle() {
        return Err(Error::TrivialProjection);
    }
    if !report.reducible_crossings.is_empty() {
        return Err(Error::NotIrreducible);
    }
    let c = l.crossing_count() as i64;
    let a2 = RegionGraph::from_projection(l)?.igen_polynomial().coeff(2);
    let lower = (c * c - 5 * c + 2) / 2;
    let upper = (c * c + 3 * c + 2) / 2;
    let ok = lower <= a2 as i64 && (a2 as i64) <= upper;
    Ok(A2Bounds { a2, lower, upper, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const CURL_PD: &str = "X(1,1,2,2)";

    fn cycle(n: usize) -> RegionGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        RegionGraph::with_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> RegionGraph {
        let mut g = RegionGraph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Independent oracle: enumerate all vertex subsets.
    fn brute_force_igen(g: &RegionGraph) -> Vec<u64> {
        let n = g.vertex_count();
        let mut coeffs = vec![0u64; n + 1];
        'subset: for mask in 0u64..(1u64 << n) {
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if g.neighbors_mask(v) & mask != 0 {
                    continue 'subset;
                }
            }
            coeffs[mask.count_ones() as usize] += 1;
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        coeffs
    }

    #[test]
    fn circle_graph_is_a_single_edge() {
        let circle = LinkProjection::trivial_circle();
        let g = RegionGraph::from_projection(&circle).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.isolate_number(), 1);
        assert_eq!(g.igen_polynomial().coeffs(), &[1, 2]);
    }

    #[test]
    fn curl_graph_is_a_triangle() {
        let curl = LinkProjection::parse(CURL_PD).unwrap();
        let g = RegionGraph::from_projection(&curl).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.igen_polynomial().coeffs(), &[1, 3]);
    }

    #[test]
    fn trefoil_graph_is_complete() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        let g = RegionGraph::from_projection(&t).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.isolate_number(), 1);
        assert_eq!(g.igen_polynomial().coeffs(), &[1, 5]);
        assert!(g.list_isolated_sets(Some(2)).is_empty());
    }

    #[test]
    fn complement_involution_and_complete() {
        let k3 = complete(3);
        let empty = k3.complement();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(empty.complement(), k3);
        let c7 = cycle(7);
        assert_eq!(c7.complement().complement(), c7);
    }

    #[test]
    fn isolate_numbers_of_small_graphs() {
        assert_eq!(complete(6).isolate_number(), 1);
        assert_eq!(cycle(5).isolate_number(), 2);
        assert_eq!(cycle(7).isolate_number(), 3);
        assert_eq!(RegionGraph::new(0).unwrap().isolate_number(), 0);
        assert_eq!(RegionGraph::new(9).unwrap().isolate_number(), 9);
    }

    #[test]
    fn igen_of_named_graphs() {
        assert_eq!(complete(4).igen_polynomial().coeffs(), &[1, 4]);
        assert_eq!(cycle(5).igen_polynomial().coeffs(), &[1, 5, 5]);
        assert_eq!(RegionGraph::new(4).unwrap().igen_polynomial().coeffs(), &[1, 4, 6, 4, 1]);
        assert_eq!(
            RegionGraph::new(0).unwrap().igen_polynomial().coeffs(),
            &[1]
        );
    }

    #[test]
    fn igen_matches_brute_force_on_cycles_and_complements() {
        for n in 1..=10 {
            let g = cycle(n.max(3));
            assert_eq!(g.igen_polynomial().coeffs(), &brute_force_igen(&g)[..]);
            let h = g.complement();
            assert_eq!(h.igen_polynomial().coeffs(), &brute_force_igen(&h)[..]);
        }
    }

    #[test]
    fn listed_sets_are_lexicographic_and_complete() {
        let g = cycle(5);
        let pairs = g.list_isolated_sets(Some(2));
        let want: Vec<Vec<usize>> =
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]];
        assert_eq!(pairs.iter().map(|s| s.regions.clone()).collect::<Vec<_>>(), want);
        let all = g.list_isolated_sets(None);
        assert_eq!(all.len() as u64, g.igen_polynomial().eval_at_one());
        assert_eq!(all[0].regions, Vec::<usize>::new());
        assert_eq!(g.list_isolated_sets(Some(0)).len(), 1);
    }

    #[test]
    fn split_sum_of_two_triangles() {
        let k3 = complete(3);
        let g = split_sum_graph(&k3, 0, &k3, 0).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.isolate_number(), 2);
    }

    #[test]
    fn split_sum_with_circle_graph_adds_a_pendant() {
        let k3 = complete(3);
        let circle = RegionGraph::with_edges(2, &[(0, 1)]).unwrap();
        let g = split_sum_graph(&k3, 1, &circle, 0).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.degree(3), 1);
        assert!(g.has_edge(1, 3));
    }

    #[test]
    fn split_sum_of_trefoil_graphs_has_isolate_number_two() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        let g = RegionGraph::from_projection(&t).unwrap();
        let s = split_sum_graph(&g, 4, &g, 0).unwrap();
        assert_eq!(s.isolate_number(), 2);
    }

    #[test]
    fn split_sum_rejects_bad_regions() {
        let k3 = complete(3);
        assert_eq!(split_sum_graph(&k3, 5, &k3, 0), Err(Error::InvalidRegion(5)));
    }

    #[test]
    fn independent_region_numbers() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        assert_eq!(independent_region_number(&t).unwrap(), 1);
        let curl = LinkProjection::parse(CURL_PD).unwrap();
        assert_eq!(independent_region_number(&curl).unwrap(), 0);
        let circle = LinkProjection::trivial_circle();
        assert_eq!(independent_region_number(&circle), Err(Error::TrivialProjection));
    }

    #[test]
    fn a2_bounds_for_trefoil() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        let b = a2_bounds_check(&t).unwrap();
        assert_eq!((b.a2, b.lower, b.upper, b.ok), (0, -2, 10, true));
    }

    #[test]
    fn a2_bounds_rejections() {
        let curl = LinkProjection::parse(CURL_PD).unwrap();
        assert_eq!(a2_bounds_check(&curl), Err(Error::NotIrreducible));
        let split = LinkProjection::parse("X(1,1,2,2) X(3,3,4,4)").unwrap();
        assert_eq!(a2_bounds_check(&split), Err(Error::NotConnected));
    }

    #[test]
    fn graph_json_is_a_sorted_edge_list() {
        let g = cycle(3);
        let json = serde_json::to_value(&g).unwrap();
        assert_eq!(json, serde_json::json!({"n": 3, "edges": [[0,1],[0,2],[1,2]]}));
    }

    #[test]
    fn too_large_graph_is_rejected() {
        assert_eq!(RegionGraph::new(65), Err(Error::GraphTooLarge(65)));
    }
}
