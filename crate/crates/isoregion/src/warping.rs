//! Oriented knot diagrams over a projection and warping-degree labelings.
//!
//! A diagram adds two pieces of data to a single-strand shadow: which
//! opposite slot-pair carries the over strand at each crossing, and a
//! traversal direction. Traveling from a base point on an edge, a crossing
//! is a *warping crossing point* when its under-passage is met first; the
//! count is the warping degree at that base point. Labels of consecutive
//! edges differ by exactly one, the reversed orientation satisfies
//! `d(-D_b) = c - d(D_b)`, and a diagram is alternating exactly when the
//! label span is one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pdcode::{Dart, LinkProjection};
use crate::regiongraph::RegionGraph;

/// Default cutoff for the exhaustive `2^c` diagram search.
pub const DEFAULT_SEARCH_LIMIT: usize = 12;

/// Traversal direction of the single strand.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Orientation {
    #[default]
    Forward,
    Reversed,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Reversed,
            Orientation::Reversed => Orientation::Forward,
        }
    }
}

/// A knot shadow with over/under data and a strand orientation.
///
/// `over_pair[v]` is 0 when slots {0,2} of crossing `v` carry the over
/// strand and 1 for slots {1,3}. The strand is stored as the sequence of
/// arrival darts; each crossing appears twice, once per slot-pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedDiagram {
    shadow: LinkProjection,
    over_pair: Vec<u8>,
    orientation: Orientation,
    strand: Vec<Dart>,
}

/// The two directed traversals of a knot shadow, as arrival-dart cycles.
/// Returns one cycle per direction per component.
fn strand_cycles(shadow: &LinkProjection) -> Vec<Vec<Dart>> {
    let mate = shadow.mate_table();
    let n = shadow.dart_count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cycle.push(Dart::from_id(d));
            d = mate[Dart::from_id(d).opposite().id()];
        }
        cycles.push(cycle);
    }
    cycles
}

impl OrientedDiagram {
    /// Build a diagram over a validated single-strand shadow.
    pub fn new(
        shadow: LinkProjection,
        over_pair: Vec<u8>,
        orientation: Orientation,
    ) -> Result<Self> {
        let report = shadow.validate();
        if !report.is_valid {
            return Err(Error::InvalidProjection(report.messages.join("; ")));
        }
        let c = shadow.crossing_count();
        if over_pair.len() != c {
            return Err(Error::Range(format!(
                "expected {c} over/under choices, got {}",
                over_pair.len()
            )));
        }
        if over_pair.iter().any(|&p| p > 1) {
            return Err(Error::Range("over_pair entries must be 0 or 1".to_string()));
        }
        let strand = if c == 0 {
            Vec::new()
        } else {
            let cycles = strand_cycles(&shadow);
            if cycles.len() != 2 {
                return Err(Error::NotAKnot(cycles.len() / 2));
            }
            match orientation {
                Orientation::Forward => cycles.into_iter().next().unwrap(),
                Orientation::Reversed => cycles.into_iter().nth(1).unwrap(),
            }
        };
        Ok(OrientedDiagram {
            shadow,
            over_pair,
            orientation,
            strand,
        })
    }

    /// Parse diagram PD text: the strand entering at the first listed edge
    /// of each crossing passes under.
    pub fn parse(text: &str) -> Result<Self> {
        let shadow = LinkProjection::parse(text)?;
        let c = shadow.crossing_count();
        // slot 0 is the incoming under strand, so slots {1,3} are over
        Self::new(shadow, vec![1; c], Orientation::Forward)
    }

    /// The alternating diagram over a knot shadow, assigning over-passages
    /// at even strand positions. Every spherical knot shadow admits one.
    pub fn alternating(shadow: &LinkProjection) -> Result<Self> {
        let c = shadow.crossing_count();
        let probe = Self::new(shadow.clone(), vec![0; c], Orientation::Forward)?;
        let mut over_pair = vec![2u8; c];
        for (pos, d) in probe.strand.iter().enumerate() {
            let pair = d.slot & 1;
            let needed = if pos % 2 == 0 { pair } else { pair ^ 1 };
            let v = d.crossing;
            if over_pair[v] == 2 {
                over_pair[v] = needed;
            } else if over_pair[v] != needed {
                return Err(Error::InvalidProjection(
                    "no alternating assignment exists".to_string(),
                ));
            }
        }
        Self::new(shadow.clone(), over_pair, Orientation::Forward)
    }

    pub fn shadow(&self) -> &LinkProjection {
        &self.shadow
    }

    pub fn crossing_count(&self) -> usize {
        self.shadow.crossing_count()
    }

    pub fn over_pair(&self) -> &[u8] {
        &self.over_pair
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Arrival darts in traversal order.
    pub fn strand(&self) -> &[Dart] {
        &self.strand
    }

    /// Edge ids in traversal order.
    pub fn strand_edges(&self) -> Vec<usize> {
        if self.shadow.is_trivial_circle() {
            return vec![0];
        }
        self.strand.iter().map(|&d| self.shadow.edge_at(d)).collect()
    }

    /// Whether the passage arriving at `d` runs over.
    pub fn is_over(&self, d: Dart) -> bool {
        (d.slot & 1) == self.over_pair[d.crossing]
    }

    /// Same diagram, opposite traversal direction.
    pub fn reversed(&self) -> Self {
        Self::new(
            self.shadow.clone(),
            self.over_pair.clone(),
            self.orientation.flipped(),
        )
        .expect("reversal of a valid diagram")
    }

    /// Mirror image: every crossing switched.
    pub fn mirrored(&self) -> Self {
        let flipped = self.over_pair.iter().map(|&p| p ^ 1).collect();
        Self::new(self.shadow.clone(), flipped, self.orientation)
            .expect("mirror of a valid diagram")
    }

    /// Single crossing change at `v`.
    pub fn with_flipped_crossing(&self, v: usize) -> Self {
        assert!(v < self.over_pair.len(), "crossing {v} out of range");
        let mut over_pair = self.over_pair.clone();
        over_pair[v] ^= 1;
        Self::new(self.shadow.clone(), over_pair, self.orientation)
            .expect("crossing change of a valid diagram")
    }

    /// Warping degree for a base point on every edge, by full traversal
    /// from each strand position.
    pub fn warping_labeling(&self) -> WarpingLabeling {
        let c = self.crossing_count();
        let mut labels = vec![0u64; self.shadow.edge_count()];
        if c > 0 {
            let m = self.strand.len();
            let mut seen = vec![false; c];
            for i in 0..m {
                seen.iter_mut().for_each(|s| *s = false);
                let mut count = 0;
                for j in 0..m {
                    let d = self.strand[(i + j) % m];
                    if !seen[d.crossing] {
                        seen[d.crossing] = true;
                        if !self.is_over(d) {
                            count += 1;
                        }
                    }
                }
                labels[self.shadow.edge_at(self.strand[i])] = count;
            }
        }
        WarpingLabeling {
            labels,
            strand_edges: self.strand_edges(),
        }
    }

    pub fn warping_stats(&self) -> WarpingStats {
        let labeling = self.warping_labeling();
        let c = self.crossing_count() as u64;
        let d = labeling.min_label();
        let max_label = labeling.max_label();
        let d_rev = c - max_label;
        WarpingStats {
            d,
            d_rev,
            d_bar: d.min(d_rev),
            span: max_label - d,
            max_label,
            c,
        }
    }

    /// Over- and under-passages alternate along the strand.
    pub fn is_alternating(&self) -> bool {
        let m = self.strand.len();
        (0..m).all(|i| self.is_over(self.strand[i]) != self.is_over(self.strand[(i + 1) % m]))
    }

    /// Not alternating, but one crossing change away from alternating.
    pub fn is_almost_alternating(&self) -> bool {
        !self.is_alternating()
            && (0..self.crossing_count()).any(|v| self.with_flipped_crossing(v).is_alternating())
    }

    pub fn has_monogon(&self) -> bool {
        self.shadow
            .regions()
            .expect("shadow validated at construction")
            .iter()
            .any(|r| r.gon == 1)
    }
}

/// Warping degrees indexed by the edge carrying the base point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WarpingLabeling {
    /// `labels[e]` is the warping degree with the base point on edge `e`.
    pub labels: Vec<u64>,
    /// Edge ids in traversal order.
    pub strand_edges: Vec<usize>,
}

impl WarpingLabeling {
    pub fn label_of_edge(&self, e: usize) -> u64 {
        self.labels[e]
    }

    pub fn min_label(&self) -> u64 {
        self.labels.iter().copied().min().unwrap_or(0)
    }

    pub fn max_label(&self) -> u64 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// Labels in traversal order.
    pub fn along_strand(&self) -> Vec<u64> {
        self.strand_edges.iter().map(|&e| self.labels[e]).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct WarpingStats {
    /// Warping degree: minimum label.
    pub d: u64,
    /// Warping degree of the reversed diagram: `c - max_label`.
    pub d_rev: u64,
    /// Unoriented warping degree `min(d, d_rev)`.
    pub d_bar: u64,
    /// `max_label - min_label`; one exactly for alternating diagrams.
    pub span: u64,
    pub max_label: u64,
    pub c: u64,
}

/// Warping degree of a knot shadow: the unoriented warping degree of any
/// one alternating diagram over it.
pub fn projection_warping_degree(shadow: &LinkProjection) -> Result<u64> {
    Ok(OrientedDiagram::alternating(shadow)?.warping_stats().d_bar)
}

/// Upper bounds for the welded unknotting number of a diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct WeldedBounds {
    /// `u_w(D) <= d_bar(D)`, always applicable.
    pub bound_dbar: u64,
    /// `u_w(D) <= c(D) - I(D)` when applicable, else `None`.
    pub bound_ci: Option<u64>,
    /// The `c - I` bound applies because the diagram is almost alternating.
    pub via_almost_alternating: bool,
    /// The `c - I` bound applies because `c <= 9`, the shadow is
    /// irreducible, and the exhaustive search finds no diagram with
    /// `d_bar > d(P)`.
    pub via_small_irreducible: bool,
    /// Minimum applicable bound.
    pub best: u64,
}

pub fn welded_bounds(diagram: &OrientedDiagram) -> Result<WeldedBounds> {
    let stats = diagram.warping_stats();
    let shadow = diagram.shadow();
    let c = diagram.crossing_count();
    let via_almost_alternating = diagram.is_almost_alternating();
    let via_small_irreducible = c >= 1
        && c <= 9
        && shadow.reducible_crossings()?.is_empty()
        && wd_exception_search(shadow)?.is_none();
    let bound_ci = if via_almost_alternating || via_small_irreducible {
        let isolate = RegionGraph::from_projection(shadow)?.isolate_number();
        Some((c as u64).saturating_sub(isolate))
    } else {
        None
    };
    let best = bound_ci.map_or(stats.d_bar, |ci| ci.min(stats.d_bar));
    Ok(WeldedBounds {
        bound_dbar: stats.d_bar,
        bound_ci,
        via_almost_alternating,
        via_small_irreducible,
        best,
    })
}

/// Search all `2^c` diagrams over a knot shadow for one whose unoriented
/// warping degree exceeds the shadow's warping degree. Returns the first
/// hit in lexicographic over-pair order, or `None`.
pub fn wd_exception_search(shadow: &LinkProjection) -> Result<Option<OrientedDiagram>> {
    wd_exception_search_limited(shadow, DEFAULT_SEARCH_LIMIT)
}

pub fn wd_exception_search_limited(
    shadow: &LinkProjection,
    limit: usize,
) -> Result<Option<OrientedDiagram>> {
    let c = shadow.crossing_count();
    if c > limit {
        return Err(Error::SearchTooLarge { crossings: c, limit });
    }
    let dp = projection_warping_degree(shadow)?;
    for assignment in 0u64..(1u64 << c) {
        let over_pair: Vec<u8> = (0..c)
            .map(|v| ((assignment >> (c - 1 - v)) & 1) as u8)
            .collect();
        let diagram = OrientedDiagram::new(shadow.clone(), over_pair, Orientation::Forward)?;
        if diagram.warping_stats().d_bar > dp {
            return Ok(Some(diagram));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::torus_projection;

    const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const CURL_PD: &str = "X(1,1,2,2)";

    fn trefoil() -> LinkProjection {
        LinkProjection::parse(TREFOIL_PD).unwrap()
    }

    #[test]
    fn alternating_trefoil_labeling() {
        let d = OrientedDiagram::alternating(&trefoil()).unwrap();
        assert!(d.is_alternating());
        let labeling = d.warping_labeling();
        assert_eq!(labeling.along_strand(), vec![1, 2, 1, 2, 1, 2]);
        let stats = d.warping_stats();
        assert_eq!((stats.d, stats.d_rev, stats.d_bar, stats.span), (1, 1, 1, 1));
    }

    #[test]
    fn curl_labeling() {
        let shadow = LinkProjection::parse(CURL_PD).unwrap();
        let d = OrientedDiagram::alternating(&shadow).unwrap();
        let labeling = d.warping_labeling();
        let mut labels = labeling.labels.clone();
        labels.sort_unstable();
        assert_eq!(labels, vec![0, 1]);
        assert_eq!(d.warping_stats().d, 0);
        assert!(d.is_alternating());
        assert!(d.has_monogon());
    }

    #[test]
    fn torus_five_knot_diagram() {
        let shadow = torus_projection(5).unwrap();
        let d = OrientedDiagram::alternating(&shadow).unwrap();
        let stats = d.warping_stats();
        assert_eq!(stats.d, 2);
        assert_eq!(stats.max_label, 3);
        assert_eq!(stats.d_bar, projection_warping_degree(&shadow).unwrap());
        // Lemma bound: d(P) <= (c-1)/2
        assert!(stats.d_bar <= (5 - 1) / 2);
    }

    #[test]
    fn projection_warping_degrees_of_odd_torus_shadows() {
        assert_eq!(projection_warping_degree(&trefoil()).unwrap(), 1);
        assert_eq!(projection_warping_degree(&torus_projection(7).unwrap()).unwrap(), 3);
        assert_eq!(projection_warping_degree(&torus_projection(9).unwrap()).unwrap(), 4);
    }

    #[test]
    fn hopf_shadow_is_not_a_knot() {
        let hopf = torus_projection(2).unwrap();
        assert_eq!(
            OrientedDiagram::new(hopf, vec![0, 0], Orientation::Forward),
            Err(Error::NotAKnot(2))
        );
    }

    #[test]
    fn reversal_identity_pointwise() {
        // d(-D_b) = c - d(D_b) at every base edge
        let d = OrientedDiagram::alternating(&trefoil()).unwrap();
        let forward = d.warping_labeling();
        let backward = d.reversed().warping_labeling();
        let c = d.crossing_count() as u64;
        for e in 0..d.shadow().edge_count() {
            assert_eq!(backward.labels[e], c - forward.labels[e]);
        }
    }

    #[test]
    fn mirror_swaps_the_two_warping_degrees() {
        let d = OrientedDiagram::alternating(&torus_projection(5).unwrap()).unwrap();
        let stats = d.warping_stats();
        let mirrored = d.mirrored().warping_stats();
        assert_eq!(mirrored.d, stats.d_rev);
        assert_eq!(mirrored.d_rev, stats.d);
    }

    #[test]
    fn reversed_stats_match_forward_duals() {
        let d = OrientedDiagram::alternating(&torus_projection(7).unwrap()).unwrap();
        let stats = d.warping_stats();
        let rev = d.reversed().warping_stats();
        assert_eq!(rev.d, stats.d_rev);
        assert_eq!(rev.d_bar, stats.d_bar);
        assert_eq!(rev.span, stats.span);
    }

    #[test]
    fn flipping_one_crossing_of_the_trefoil() {
        let alt = OrientedDiagram::alternating(&trefoil()).unwrap();
        let flipped = alt.with_flipped_crossing(0);
        assert!(!flipped.is_alternating());
        assert!(flipped.is_almost_alternating());
        assert!(!flipped.has_monogon());
        // no monogons: d_bar drops by exactly one
        let dp = projection_warping_degree(&trefoil()).unwrap();
        assert_eq!(flipped.warping_stats().d_bar, dp - 1);
    }

    #[test]
    fn flipped_torus_seven_is_almost_alternating() {
        let shadow = torus_projection(7).unwrap();
        let alt = OrientedDiagram::alternating(&shadow).unwrap();
        let flipped = alt.with_flipped_crossing(3);
        assert!(!flipped.is_alternating());
        assert!(flipped.is_almost_alternating());
        assert!(!flipped.has_monogon());
        assert_eq!(flipped.warping_stats().d_bar, 2);
    }

    #[test]
    fn span_characterizes_alternating_for_the_trefoil() {
        let shadow = trefoil();
        for assignment in 0u8..8 {
            let over_pair = (0..3).map(|v| (assignment >> v) & 1).collect();
            let d = OrientedDiagram::new(shadow.clone(), over_pair, Orientation::Forward).unwrap();
            let stats = d.warping_stats();
            assert_eq!(stats.span == 1, d.is_alternating(), "assignment {assignment:03b}");
            assert!(stats.d + stats.d_rev <= 2);
        }
    }

    #[test]
    fn welded_bounds_for_alternating_trefoil() {
        let d = OrientedDiagram::alternating(&trefoil()).unwrap();
        let b = welded_bounds(&d).unwrap();
        assert_eq!(b.bound_dbar, 1);
        assert!(b.via_small_irreducible);
        assert!(!b.via_almost_alternating);
        assert_eq!(b.bound_ci, Some(2)); // c - I = 3 - 1
        assert_eq!(b.best, 1);
    }

    #[test]
    fn welded_bounds_for_flipped_torus_seven() {
        let shadow = torus_projection(7).unwrap();
        let flipped = OrientedDiagram::alternating(&shadow).unwrap().with_flipped_crossing(0);
        let b = welded_bounds(&flipped).unwrap();
        assert!(b.via_almost_alternating);
        assert_eq!(b.bound_ci, Some(4)); // c - I = 7 - 3
        assert_eq!(b.bound_dbar, 2);
        assert_eq!(b.best, 2);
    }

    #[test]
    fn welded_bounds_for_curl() {
        let shadow = LinkProjection::parse(CURL_PD).unwrap();
        let d = OrientedDiagram::alternating(&shadow).unwrap();
        let b = welded_bounds(&d).unwrap();
        assert_eq!(b.bound_dbar, 0);
        assert_eq!(b.best, 0);
        assert!(!b.via_small_irreducible); // the curl is reducible
    }

    #[test]
    fn exception_search_is_empty_for_small_torus_shadows() {
        assert_eq!(wd_exception_search(&trefoil()).unwrap(), None);
        assert_eq!(wd_exception_search(&torus_projection(5).unwrap()).unwrap(), None);
    }

    #[test]
    fn exception_search_respects_the_cutoff() {
        let shadow = torus_projection(13).unwrap();
        assert_eq!(
            wd_exception_search(&shadow),
            Err(Error::SearchTooLarge { crossings: 13, limit: 12 })
        );
        assert_eq!(wd_exception_search_limited(&shadow, 13).unwrap(), None);
    }

    #[test]
    fn pd_text_parses_to_the_alternating_trefoil() {
        let d = OrientedDiagram::parse(TREFOIL_PD).unwrap();
        assert!(d.is_alternating());
        assert_eq!(d.warping_stats().d_bar, 1);
    }

    #[test]
    fn circle_diagram_is_trivial() {
        let d = OrientedDiagram::new(
            LinkProjection::trivial_circle(),
            Vec::new(),
            Orientation::Forward,
        )
        .unwrap();
        let stats = d.warping_stats();
        assert_eq!((stats.d, stats.d_bar, stats.span), (0, 0, 0));
        assert_eq!(d.warping_labeling().labels, vec![0]);
    }

    #[test]
    fn rejects_malformed_over_pairs() {
        let shadow = trefoil();
        assert!(matches!(
            OrientedDiagram::new(shadow.clone(), vec![0, 1], Orientation::Forward),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            OrientedDiagram::new(shadow, vec![0, 1, 2], Orientation::Forward),
            Err(Error::Range(_))
        ));
    }
}
