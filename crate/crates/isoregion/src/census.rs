//! Exhaustive census of connected spherical projections at small crossing
//! number, and the property suites that run over it.
//!
//! With the counterclockwise rotation fixed, a projection on `c` crossings
//! is a perfect matching on the `4c` darts. The enumerator walks matchings
//! in dart order, pruning branches that close a face orbit too many times
//! (sphericity bound), close a proper crossing component (connectivity), or
//! duplicate the symmetry class of the first pair. Canonical forms are the
//! lexicographically minimal PD signature over all root darts and, by
//! default, both reflections.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pdcode::{Dart, LinkProjection};
use crate::regiongraph::{a2_bounds_check, independent_region_number, RegionGraph};
use crate::torus::torus_projection;
use crate::warping::{projection_warping_degree, wd_exception_search, OrientedDiagram, Orientation};

/// Largest supported census; the matching space grows as `(4c-1)!!`.
pub const MAX_SUPPORTED_CROSSINGS: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CensusConfig {
    pub max_crossings: usize,
    /// Keep one representative per canonical form.
    pub dedup: bool,
    /// Keep only single-strand shadows.
    pub knots_only: bool,
    /// Treat mirror images as distinct under dedup.
    pub distinguish_mirrors: bool,
}

impl CensusConfig {
    pub fn new(max_crossings: usize) -> Self {
        CensusConfig {
            max_crossings,
            dedup: false,
            knots_only: false,
            distinguish_mirrors: false,
        }
    }

    pub fn dedup(mut self, yes: bool) -> Self {
        self.dedup = yes;
        self
    }

    pub fn knots_only(mut self, yes: bool) -> Self {
        self.knots_only = yes;
        self
    }
}

#[inline]
fn rotate(dart: usize) -> usize {
    (dart & !3) | ((dart + 1) & 3)
}

/// Undo record for one face-successor arc.
struct ArcUndo {
    closed: bool,
    h: usize,
    t: usize,
    u: usize,
    v: usize,
}

enum CompUndo {
    Same(usize),
    Merged {
        keep: usize,
        gone: usize,
        old_open_keep: usize,
        old_size_keep: usize,
        relabeled: u32,
    },
}

struct Matcher {
    c: usize,
    n: usize,
    mate: Vec<usize>,
    /// Chain-endpoint partner for the partially known successor
    /// permutation; `partner[x] = x` for a singleton chain.
    partner: Vec<usize>,
    closed_faces: usize,
    /// Crossing -> component label (a crossing id).
    comp: Vec<usize>,
    /// Unmatched dart count per component label.
    open: Vec<usize>,
    /// Crossing count per component label.
    size: Vec<usize>,
    pairs: usize,
}

impl Matcher {
    fn new(c: usize) -> Self {
        assert!(c <= 32, "component masks are 32-bit");
        let n = 4 * c;
        Matcher {
            c,
            n,
            mate: vec![usize::MAX; n],
            partner: (0..n).collect(),
            closed_faces: 0,
            comp: (0..c).collect(),
            open: vec![4; c],
            size: vec![1; c],
            pairs: 0,
        }
    }

    /// Add the successor arc `u -> v`; `u` has no successor yet and `v` no
    /// predecessor, so `u` is a chain tail and `v` a chain head.
    #[inline]
    fn add_arc(&mut self, u: usize, v: usize) -> ArcUndo {
        let h = self.partner[u];
        let t = self.partner[v];
        if h == v {
            self.closed_faces += 1;
            ArcUndo { closed: true, h, t, u, v }
        } else {
            self.partner[h] = t;
            self.partner[t] = h;
            ArcUndo { closed: false, h, t, u, v }
        }
    }

    #[inline]
    fn undo_arc(&mut self, undo: &ArcUndo) {
        if undo.closed {
            self.closed_faces -= 1;
        } else {
            self.partner[undo.h] = undo.u;
            self.partner[undo.t] = undo.v;
        }
    }

    fn join_components(&mut self, x: usize, y: usize) -> (usize, CompUndo) {
        let lx = self.comp[x];
        let ly = self.comp[y];
        if lx == ly {
            self.open[lx] -= 2;
            (lx, CompUndo::Same(lx))
        } else {
            let (keep, gone) = if lx < ly { (lx, ly) } else { (ly, lx) };
            let mut relabeled = 0u32;
            for v in 0..self.c {
                if self.comp[v] == gone {
                    self.comp[v] = keep;
                    relabeled |= 1 << v;
                }
            }
            let undo = CompUndo::Merged {
                keep,
                gone,
                old_open_keep: self.open[keep],
                old_size_keep: self.size[keep],
                relabeled,
            };
            self.open[keep] += self.open[gone];
            self.open[keep] -= 2;
            self.size[keep] += self.size[gone];
            (keep, undo)
        }
    }

    fn unjoin_components(&mut self, undo: CompUndo) {
        match undo {
            CompUndo::Same(l) => self.open[l] += 2,
            CompUndo::Merged {
                keep,
                gone,
                old_open_keep,
                old_size_keep,
                mut relabeled,
            } => {
                self.open[keep] = old_open_keep;
                self.size[keep] = old_size_keep;
                while relabeled != 0 {
                    let v = relabeled.trailing_zeros() as usize;
                    relabeled &= relabeled - 1;
                    self.comp[v] = gone;
                }
            }
        }
    }

    fn run(&mut self, from: usize, sink: &mut dyn FnMut(usize, &[usize])) {
        let mut a = from;
        while a < self.n && self.mate[a] != usize::MAX {
            a += 1;
        }
        if a == self.n {
            if self.closed_faces == self.c + 2 {
                sink(self.c, &self.mate);
            }
            return;
        }
        if a == 0 {
            // fixing the first pair exhausts symmetry classes: any matching
            // is isomorphic, via crossing relabeling and slot rotation, to
            // one whose dart 0 mates within crossing 0 or to dart (1,0)
            let top = if self.c >= 2 { 4 } else { 3 };
            for b in 1..=top {
                self.try_pair(a, b, sink);
            }
        } else {
            for b in a + 1..self.n {
                if self.mate[b] == usize::MAX {
                    self.try_pair(a, b, sink);
                }
            }
        }
    }

    #[inline]
    fn try_pair(&mut self, a: usize, b: usize, sink: &mut dyn FnMut(usize, &[usize])) {
        self.mate[a] = b;
        self.mate[b] = a;
        self.pairs += 1;
        let arc1 = self.add_arc(a, rotate(b));
        let arc2 = self.add_arc(b, rotate(a));
        let (label, comp_undo) = self.join_components(a >> 2, b >> 2);

        let complete = self.pairs == 2 * self.c;
        let face_budget = if complete { self.c + 2 } else { self.c + 1 };
        // every future arc closes at most one orbit, so the face count can
        // still reach c+2 only if enough arcs remain
        let reachable = self.closed_faces + 2 * (2 * self.c - self.pairs) >= self.c + 2;
        let viable = self.closed_faces <= face_budget
            && reachable
            && !(self.open[label] == 0 && self.size[label] < self.c);
        if viable {
            self.run(a + 1, sink);
        }

        self.unjoin_components(comp_undo);
        self.undo_arc(&arc2);
        self.undo_arc(&arc1);
        self.pairs -= 1;
        self.mate[a] = usize::MAX;
        self.mate[b] = usize::MAX;
    }
}

/// Closed strands of a matching; works on dart ids, `n <= 32`.
fn strand_count(c: usize, mate: &[usize]) -> usize {
    let n = 4 * c;
    let mut seen: u32 = 0;
    let mut orbits = 0;
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut d = start;
        while seen & (1 << d) == 0 {
            seen |= 1 << d;
            d = mate[d ^ 2];
        }
        orbits += 1;
    }
    orbits / 2
}

/// All connected spherical projections with up to `max_crossings`
/// crossings, the zero-crossing circle first. Without dedup the stream
/// lists matchings in generation order (one symmetry class of the first
/// pair only); with dedup it is sorted by canonical form.
pub fn enumerate_projections(cfg: &CensusConfig) -> Result<Vec<LinkProjection>> {
    if cfg.max_crossings == 0 {
        return Err(Error::Range("census needs max_crossings >= 1".to_string()));
    }
    if cfg.max_crossings > MAX_SUPPORTED_CROSSINGS {
        return Err(Error::LimitExceeded {
            requested: cfg.max_crossings,
            max: MAX_SUPPORTED_CROSSINGS,
        });
    }
    let mut out = vec![LinkProjection::trivial_circle()];
    for c in 1..=cfg.max_crossings {
        let mut canon: BTreeSet<Vec<u16>> = BTreeSet::new();
        let mut plain: Vec<LinkProjection> = Vec::new();
        let mut scratch = CanonScratch::new(c);
        let mut matcher = Matcher::new(c);
        matcher.run(0, &mut |c, mate| {
            if cfg.knots_only && strand_count(c, mate) != 1 {
                return;
            }
            if cfg.dedup {
                canon.insert(scratch.minimal_signature(
                    c,
                    mate,
                    !cfg.distinguish_mirrors,
                ));
            } else {
                plain.push(LinkProjection::from_matching(c, mate));
            }
        });
        if cfg.dedup {
            for sig in canon {
                out.push(projection_from_signature(&sig));
            }
        } else {
            out.append(&mut plain);
        }
    }
    Ok(out)
}

/// Lexicographically minimal PD signature over all root darts (and both
/// reflections when `include_reflection`). Two connected projections are
/// isomorphic as shadows on the sphere exactly when their forms agree.
pub fn canonical_form(l: &LinkProjection, include_reflection: bool) -> Result<Vec<u16>> {
    if l.is_trivial_circle() {
        return Ok(Vec::new());
    }
    if !l.is_connected() {
        return Err(Error::NotConnected);
    }
    let c = l.crossing_count();
    let mate = l.mate_table();
    let mut scratch = CanonScratch::new(c);
    Ok(scratch.minimal_signature(c, &mate, include_reflection))
}

/// The canonical representative itself.
pub fn canonical_projection(l: &LinkProjection, include_reflection: bool) -> Result<LinkProjection> {
    Ok(projection_from_signature(&canonical_form(l, include_reflection)?))
}

fn projection_from_signature(sig: &[u16]) -> LinkProjection {
    if sig.is_empty() {
        return LinkProjection::trivial_circle();
    }
    let rows: Vec<[u64; 4]> = sig
        .chunks_exact(4)
        .map(|ch| [ch[0] as u64 + 1, ch[1] as u64 + 1, ch[2] as u64 + 1, ch[3] as u64 + 1])
        .collect();
    LinkProjection::from_crossings(rows).expect("signatures are valid PD codes")
}

/// Reusable buffers for canonical-form traversals. Stale entries are
/// detected by epoch stamps instead of clearing between traversals, which
/// keeps aborted walks nearly free.
struct CanonScratch {
    epoch: u64,
    orig_of: Vec<usize>,
    id_stamp: Vec<u64>,
    base: Vec<u8>,
    edge_label: Vec<u16>,
    edge_stamp: Vec<u64>,
    sig: Vec<u16>,
}

impl CanonScratch {
    fn new(c: usize) -> Self {
        CanonScratch {
            epoch: 0,
            orig_of: vec![usize::MAX; c],
            id_stamp: vec![0; c],
            base: vec![0; c],
            // edges are keyed by the smaller of their two dart ids
            edge_label: vec![0; 4 * c],
            edge_stamp: vec![0; 4 * c],
            sig: Vec::with_capacity(4 * c),
        }
    }

    fn minimal_signature(&mut self, c: usize, mate: &[usize], include_reflection: bool) -> Vec<u16> {
        debug_assert_eq!(self.orig_of.len(), c);
        let mut best: Option<Vec<u16>> = None;
        for root in 0..4 * c {
            for reflect in [false, true] {
                if reflect && !include_reflection {
                    continue;
                }
                if self.traverse(c, mate, root, reflect, best.as_deref()) {
                    best = Some(self.sig.clone());
                }
            }
        }
        best.expect("at least one root traversal")
    }

    /// Rooted traversal labeling crossings in discovery order and edges in
    /// first-use order. Returns true when the walk produced a signature
    /// strictly below `best`; bails out early once it cannot.
    fn traverse(
        &mut self,
        c: usize,
        mate: &[usize],
        root: usize,
        reflect: bool,
        best: Option<&[u16]>,
    ) -> bool {
        self.epoch += 1;
        self.sig.clear();
        let mut next_label: u16 = 0;
        let mut discovered = 1;
        let root_crossing = root >> 2;
        self.id_stamp[root_crossing] = self.epoch;
        self.orig_of[0] = root_crossing;
        self.base[root_crossing] = (root & 3) as u8;
        let mut strictly_less = best.is_none();
        // edges are keyed by the smaller of their two dart ids
        let edge_key = |d: usize| if mate[d] < d { mate[d] } else { d };
        for id in 0..c {
            // connected input: everything below `discovered` is fresh
            debug_assert!(id < discovered, "disconnected matching");
            let oc = self.orig_of[id];
            let b = self.base[oc];
            for t in 0..4u8 {
                let oslot = if reflect { (b + 4 - t) % 4 } else { (b + t) % 4 };
                let d = (oc << 2) | oslot as usize;
                let e = edge_key(d);
                if self.edge_stamp[e] != self.epoch {
                    self.edge_stamp[e] = self.epoch;
                    self.edge_label[e] = next_label;
                    next_label += 1;
                }
                let label = self.edge_label[e];
                if !strictly_less {
                    let bval = best.unwrap()[self.sig.len()];
                    if label > bval {
                        return false;
                    }
                    if label < bval {
                        strictly_less = true;
                    }
                }
                self.sig.push(label);
                let m = mate[d];
                let mc = m >> 2;
                if self.id_stamp[mc] != self.epoch {
                    self.id_stamp[mc] = self.epoch;
                    self.orig_of[discovered] = mc;
                    self.base[mc] = (m & 3) as u8;
                    discovered += 1;
                }
            }
        }
        strictly_less
    }
}

/// Outcome of checking the isolate-region-number-one classification over
/// the deduplicated census.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Theorem1Report {
    pub max_crossings: usize,
    pub members_checked: usize,
    /// Canonical PD strings of members with `I = 1`.
    pub i1_members: Vec<String>,
    /// The circle, the curl, and the 2- and 3-crossing torus projections,
    /// as far as `max_crossings` allows.
    pub expected_i1_members: Vec<String>,
    pub holds: bool,
    /// Reducible members with at least two crossings and `I < 2`.
    pub cor22_violations: Vec<String>,
    /// Members with at least four crossings and `I < 2`.
    pub cor24_violations: Vec<String>,
}

/// Check that the census members with isolate-region number one are
/// exactly the circle, the curl, and the standard 2- and 3-crossing
/// projections, and that the two reducibility corollaries hold.
pub fn verify_theorem1(max_crossings: usize) -> Result<Theorem1Report> {
    let cfg = CensusConfig::new(max_crossings).dedup(true);
    let members = enumerate_projections(&cfg)?;
    let mut i1_members = Vec::new();
    let mut cor22_violations = Vec::new();
    let mut cor24_violations = Vec::new();
    for l in &members {
        let isolate = RegionGraph::from_projection(l)?.isolate_number();
        let c = l.crossing_count();
        if isolate == 1 {
            i1_members.push(l.to_pd_string());
        }
        if c >= 2 && isolate < 2 && !l.reducible_crossings()?.is_empty() {
            cor22_violations.push(l.to_pd_string());
        }
        if c >= 4 && isolate < 2 {
            cor24_violations.push(l.to_pd_string());
        }
    }
    let mut expected_i1_members = vec![LinkProjection::trivial_circle().to_pd_string()];
    for n in 1..=max_crossings.min(3) {
        expected_i1_members
            .push(canonical_projection(&torus_projection(n)?, true)?.to_pd_string());
    }
    let mut got = i1_members.clone();
    got.sort();
    let mut want = expected_i1_members.clone();
    want.sort();
    let holds = got == want && cor22_violations.is_empty() && cor24_violations.is_empty();
    Ok(Theorem1Report {
        max_crossings,
        members_checked: members.len(),
        i1_members,
        expected_i1_members,
        holds,
        cor22_violations,
        cor24_violations,
    })
}

/// Per-projection census record with the outcome of every applicable
/// property check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProjectionRecord {
    pub pd: String,
    pub c: usize,
    pub connected: bool,
    pub irreducible: bool,
    pub i: u64,
    pub ir: Option<u64>,
    pub igen: Vec<u64>,
    pub gon_census: BTreeMap<usize, usize>,
    pub checks: BTreeMap<String, bool>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CensusReport {
    pub max_crossings: usize,
    pub members: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
    /// `"<pd>: <check>"` for every failed check.
    pub failures: Vec<String>,
    pub records: Vec<ProjectionRecord>,
}

/// Run every property whose hypotheses hold on every member of the
/// deduplicated census.
pub fn corpus_property_suite(max_crossings: usize) -> Result<CensusReport> {
    let cfg = CensusConfig::new(max_crossings).dedup(true);
    let members = enumerate_projections(&cfg)?;
    let mut records = Vec::with_capacity(members.len());
    for l in &members {
        records.push(record_for(l)?);
    }
    let mut passed = 0;
    let mut failed = 0;
    let mut failures = Vec::new();
    for r in &records {
        for (name, ok) in &r.checks {
            if *ok {
                passed += 1;
            } else {
                failed += 1;
                failures.push(format!("{}: {}", r.pd, name));
            }
        }
    }
    Ok(CensusReport {
        max_crossings,
        members: records.len(),
        checks_passed: passed,
        checks_failed: failed,
        failures,
        records,
    })
}

fn record_for(l: &LinkProjection) -> Result<ProjectionRecord> {
    let c = l.crossing_count();
    let rs = l.regions()?;
    let g = RegionGraph::from_projection(l)?;
    let igen = g.igen_polynomial();
    let isolate = g.isolate_number();
    let irreducible = l.reducible_crossings()?.is_empty();
    let is_knot = l.component_count() == 1;
    let mut checks: BTreeMap<String, bool> = BTreeMap::new();

    if c >= 1 {
        checks.insert(
            "euler_region_count".into(),
            rs.len() == c + 2 && rs.gon_census().corner_total() == 4 * c,
        );
    }
    checks.insert("checkerboard_proper".into(), checkerboard_proper(l)?);
    checks.insert(
        "prop_5_1_coefficients".into(),
        igen.coeff(0) == 1
            && igen.coeff(1) == (c + 2) as u64
            && igen.coeffs().iter().all(|&a| a > 0),
    );
    checks.insert("igen_maxdeg_is_isolate_number".into(), igen.maxdeg() as u64 == isolate);

    if irreducible && c >= 1 {
        checks.insert("ast_identity".into(), l.ast_identity_residual()? == 0);
        checks.insert("prop_5_2_a2_bounds".into(), a2_bounds_check(l)?.ok);
        if rs.iter().any(|r| r.gon >= 4) {
            checks.insert("prop_2_5_ngon_neighbors".into(), ngon_neighbor_check(l, &rs, &g));
        }
        if c >= 4 {
            checks.insert("lemma_2_3_bigon_trigon_pair".into(), bigon_trigon_pair(&rs, &g));
        }
    }

    let ir = if c >= 1 {
        Some(independent_region_number(l)?)
    } else {
        None
    };

    if is_knot && c >= 1 {
        if c <= 4 {
            checks.insert("warping_label_identities".into(), warping_sweep(l)?);
        }
        if irreducible {
            checks.insert(
                "section_1_inequality_chain".into(),
                inequality_chain(l, isolate, ir.unwrap())?,
            );
            if c <= 5 {
                checks.insert(
                    "wd_exception_search_empty".into(),
                    wd_exception_search(l)?.is_none(),
                );
            }
        }
        let alt = OrientedDiagram::alternating(l)?;
        if !alt.has_monogon() && c >= 2 {
            checks.insert(
                "prop_3_2_almost_alternating".into(),
                almost_alternating_drop(l, &alt)?,
            );
        }
    }

    Ok(ProjectionRecord {
        pd: l.to_pd_string(),
        c,
        connected: true,
        irreducible,
        i: isolate,
        ir,
        igen: igen.coeffs().to_vec(),
        gon_census: rs.gon_census().counts,
        checks,
    })
}

fn checkerboard_proper(l: &LinkProjection) -> Result<bool> {
    let colors = l.checkerboard()?;
    if l.is_trivial_circle() {
        return Ok(colors[0] != colors[1]);
    }
    let rs = l.regions()?;
    let mate = l.mate_table();
    Ok((0..l.dart_count()).all(|d| {
        colors[rs.region_of(Dart::from_id(d))] != colors[rs.region_of(Dart::from_id(mate[d]))]
    }))
}

/// Every region with four or more sides has two edge-neighbors that are
/// disconnected from each other.
fn ngon_neighbor_check(l: &LinkProjection, rs: &crate::pdcode::RegionSet, g: &RegionGraph) -> bool {
    let mate = l.mate_table();
    rs.iter().filter(|r| r.gon >= 4).all(|r| {
        let mut around: Vec<usize> = r
            .corners
            .iter()
            .map(|d| rs.region_of(Dart::from_id(mate[d.id()])))
            .collect();
        around.sort_unstable();
        around.dedup();
        around
            .iter()
            .enumerate()
            .any(|(i, &u)| around[i + 1..].iter().any(|&v| !g.has_edge(u, v)))
    })
}

/// Some two disconnected regions are each a bigon or a trigon.
fn bigon_trigon_pair(rs: &crate::pdcode::RegionSet, g: &RegionGraph) -> bool {
    let small: Vec<usize> = rs
        .iter()
        .filter(|r| r.gon == 2 || r.gon == 3)
        .map(|r| r.id)
        .collect();
    small
        .iter()
        .enumerate()
        .any(|(i, &u)| small[i + 1..].iter().any(|&v| !g.has_edge(u, v)))
}

/// `I - 1 <= IR <= d(D) <= c - IR - 1` for both orientations of the
/// alternating diagram.
fn inequality_chain(l: &LinkProjection, isolate: u64, ir: u64) -> Result<bool> {
    let c = l.crossing_count() as i64;
    let alt = OrientedDiagram::alternating(l)?;
    let stats = alt.warping_stats();
    let chain =
        |d: i64| isolate as i64 - 1 <= ir as i64 && (ir as i64) <= d && d <= c - ir as i64 - 1;
    Ok(chain(stats.d as i64) && chain(stats.d_rev as i64))
}

/// Every labeling identity over every diagram of the shadow: steps of one,
/// the reversal identity, the span characterization, and agreement of
/// alternating diagrams with the shadow's warping degree.
fn warping_sweep(l: &LinkProjection) -> Result<bool> {
    let c = l.crossing_count();
    let dp = projection_warping_degree(l)?;
    for assignment in 0u64..(1u64 << c) {
        let over: Vec<u8> = (0..c).map(|v| ((assignment >> v) & 1) as u8).collect();
        let d = OrientedDiagram::new(l.clone(), over, Orientation::Forward)?;
        let labeling = d.warping_labeling();
        let along = labeling.along_strand();
        let m = along.len();
        for i in 0..m {
            let a = along[i] as i64;
            let b = along[(i + 1) % m] as i64;
            if (a - b).abs() != 1 {
                return Ok(false);
            }
        }
        let rev = d.reversed().warping_labeling();
        for e in 0..l.edge_count() {
            if rev.labels[e] != c as u64 - labeling.labels[e] {
                return Ok(false);
            }
        }
        let stats = d.warping_stats();
        if stats.d + stats.d_rev > c as u64 - 1 {
            return Ok(false);
        }
        if (stats.span == 1) != d.is_alternating() {
            return Ok(false);
        }
        if d.is_alternating() && stats.d_bar != dp {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flipping any single crossing of an alternating monogon-free diagram
/// yields an almost alternating diagram with `d_bar = d(P) - 1`.
fn almost_alternating_drop(l: &LinkProjection, alt: &OrientedDiagram) -> Result<bool> {
    let dp = projection_warping_degree(l)?;
    for v in 0..l.crossing_count() {
        let flipped = alt.with_flipped_crossing(v);
        if !flipped.is_almost_alternating() {
            return Ok(false);
        }
        if flipped.warping_stats().d_bar + 1 != dp {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const CURL_PD: &str = "X(1,1,2,2)";
    const FIGURE_EIGHT_PD: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    fn canon(pd: &str) -> Vec<u16> {
        canonical_form(&LinkProjection::parse(pd).unwrap(), true).unwrap()
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        // same trefoil shadow, shifted labels and rotated tuples
        let shifted = "X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)";
        let rotated = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)";
        assert_eq!(canon(TREFOIL_PD), canon(shifted));
        assert_eq!(canon(TREFOIL_PD), canon(rotated));
        assert_ne!(canon(TREFOIL_PD), canon(CURL_PD));
    }

    #[test]
    fn canonical_form_identifies_reflections() {
        // reversing every tuple mirrors the shadow
        let mirrored = "X(5,2,4,1) X(1,4,6,3) X(3,6,2,5)";
        assert_eq!(canon(TREFOIL_PD), canon(mirrored));
    }

    #[test]
    fn canonical_form_rejects_disconnected() {
        let split = LinkProjection::parse("X(1,1,2,2) X(3,3,4,4)").unwrap();
        assert_eq!(canonical_form(&split, true), Err(Error::NotConnected));
    }

    #[test]
    fn census_of_one_crossing() {
        let all = enumerate_projections(&CensusConfig::new(1)).unwrap();
        // circle plus the two labeled curls
        assert_eq!(all.len(), 3);
        let dedup = enumerate_projections(&CensusConfig::new(1).dedup(true)).unwrap();
        assert_eq!(dedup.len(), 2);
        assert!(dedup[0].is_trivial_circle());
        assert_eq!(canonical_form(&dedup[1], true).unwrap(), canon(CURL_PD));
    }

    #[test]
    fn census_streams_are_deterministic() {
        let cfg = CensusConfig::new(3).dedup(true);
        assert_eq!(
            enumerate_projections(&cfg).unwrap(),
            enumerate_projections(&cfg).unwrap()
        );
    }

    #[test]
    fn census_contains_the_standard_witnesses() {
        let members = enumerate_projections(&CensusConfig::new(4).dedup(true)).unwrap();
        let forms: BTreeSet<Vec<u16>> = members
            .iter()
            .filter(|l| !l.is_trivial_circle())
            .map(|l| canonical_form(l, true).unwrap())
            .collect();
        for n in 1..=4 {
            let t = torus_projection(n).unwrap();
            assert!(
                forms.contains(&canonical_form(&t, true).unwrap()),
                "T(2,{n})"
            );
        }
        assert!(forms.contains(&canon(FIGURE_EIGHT_PD)), "figure-eight shadow");
    }

    #[test]
    fn every_two_crossing_member_has_four_regions() {
        let members = enumerate_projections(&CensusConfig::new(2)).unwrap();
        for l in members.iter().filter(|l| l.crossing_count() == 2) {
            assert_eq!(l.validate().face_count, 4);
        }
    }

    #[test]
    fn census_members_all_validate() {
        for l in enumerate_projections(&CensusConfig::new(3)).unwrap() {
            assert!(l.validate().is_valid, "{l}");
        }
    }

    #[test]
    fn dedup_contains_no_duplicates() {
        let members = enumerate_projections(&CensusConfig::new(3).dedup(true)).unwrap();
        let forms: Vec<Vec<u16>> = members
            .iter()
            .map(|l| canonical_form(l, true).unwrap())
            .collect();
        let set: BTreeSet<_> = forms.iter().cloned().collect();
        assert_eq!(set.len(), forms.len());
    }

    #[test]
    fn knots_only_filters_components() {
        let members = enumerate_projections(&CensusConfig::new(2).knots_only(true)).unwrap();
        assert!(members.iter().all(|l| l.component_count() == 1));
        // the Hopf projection is gone
        assert!(members
            .iter()
            .all(|l| l.is_trivial_circle() || !l.reducible_crossings().unwrap().is_empty()));
    }

    #[test]
    fn theorem_1_1_holds_up_to_three_crossings() {
        let report = verify_theorem1(3).unwrap();
        assert!(report.holds, "{report:?}");
        assert_eq!(report.i1_members.len(), 4);
        assert!(report.cor22_violations.is_empty());
    }

    #[test]
    fn census_rejects_out_of_range_configs() {
        assert!(matches!(
            enumerate_projections(&CensusConfig::new(0)),
            Err(Error::Range(_))
        ));
        assert_eq!(
            enumerate_projections(&CensusConfig::new(9)),
            Err(Error::LimitExceeded { requested: 9, max: 5 })
        );
    }

    #[test]
    fn corpus_suite_is_clean_at_three_crossings() {
        let report = corpus_property_suite(3).unwrap();
        assert_eq!(report.checks_failed, 0, "failures: {:?}", report.failures);
        let trefoil = report
            .records
            .iter()
            .find(|r| {
                canonical_form(&LinkProjection::parse(&r.pd).unwrap(), true).unwrap()
                    == canon(TREFOIL_PD)
            })
            .expect("trefoil in census");
        assert_eq!(trefoil.i, 1);
        assert_eq!(trefoil.ir, Some(1));
        assert_eq!(trefoil.igen, vec![1, 5]);
        let curl = report.records.iter().find(|r| r.c == 1).expect("curl in census");
        assert_eq!(curl.i, 1);
        assert_eq!(curl.igen, vec![1, 3]);
    }

    #[test]
    fn record_json_field_names_are_stable() {
        let l = LinkProjection::parse(CURL_PD).unwrap();
        let record = record_for(&l).unwrap();
        let json = serde_json::to_value(&record).unwrap();
        for key in [
            "pd",
            "c",
            "connected",
            "irreducible",
            "i",
            "ir",
            "igen",
            "gon_census",
            "checks",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}
