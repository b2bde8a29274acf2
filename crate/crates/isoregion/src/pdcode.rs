//! Link projections as combinatorial maps.
//!
//! A projection is stored as its PD code: one counterclockwise 4-tuple of
//! edge labels per crossing. The four edge-ends of a crossing are *darts*
//! `(crossing, slot)` with slots 0..3 in counterclockwise order. Regions are
//! recovered as the orbits of the face successor `d -> rotate(mate(d))`,
//! where `mate` swaps the two ends of an edge and `rotate` steps one slot
//! counterclockwise. A connected projection embeds in the sphere exactly
//! when the orbit count is `c + 2`.
//!
//! The zero-crossing circle cannot be written as a PD code; it is the
//! distinguished constant [`LinkProjection::trivial_circle`]. Its two
//! regions share an edge and count as connected.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the four edge-ends around a crossing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

impl Dart {
    pub fn new(crossing: usize, slot: u8) -> Self {
        debug_assert!(slot < 4);
        Dart { crossing, slot }
    }

    /// Dense index `4 * crossing + slot`.
    pub fn id(self) -> usize {
        4 * self.crossing + self.slot as usize
    }

    pub fn from_id(id: usize) -> Self {
        Dart {
            crossing: id / 4,
            slot: (id % 4) as u8,
        }
    }

    /// One slot counterclockwise at the same crossing.
    pub fn rotated(self) -> Self {
        Dart {
            crossing: self.crossing,
            slot: (self.slot + 1) % 4,
        }
    }

    /// The diagonally opposite slot; a strand entering here exits there.
    pub fn opposite(self) -> Self {
        Dart {
            crossing: self.crossing,
            slot: (self.slot + 2) % 4,
        }
    }
}

impl Serialize for Dart {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.crossing, self.slot).serialize(serializer)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.crossing, self.slot)
    }
}

/// A connected-or-not shadow of a link: crossings with four cyclically
/// ordered edge-ends each. Edge ids are dense `0..2c`; every edge occurs at
/// exactly two darts (enforced at construction).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinkProjection {
    crossings: Vec<[usize; 4]>,
}

impl LinkProjection {
    /// The distinguished zero-crossing circle. It has one edge and two
    /// regions, which are treated as connected.
    pub fn trivial_circle() -> Self {
        LinkProjection { crossings: Vec::new() }
    }

    /// Parse whitespace-separated `X(a,b,c,d)` tokens with positive integer
    /// edge labels. Labels are normalized to a dense range; output labels
    /// are `1..=2c`. Empty input yields the zero-crossing circle.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Ok(Self::trivial_circle());
        }
        let mut rows = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let inner = tok
                .strip_prefix("X(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Syntax(format!("expected X(a,b,c,d), got `{tok}`")))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 4 {
                return Err(Error::Syntax(format!(
                    "expected 4 edge labels in `{tok}`, got {}",
                    parts.len()
                )));
            }
            let mut row = [0u64; 4];
            for (i, p) in parts.iter().enumerate() {
                let v: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::Syntax(format!("bad edge label `{p}` in `{tok}`")))?;
                if v == 0 {
                    return Err(Error::Syntax(format!("edge labels must be positive in `{tok}`")));
                }
                row[i] = v;
            }
            rows.push(row);
        }
        Self::from_crossings(rows)
    }

    /// Build from raw crossing tuples with arbitrary positive labels.
    /// Fails unless every label occurs exactly twice.
    pub fn from_crossings(rows: Vec<[u64; 4]>) -> Result<Self> {
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for row in &rows {
            for &label in row {
                *counts.entry(label).or_insert(0) += 1;
            }
        }
        for (&label, &count) in &counts {
            if count != 2 {
                return Err(Error::UnpairedLabel { label, count });
            }
        }
        let dense: BTreeMap<u64, usize> = counts
            .keys()
            .enumerate()
            .map(|(i, &label)| (label, i))
            .collect();
        let crossings = rows
            .iter()
            .map(|row| {
                let mut out = [0usize; 4];
                for (i, &label) in row.iter().enumerate() {
                    out[i] = dense[&label];
                }
                out
            })
            .collect();
        Ok(LinkProjection { crossings })
    }

    /// Build from a perfect matching on darts: `mate[d]` is the partner
    /// dart id. Edge ids are assigned in order of first appearance.
    pub(crate) fn from_matching(crossing_count: usize, mate: &[usize]) -> Self {
        let n = 4 * crossing_count;
        debug_assert_eq!(mate.len(), n);
        let mut edge_of = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if edge_of[d] == usize::MAX {
                edge_of[d] = next;
                edge_of[mate[d]] = next;
                next += 1;
            }
        }
        let crossings = (0..crossing_count)
            .map(|v| [edge_of[4 * v], edge_of[4 * v + 1], edge_of[4 * v + 2], edge_of[4 * v + 3]])
            .collect();
        LinkProjection { crossings }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of edges: `2c`, or 1 for the zero-crossing circle.
    pub fn edge_count(&self) -> usize {
        if self.is_trivial_circle() {
            1
        } else {
            2 * self.crossings.len()
        }
    }

    pub fn is_trivial_circle(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    /// Edge id at a dart (0-based).
    pub fn edge_at(&self, d: Dart) -> usize {
        self.crossings[d.crossing][d.slot as usize]
    }

    pub fn dart_count(&self) -> usize {
        4 * self.crossings.len()
    }

    /// Dart-to-dart edge involution as a dense table.
    pub fn mate_table(&self) -> Vec<usize> {
        let n = self.dart_count();
        let mut first = vec![usize::MAX; self.crossings.len() * 2];
        let mut mate = vec![usize::MAX; n];
        for d in 0..n {
            let e = self.edge_at(Dart::from_id(d));
            if first[e] == usize::MAX {
                first[e] = d;
            } else {
                mate[first[e]] = d;
                mate[d] = first[e];
            }
        }
        mate
    }

    /// The other end of the edge at `d`.
    pub fn mate(&self, d: Dart) -> Dart {
        Dart::from_id(self.mate_table()[d.id()])
    }

    /// PD text with labels `1..=2c`. The circle prints as the empty string.
    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|row| format!("X({},{},{},{})", row[0] + 1, row[1] + 1, row[2] + 1, row[3] + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Face orbits of the successor permutation. Returns the face id of
    /// every dart and the face count.
    fn face_orbits(&self, mate: &[usize]) -> (Vec<usize>, usize) {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut faces = 0;
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            loop {
                face_of[d] = faces;
                d = Dart::from_id(mate[d]).rotated().id();
                if d == start {
                    break;
                }
            }
            faces += 1;
        }
        (face_of, faces)
    }

    /// True if the underlying 4-valent multigraph is connected.
    pub fn is_connected(&self) -> bool {
        let c = self.crossing_count();
        if c <= 1 {
            return true;
        }
        let mate = self.mate_table();
        let mut seen = vec![false; c];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for s in 0..4 {
                let w = mate[4 * v + s] / 4;
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == c
    }

    /// Structural report: connectivity, face count, sphere check,
    /// reducible crossings. Label pairing is enforced at construction and
    /// always holds here.
    pub fn validate(&self) -> ValidationReport {
        if self.is_trivial_circle() {
            return ValidationReport {
                is_valid: true,
                crossing_count: 0,
                face_count: 2,
                connected: true,
                reducible_crossings: Vec::new(),
                messages: Vec::new(),
            };
        }
        let c = self.crossing_count();
        let mate = self.mate_table();
        let (face_of, faces) = self.face_orbits(&mate);
        let connected = self.is_connected();
        let spherical = faces == c + 2;
        let mut messages = Vec::new();
        if !connected {
            messages.push("disconnected projection".to_string());
        }
        if !spherical {
            messages.push("non-spherical embedding".to_string());
        }
        ValidationReport {
            is_valid: connected && spherical,
            crossing_count: c,
            face_count: faces,
            connected,
            reducible_crossings: reducible_from_faces(c, &face_of),
            messages,
        }
    }

    /// Partition the darts into regions. Region ids follow the smallest
    /// dart of each orbit; corners are listed in successor order.
    pub fn regions(&self) -> Result<RegionSet> {
        let report = self.validate();
        if !report.is_valid {
            return Err(Error::InvalidProjection(report.messages.join("; ")));
        }
        if self.is_trivial_circle() {
            let regions = (0..2)
                .map(|id| Region {
                    id,
                    corners: Vec::new(),
                    boundary_crossings: Vec::new(),
                    gon: 0,
                })
                .collect();
            return Ok(RegionSet { regions, face_of: Vec::new() });
        }
        let mate = self.mate_table();
        let (face_of, faces) = self.face_orbits(&mate);
        let mut regions: Vec<Region> = (0..faces)
            .map(|id| Region {
                id,
                corners: Vec::new(),
                boundary_crossings: Vec::new(),
                gon: 0,
            })
            .collect();
        let mut started = vec![false; faces];
        for start in 0..self.dart_count() {
            let id = face_of[start];
            if started[id] {
                continue;
            }
            started[id] = true;
            let mut d = start;
            loop {
                regions[id].corners.push(Dart::from_id(d));
                regions[id].boundary_crossings.push(d / 4);
                d = Dart::from_id(mate[d]).rotated().id();
                if d == start {
                    break;
                }
            }
        }
        for r in &mut regions {
            r.gon = r.corners.len();
            r.boundary_crossings.sort_unstable();
        }
        Ok(RegionSet { regions, face_of })
    }

    /// Crossings with exactly three distinct regions around them.
    pub fn reducible_crossings(&self) -> Result<Vec<usize>> {
        let report = self.validate();
        if !report.is_valid {
            return Err(Error::InvalidProjection(report.messages.join("; ")));
        }
        Ok(report.reducible_crossings)
    }

    /// Residual of the identity `2*C2 + C3 = 8 + sum_{k>=5} (k-4)*Ck` that
    /// holds for every connected irreducible projection with `c >= 1`.
    pub fn ast_identity_residual(&self) -> Result<i64> {
        let report = self.validate();
        if !report.connected {
            return Err(Error::NotConnected);
        }
        if !report.is_valid {
            return Err(Error::InvalidProjection(report.messages.join("; ")));
        }
        if self.is_trivial_circle() {
            return Err(Error::TrivialProjection);
        }
        if !report.reducible_crossings.is_empty() {
            return Err(Error::NotIrreducible);
        }
        let census = self.regions()?.gon_census();
        let get = |k: usize| *census.counts.get(&k).unwrap_or(&0) as i64;
        let mut residual = 2 * get(2) + get(3) - 8;
        for (&k, &count) in &census.counts {
            if k >= 5 {
                residual -= (k as i64 - 4) * count as i64;
            }
        }
        Ok(residual)
    }

    /// Proper two-coloring of the regions: regions sharing an edge receive
    /// different colors. Exists for every valid projection.
    pub fn checkerboard(&self) -> Result<Vec<Color>> {
        let rs = self.regions()?;
        if self.is_trivial_circle() {
            return Ok(vec![Color::Black, Color::White]);
        }
        let mate = self.mate_table();
        let n = rs.len();
        let mut color: Vec<Option<Color>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(Color::Black);
            let mut stack = vec![start];
            while let Some(r) = stack.pop() {
                let here = color[r].unwrap();
                for d in &rs.regions[r].corners {
                    let other = rs.face_of[mate[d.id()]];
                    match color[other] {
                        None => {
                            color[other] = Some(here.flipped());
                            stack.push(other);
                        }
                        Some(c) if c == here => {
                            return Err(Error::InvalidProjection(
                                "no checkerboard coloring".to_string(),
                            ));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Number of link components (closed strands).
    pub fn component_count(&self) -> usize {
        if self.is_trivial_circle() {
            return 1;
        }
        let mate = self.mate_table();
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut orbits = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = mate[Dart::from_id(d).opposite().id()];
            }
            orbits += 1;
        }
        // one directed orbit per traversal direction
        orbits / 2
    }
}

impl fmt::Display for LinkProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial_circle() {
            write!(f, "(0-crossing circle)")
        } else {
            write!(f, "{}", self.to_pd_string())
        }
    }
}

fn reducible_from_faces(crossing_count: usize, face_of: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for v in 0..crossing_count {
        let mut faces = [face_of[4 * v], face_of[4 * v + 1], face_of[4 * v + 2], face_of[4 * v + 3]];
        faces.sort_unstable();
        let distinct = 1 + faces.windows(2).filter(|w| w[0] != w[1]).count();
        if distinct == 3 {
            out.push(v);
        }
    }
    out
}

/// A face of the embedding.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Region {
    pub id: usize,
    /// Face orbit in successor order, starting from the smallest dart.
    pub corners: Vec<Dart>,
    /// Crossings on the boundary, with multiplicity, sorted.
    pub boundary_crossings: Vec<usize>,
    /// Orbit length; a `gon`-gon has `gon` boundary edges.
    pub gon: usize,
}

impl Region {
    pub fn touches_crossing(&self, v: usize) -> bool {
        self.boundary_crossings.binary_search(&v).is_ok()
    }
}

/// All regions of a projection, ids sorted by smallest dart.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RegionSet {
    pub regions: Vec<Region>,
    #[serde(skip)]
    face_of: Vec<usize>,
}

impl RegionSet {
    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Region> {
        self.regions.iter()
    }

    /// Region id containing the given dart as a corner.
    pub fn region_of(&self, d: Dart) -> usize {
        self.face_of[d.id()]
    }

    pub fn gon_census(&self) -> GonCensus {
        let mut counts = BTreeMap::new();
        for r in &self.regions {
            *counts.entry(r.gon).or_insert(0) += 1;
        }
        GonCensus { counts }
    }
}

/// How many k-gons the projection has, per k.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GonCensus {
    pub counts: BTreeMap<usize, usize>,
}

impl GonCensus {
    /// Total number of regions.
    pub fn region_total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Sum of k * C_k; equals `4c` for connected projections.
    pub fn corner_total(&self) -> usize {
        self.counts.iter().map(|(k, c)| k * c).sum()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ValidationReport {
    pub is_valid: bool,
    pub crossing_count: usize,
    pub face_count: usize,
    pub connected: bool,
    pub reducible_crossings: Vec<usize>,
    pub messages: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flipped(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Which of the two planar reconnections a connected sum uses. The two
/// modes generally yield non-isomorphic projections.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SumMode {
    #[default]
    A,
    B,
}

/// Splice `b` into `a` along the edges `edge_a` and `edge_b` (1-based
/// labels as printed by [`LinkProjection::to_pd_string`]). Both edges are
/// cut and the four ends reconnected crosswise; `mode` picks which of the
/// two reconnections. The result has `c = c_a + c_b` crossings and
/// `(c_a + 2) + (c_b + 2) - 2` regions.
pub fn connected_sum(
    a: &LinkProjection,
    edge_a: usize,
    b: &LinkProjection,
    edge_b: usize,
    mode: SumMode,
) -> Result<LinkProjection> {
    if edge_a == 0 || edge_a > a.edge_count() {
        return Err(Error::InvalidEdge(edge_a));
    }
    if edge_b == 0 || edge_b > b.edge_count() {
        return Err(Error::InvalidEdge(edge_b));
    }
    // splicing the crossing-free circle into an edge re-forms the edge
    if a.is_trivial_circle() {
        return Ok(b.clone());
    }
    if b.is_trivial_circle() {
        return Ok(a.clone());
    }
    let na = a.dart_count();
    let nb = b.dart_count();
    let mate_a = a.mate_table();
    let mate_b = b.mate_table();
    let mut mate = vec![usize::MAX; na + nb];
    for (d, &m) in mate_a.iter().enumerate() {
        mate[d] = m;
    }
    for (d, &m) in mate_b.iter().enumerate() {
        mate[na + d] = na + m;
    }
    let ends = |l: &LinkProjection, edge: usize, offset: usize| {
        let mut out = Vec::with_capacity(2);
        for d in 0..l.dart_count() {
            if l.edge_at(Dart::from_id(d)) == edge - 1 {
                out.push(offset + d);
            }
        }
        (out[0], out[1])
    };
    let (a1, a2) = ends(a, edge_a, 0);
    let (b1, b2) = ends(b, edge_b, na);
    match mode {
        SumMode::A => {
            mate[a1] = b1;
            mate[b1] = a1;
            mate[a2] = b2;
            mate[b2] = a2;
        }
        SumMode::B => {
            mate[a1] = b2;
            mate[b2] = a1;
            mate[a2] = b1;
            mate[b1] = a2;
        }
    }
    Ok(LinkProjection::from_matching(
        a.crossing_count() + b.crossing_count(),
        &mate,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const CURL_PD: &str = "X(1,1,2,2)";
    const HOPF_PD: &str = "X(3,4,2,1) X(1,2,4,3)";

    #[test]
    fn parse_trefoil() {
        let l = LinkProjection::parse(TREFOIL_PD).unwrap();
        assert_eq!(l.crossing_count(), 3);
        assert_eq!(l.edge_count(), 6);
        assert_eq!(l.to_pd_string(), TREFOIL_PD);
    }

    #[test]
    fn parse_normalizes_sparse_labels() {
        let l = LinkProjection::parse("X(10,10,70,70)").unwrap();
        assert_eq!(l.to_pd_string(), "X(1,1,2,2)");
    }

    #[test]
    fn parse_rejects_unpaired_labels() {
        let err = LinkProjection::parse("X(1,2,3,4) X(1,2,3,5)").unwrap_err();
        assert!(matches!(err, Error::UnpairedLabel { .. }));
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(matches!(LinkProjection::parse("X(1,2,3)"), Err(Error::Syntax(_))));
        assert!(matches!(LinkProjection::parse("Y(1,2,3,4)"), Err(Error::Syntax(_))));
        assert!(matches!(LinkProjection::parse("X(0,1,1,0)"), Err(Error::Syntax(_))));
    }

    #[test]
    fn empty_input_is_the_circle() {
        let l = LinkProjection::parse("  ").unwrap();
        assert!(l.is_trivial_circle());
        assert_eq!(l.edge_count(), 1);
        let report = l.validate();
        assert!(report.is_valid);
        assert_eq!(report.face_count, 2);
    }

    #[test]
    fn validate_trefoil() {
        let l = LinkProjection::parse(TREFOIL_PD).unwrap();
        let report = l.validate();
        assert!(report.is_valid);
        assert_eq!(report.crossing_count, 3);
        assert_eq!(report.face_count, 5);
        assert!(report.connected);
        assert!(report.reducible_crossings.is_empty());
    }

    #[test]
    fn validate_curl() {
        let l = LinkProjection::parse(CURL_PD).unwrap();
        let report = l.validate();
        assert!(report.is_valid);
        assert_eq!(report.face_count, 3);
        assert_eq!(report.reducible_crossings, vec![0]);
    }

    #[test]
    fn validate_flags_non_spherical_rotation_system() {
        // one crossing with interleaved edge pairing embeds in the torus
        let l = LinkProjection::parse("X(1,2,1,2)").unwrap();
        let report = l.validate();
        assert!(!report.is_valid);
        assert_eq!(report.face_count, 1);
        assert!(report.messages.iter().any(|m| m.contains("non-spherical")));
        assert!(matches!(l.regions(), Err(Error::InvalidProjection(_))));
    }

    #[test]
    fn validate_flags_disconnected_input() {
        let l = LinkProjection::parse("X(1,1,2,2) X(3,3,4,4)").unwrap();
        let report = l.validate();
        assert!(!report.is_valid);
        assert!(!report.connected);
    }

    #[test]
    fn regions_of_trefoil() {
        let l = LinkProjection::parse(TREFOIL_PD).unwrap();
        let rs = l.regions().unwrap();
        assert_eq!(rs.len(), 5);
        let census = rs.gon_census();
        assert_eq!(census.counts, BTreeMap::from([(2, 3), (3, 2)]));
        assert_eq!(census.corner_total(), 12);
        // face orbits partition the darts
        let mut seen = vec![false; l.dart_count()];
        for r in rs.iter() {
            for d in &r.corners {
                assert!(!seen[d.id()]);
                seen[d.id()] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn regions_of_curl() {
        let l = LinkProjection::parse(CURL_PD).unwrap();
        let rs = l.regions().unwrap();
        assert_eq!(rs.len(), 3);
        let census = rs.gon_census();
        assert_eq!(census.counts, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(census.corner_total(), 4);
    }

    #[test]
    fn successor_orbit_returns_after_gon_steps() {
        let l = LinkProjection::parse(TREFOIL_PD).unwrap();
        let mate = l.mate_table();
        for r in l.regions().unwrap().iter() {
            let start = r.corners[0].id();
            let mut d = start;
            for _ in 0..r.gon {
                d = Dart::from_id(mate[d]).rotated().id();
            }
            assert_eq!(d, start);
        }
    }

    #[test]
    fn checkerboard_is_proper() {
        for pd in [TREFOIL_PD, CURL_PD, HOPF_PD] {
            let l = LinkProjection::parse(pd).unwrap();
            let colors = l.checkerboard().unwrap();
            let rs = l.regions().unwrap();
            let mate = l.mate_table();
            for d in 0..l.dart_count() {
                let u = rs.region_of(Dart::from_id(d));
                let v = rs.region_of(Dart::from_id(mate[d]));
                assert_ne!(colors[u], colors[v], "edge {pd} dart {d}");
            }
        }
    }

    #[test]
    fn checkerboard_of_circle() {
        let colors = LinkProjection::trivial_circle().checkerboard().unwrap();
        assert_ne!(colors[0], colors[1]);
    }

    #[test]
    fn ast_residual_is_zero_for_trefoil() {
        let l = LinkProjection::parse(TREFOIL_PD).unwrap();
        assert_eq!(l.ast_identity_residual().unwrap(), 0);
    }

    #[test]
    fn ast_residual_rejects_reducible_and_trivial() {
        let curl = LinkProjection::parse(CURL_PD).unwrap();
        assert_eq!(curl.ast_identity_residual(), Err(Error::NotIrreducible));
        let circle = LinkProjection::trivial_circle();
        assert_eq!(circle.ast_identity_residual(), Err(Error::TrivialProjection));
    }

    #[test]
    fn component_counts() {
        assert_eq!(LinkProjection::parse(TREFOIL_PD).unwrap().component_count(), 1);
        assert_eq!(LinkProjection::parse(CURL_PD).unwrap().component_count(), 1);
        assert_eq!(LinkProjection::parse(HOPF_PD).unwrap().component_count(), 2);
        assert_eq!(LinkProjection::trivial_circle().component_count(), 1);
    }

    #[test]
    fn connected_sum_of_curls() {
        let curl = LinkProjection::parse(CURL_PD).unwrap();
        let sum = connected_sum(&curl, 1, &curl, 1, SumMode::A).unwrap();
        let report = sum.validate();
        assert!(report.is_valid);
        assert_eq!(report.crossing_count, 2);
        assert_eq!(report.face_count, 4);
        assert_eq!(report.reducible_crossings, vec![0, 1]);
    }

    #[test]
    fn connected_sum_modes_differ() {
        let curl = LinkProjection::parse(CURL_PD).unwrap();
        let a = connected_sum(&curl, 1, &curl, 1, SumMode::A).unwrap();
        let b = connected_sum(&curl, 1, &curl, 1, SumMode::B).unwrap();
        assert!(b.validate().is_valid);
        let census = |l: &LinkProjection| l.regions().unwrap().gon_census().counts;
        assert_ne!(census(&a), census(&b));
    }

    #[test]
    fn connected_sum_of_trefoils() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        let sum = connected_sum(&t, 2, &t, 5, SumMode::A).unwrap();
        let report = sum.validate();
        assert!(report.is_valid);
        assert_eq!(report.crossing_count, 6);
        assert_eq!(sum.regions().unwrap().len(), 8);
    }

    #[test]
    fn connected_sum_with_circle_is_identity() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        let circle = LinkProjection::trivial_circle();
        assert_eq!(connected_sum(&t, 3, &circle, 1, SumMode::A).unwrap(), t);
        assert_eq!(connected_sum(&circle, 1, &t, 3, SumMode::B).unwrap(), t);
    }

    #[test]
    fn connected_sum_rejects_bad_edges() {
        let t = LinkProjection::parse(TREFOIL_PD).unwrap();
        assert_eq!(
            connected_sum(&t, 7, &t, 1, SumMode::A),
            Err(Error::InvalidEdge(7))
        );
        assert_eq!(
            connected_sum(&t, 0, &t, 1, SumMode::A),
            Err(Error::InvalidEdge(0))
        );
    }

    #[test]
    fn json_shapes_are_stable() {
        let l = LinkProjection::parse(CURL_PD).unwrap();
        let rs = l.regions().unwrap();
        let json = serde_json::to_value(&rs).unwrap();
        assert_eq!(json["regions"][0]["id"], 0);
        assert_eq!(json["regions"][0]["corners"][0], serde_json::json!([0, 0]));
        let report = serde_json::to_value(l.validate()).unwrap();
        assert_eq!(report["is_valid"], true);
        assert_eq!(report["face_count"], 3);
    }
}
