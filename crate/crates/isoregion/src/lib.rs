//! Region-level invariants of link projections.
//!
//! A link projection is a 4-valent shadow of a link on the sphere, given as
//! a PD code. Two regions are *connected* when they share a crossing; a set
//! of pairwise disconnected regions is *isolated*. This crate computes:
//!
//! - regions, gon censuses, checkerboard colorings, and reducible crossings
//!   of a projection ([`pdcode`]);
//! - the region-connect graph, the isolate-region number `I(L)`, the
//!   independent region number `IR(L)`, and the I-generating function that
//!   counts isolated sets by size ([`regiongraph`]);
//! - warping-degree labelings of oriented knot diagrams, alternating and
//!   almost-alternating predicates, and upper bounds for the welded
//!   unknotting number ([`warping`]);
//! - the standard torus projections T(2,n) with closed-form counts and
//!   their recurrence ([`torus`]);
//! - an exhaustive census of small projections with property suites over
//!   it ([`census`]), and a one-shot verification runner ([`verify`]).
//!
//! ```
//! use isoregion::{LinkProjection, RegionGraph};
//!
//! let trefoil = LinkProjection::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")?;
//! assert_eq!(trefoil.regions()?.len(), 5);
//!
//! let graph = RegionGraph::from_projection(&trefoil)?;
//! assert_eq!(graph.isolate_number(), 1);
//! assert_eq!(graph.igen_polynomial().coeffs(), &[1, 5]);
//! # Ok::<(), isoregion::Error>(())
//! ```
//!
//! Runnable walkthroughs live in `examples/`; the `isoregion` binary
//! exposes every operation as a subcommand.

pub mod census;
pub mod error;
pub mod pdcode;
pub mod regiongraph;
pub mod torus;
pub mod verify;
pub mod warping;

pub use error::{Error, Result};
pub use pdcode::{
    connected_sum, Color, Dart, GonCensus, LinkProjection, Region, RegionSet, SumMode,
    ValidationReport,
};
pub use regiongraph::{
    a2_bounds_check, independent_region_number, split_sum_graph, A2Bounds, IGenPolynomial,
    IsolatedSet, RegionGraph,
};
pub use torus::{
    fn_at_one, nonadjacent_count, recurrence_check, torus_igen_closed_form, torus_projection,
    RecurrenceCheck,
};
pub use warping::{
    projection_warping_degree, wd_exception_search, wd_exception_search_limited, welded_bounds,
    OrientedDiagram, Orientation, WarpingLabeling, WarpingStats, WeldedBounds,
    DEFAULT_SEARCH_LIMIT,
};
pub use census::{
    canonical_form, canonical_projection, corpus_property_suite, enumerate_projections,
    verify_theorem1, CensusConfig, CensusReport, ProjectionRecord, Theorem1Report,
    MAX_SUPPORTED_CROSSINGS,
};
