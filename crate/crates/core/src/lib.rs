//! Exact-arithmetic toolkit for convex hull thrackles.
//!
//! A *convex hull thrackle* over a planar point set `P` is a family of
//! pairwise-distinct convex hulls of subsets of `P` such that
//!
//! 1. no hull of the family contains another,
//! 2. every two hulls intersect, and
//! 3. any three hulls meet in at most a single point, which must belong
//!    to `P`.
//!
//! Everything in this crate is decided with arbitrary-precision rational
//! arithmetic — there are no floating-point predicates and no epsilon
//! thresholds, so every verdict is exact. The crate provides:
//!
//! * [`geom`] — canonical convex regions and exact primitives
//!   (orientation, hulls, region intersection, angular tests);
//! * [`model`] — point sets, hull families, variant flags, and the
//!   three-condition verifier;
//! * [`constructions`] — reference generators for notable families,
//!   including one with `n + 1` hulls on `n` points;
//! * [`diagram`] — weighted boundary diagrams, wedges, leftie analysis,
//!   and extraction of an underlying family of segments;
//! * [`search`] — exhaustive branch-and-bound search for maximum
//!   families on small point sets;
//! * [`format`] / [`render`] — a plain-text instance format and an SVG
//!   renderer;
//! * [`cli`] — the `thrackle` command-line interface.

pub mod cli;
pub mod constructions;
pub mod diagram;
pub mod format;
pub mod geom;
pub mod model;
pub mod render;
pub mod search;

pub use geom::{
    convex_hull_extremes, intersect_regions, left_of_vector, orientation, point_in_region,
    regions_intersect, ConvexRegion, GeomError, Point, PointLocation, Rational,
};
pub use model::{
    check_general_position, pairwise_intersection_class, verify, HullSet, Instance, ModelError,
    PointSet, VariantFlags, VerificationReport,
};
