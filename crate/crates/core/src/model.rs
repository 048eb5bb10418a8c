//! Point sets, hull families, variant flags, and the verifier for the
//! three thrackle conditions.

use crate::geom::{
    convex_hull_extremes, intersect_regions, orientation, point_in_region, ConvexRegion, Point,
    PointLocation,
};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Errors from building point sets, hull sets, or instances.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("duplicate point {0} in point set")]
    DuplicatePoint(Point),
    #[error("hull references point index {index}, but the set has {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a hull must reference at least one point")]
    EmptyHull,
}

/// A finite set of distinct points in the rational plane. Indices into
/// the set are stable: they follow the construction order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Builds a point set, rejecting duplicates.
    pub fn new(points: Vec<Point>) -> Result<Self, ModelError> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(ModelError::DuplicatePoint(p.clone()));
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Index of an exact point value, if present.
    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Hull of the whole set (empty region for an empty set).
    pub fn hull(&self) -> ConvexRegion {
        if self.points.is_empty() {
            ConvexRegion::empty()
        } else {
            convex_hull_extremes(&self.points).expect("distinct by construction")
        }
    }

    /// Is every point of the set extreme (a vertex of the overall hull)?
    /// Trivially true for fewer than three points.
    pub fn in_convex_position(&self) -> bool {
        self.len() <= 2 || self.hull().vertices().len() == self.len()
    }
}

/// A canonical member of a hull family: the sorted indices of the points
/// that are extreme in the hull of the chosen subset. Two subsets with
/// the same hull canonicalize to the same `HullSet`, so structural
/// equality on `HullSet` is equality of hulls.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HullSet {
    indices: Vec<usize>,
}

impl HullSet {
    /// Canonicalizes a list of point indices: validates them, removes
    /// repeats, drops every point that is not a vertex of the subset's
    /// hull, and sorts the survivors.
    pub fn canonical(indices: &[usize], points: &PointSet) -> Result<Self, ModelError> {
        Ok(Self::canonical_with_region(indices, points)?.0)
    }

    /// As [`HullSet::canonical`], also returning the hull region.
    pub fn canonical_with_region(
        indices: &[usize],
        points: &PointSet,
    ) -> Result<(Self, ConvexRegion), ModelError> {
        let mut sorted: Vec<usize> = Vec::new();
        for &i in indices {
            if i >= points.len() {
                return Err(ModelError::IndexOutOfRange { index: i, n: points.len() });
            }
            sorted.push(i);
        }
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(ModelError::EmptyHull);
        }
        let pts: Vec<Point> = sorted.iter().map(|&i| points.get(i).clone()).collect();
        let region = convex_hull_extremes(&pts).expect("non-empty and distinct");
        let extreme: Vec<usize> = sorted
            .into_iter()
            .filter(|&i| region.vertices().contains(points.get(i)))
            .collect();
        Ok((HullSet { indices: extreme }, region))
    }

    /// Sorted indices of the extreme points.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

impl fmt::Display for HullSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Relaxations of the three thrackle conditions and of the general-
/// position requirement on the point set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VariantFlags {
    /// Permit one hull of the family to contain another.
    pub allow_containment: bool,
    /// Permit three hulls to share more than a single point of `P`.
    pub allow_triple_interior: bool,
    /// Permit repeated hulls; implies `allow_containment`, since equal
    /// hulls contain each other.
    pub allow_multiset: bool,
    /// Skip the check that no three points of `P` are collinear.
    pub allow_collinear: bool,
}

impl VariantFlags {
    /// Enforces the implication `allow_multiset => allow_containment`.
    pub fn normalized(mut self) -> Self {
        if self.allow_multiset {
            self.allow_containment = true;
        }
        self
    }
}

/// A hull family over a point set, stored canonically: every member is
/// reduced to its extreme indices and the family is sorted
/// lexicographically. Flags are normalized on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    points: PointSet,
    family: Vec<HullSet>,
    regions: Vec<ConvexRegion>,
    flags: VariantFlags,
}

impl Instance {
    /// Builds an instance from raw index lists, canonicalizing each hull
    /// and sorting the family.
    pub fn new(
        points: PointSet,
        family: Vec<Vec<usize>>,
        flags: VariantFlags,
    ) -> Result<Self, ModelError> {
        let mut members: Vec<(HullSet, ConvexRegion)> = family
            .iter()
            .map(|h| HullSet::canonical_with_region(h, &points))
            .collect::<Result<_, _>>()?;
        members.sort_by(|a, b| a.0.cmp(&b.0));
        let (family, regions) = members.into_iter().unzip();
        Ok(Instance { points, family, regions, flags: flags.normalized() })
    }

    /// Builds an instance from already-canonical hull sets (they are
    /// re-canonicalized defensively).
    pub fn from_hull_sets(
        points: PointSet,
        family: &[HullSet],
        flags: VariantFlags,
    ) -> Result<Self, ModelError> {
        let raw = family.iter().map(|h| h.indices().to_vec()).collect();
        Instance::new(points, raw, flags)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn m(&self) -> usize {
        self.family.len()
    }

    pub fn point_set(&self) -> &PointSet {
        &self.points
    }

    pub fn family(&self) -> &[HullSet] {
        &self.family
    }

    pub fn hull(&self, i: usize) -> &HullSet {
        &self.family[i]
    }

    /// The convex region of family member `i`.
    pub fn region(&self, i: usize) -> &ConvexRegion {
        &self.regions[i]
    }

    pub fn flags(&self) -> VariantFlags {
        self.flags
    }

    /// The same instance under different (normalized) flags.
    pub fn with_flags(mut self, flags: VariantFlags) -> Self {
        self.flags = flags.normalized();
        self
    }
}

/// A triple of hulls whose common intersection is illegal, together with
/// the offending region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleViolation {
    /// Indices of the three hulls, increasing.
    pub hulls: (usize, usize, usize),
    /// Their common intersection: either at least one-dimensional, or a
    /// single point that is not a member of the point set.
    pub region: ConvexRegion,
}

/// Outcome of checking an instance against the thrackle conditions.
/// `valid` holds exactly when every violation list is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    pub valid: bool,
    /// Distinctness/containment failures: pairs `(i, j)` with `i < j`
    /// where the hulls are equal (unless multisets are allowed) or one
    /// contains the other (unless containment is allowed).
    pub condition1_violations: Vec<(usize, usize)>,
    /// Pairs of hulls with empty intersection.
    pub condition2_violations: Vec<(usize, usize)>,
    /// Triples of hulls meeting in more than a point of the point set.
    pub condition3_violations: Vec<TripleViolation>,
    /// Collinear triples of point indices (empty when collinear points
    /// are allowed).
    pub general_position_violations: Vec<(usize, usize, usize)>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}, n={} m={}",
            if self.valid { "valid" } else { "invalid" },
            self.n,
            self.m
        )?;
        for &(i, j) in &self.condition1_violations {
            writeln!(f, "condition1 violation: hulls ({i}, {j})")?;
        }
        for &(i, j) in &self.condition2_violations {
            writeln!(f, "condition2 violation: hulls ({i}, {j})")?;
        }
        for v in &self.condition3_violations {
            let (i, j, k) = v.hulls;
            match v.region.dimension() {
                0 => writeln!(
                    f,
                    "condition3 violation: hulls ({i}, {j}, {k}) meet at non-member point {}",
                    v.region.vertices()[0]
                )?,
                d => writeln!(
                    f,
                    "condition3 violation: hulls ({i}, {j}, {k}) meet in a region of dimension {d}"
                )?,
            }
        }
        for &(i, j, k) in &self.general_position_violations {
            writeln!(f, "general position violation: points ({i}, {j}, {k})")?;
        }
        Ok(())
    }
}

/// All collinear triples of the point set, as index triples `i < j < k`.
pub fn check_general_position(points: &PointSet) -> Vec<(usize, usize, usize)> {
    let n = points.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if orientation(points.get(i), points.get(j), points.get(k)) == 0 {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Is region `inner` contained in region `outer`? For convex regions it
/// suffices that every vertex of `inner` lies in `outer`.
pub fn region_contains(outer: &ConvexRegion, inner: &ConvexRegion) -> bool {
    if inner.is_empty() {
        return true;
    }
    if outer.is_empty() {
        return false;
    }
    inner
        .vertices()
        .iter()
        .all(|v| !matches!(point_in_region(v, outer), Ok(PointLocation::Outside)))
}

/// Checks an instance against the three thrackle conditions (as relaxed
/// by its flags) and, unless collinear points are allowed, against
/// general position of the point set.
pub fn verify(inst: &Instance) -> VerificationReport {
    let flags = inst.flags();
    let m = inst.m();

    let general_position_violations = if flags.allow_collinear {
        Vec::new()
    } else {
        check_general_position(inst.point_set())
    };

    let mut condition1_violations = Vec::new();
    let mut condition2_violations = Vec::new();
    let mut pair_regions: Vec<Option<ConvexRegion>> = vec![None; m * m];

    for i in 0..m {
        for j in (i + 1)..m {
            let (hi, hj) = (inst.hull(i), inst.hull(j));
            let (ri, rj) = (inst.region(i), inst.region(j));
            if hi == hj {
                if !flags.allow_multiset {
                    condition1_violations.push((i, j));
                }
            } else if !flags.allow_containment
                && (region_contains(ri, rj) || region_contains(rj, ri))
            {
                condition1_violations.push((i, j));
            }
            let r = intersect_regions(ri, rj);
            if r.is_empty() {
                condition2_violations.push((i, j));
            }
            pair_regions[i * m + j] = Some(r);
        }
    }

    let mut condition3_violations = Vec::new();
    if !flags.allow_triple_interior {
        for i in 0..m {
            for j in (i + 1)..m {
                let rij = pair_regions[i * m + j].as_ref().expect("filled above");
                if rij.is_empty() {
                    continue;
                }
                for k in (j + 1)..m {
                    let r = intersect_regions(rij, inst.region(k));
                    let bad = match r.dimension() {
                        -1 => false,
                        0 => inst.point_set().index_of(&r.vertices()[0]).is_none(),
                        _ => true,
                    };
                    if bad {
                        condition3_violations.push(TripleViolation { hulls: (i, j, k), region: r });
                    }
                }
            }
        }
    }

    let valid = condition1_violations.is_empty()
        && condition2_violations.is_empty()
        && condition3_violations.is_empty()
        && general_position_violations.is_empty();

    VerificationReport {
        n: inst.n(),
        m,
        valid,
        condition1_violations,
        condition2_violations,
        condition3_violations,
        general_position_violations,
    }
}

/// The exact intersection of family members `i` and `j` (`i == j` gives
/// the member's own region). Panics on out-of-range indices.
pub fn pairwise_intersection_class(inst: &Instance, i: usize, j: usize) -> ConvexRegion {
    if i == j {
        inst.region(i).clone()
    } else {
        intersect_regions(inst.region(i), inst.region(j))
    }
}
