//! Boundary diagrams, wedges, and leftie analysis.
//!
//! The *boundary diagram* of a hull family places a weight on every
//! maximal boundary segment: a two-point hull puts weight 3 on its own
//! segment, and a hull with three or more vertices puts weight 1 on each
//! of its boundary edges. Coinciding contributions merge into one
//! weighted segment.
//!
//! A segment `p -> a` is a *leftie from `p`* when some hull of the
//! family lies entirely to the left of the vector `p -> a` (with `p`
//! itself counting as left by convention, so a hull with vertex `p` can
//! witness through its other vertices). The analyses here evaluate the
//! per-vertex weight of non-leftie segments and two structural facts:
//! no segment is a leftie from both endpoints, and two wedges at a
//! common apex that share only the apex cannot both have non-leftie
//! left sides.

use crate::geom::{
    cross_vec, dot_vec, intersect_regions, left_of_vector, regions_intersect, vec_from,
    ConvexRegion, Rational,
};
use crate::model::{verify, Instance, VariantFlags};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Errors from diagram construction and analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("analysis requires an instance that passes verification under its flags")]
    InvalidInstance,
    #[error("hull {0} is a single point; boundary analysis needs hulls of at least two points")]
    SingletonHull(usize),
    #[error("point {point} is not a vertex of hull {hull}")]
    NotAVertex { point: usize, hull: usize },
    #[error("point index {index} out of range ({n} points)")]
    PointOutOfRange { index: usize, n: usize },
    #[error("hull index {index} out of range ({m} hulls)")]
    HullOutOfRange { index: usize, m: usize },
    #[error("the two point indices must differ")]
    CoincidentPoints,
    #[error("segment extraction requires every point to be extreme (convex position)")]
    NotConvexPosition,
    #[error("segment extraction requires exactly as many hulls as points (n={n}, m={m})")]
    WrongFamilySize { n: usize, m: usize },
}

/// A maximal boundary segment of the diagram with its merged weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSegment {
    /// Point indices of the endpoints, increasing.
    pub endpoints: (usize, usize),
    /// `3·(two-point contributors) + (larger contributors)`.
    pub weight: u32,
    /// Indices of the hulls contributing this segment, increasing.
    pub contributors: Vec<usize>,
}

impl WeightedSegment {
    /// Does the segment carry both a two-point hull and a boundary edge
    /// of a larger hull? (Possible only when containment is allowed;
    /// such segments are flagged in reports.)
    pub fn is_mixed(&self, inst: &Instance) -> bool {
        let mut has_segment_hull = false;
        let mut has_larger_hull = false;
        for &h in &self.contributors {
            if inst.hull(h).len() == 2 {
                has_segment_hull = true;
            } else {
                has_larger_hull = true;
            }
        }
        has_segment_hull && has_larger_hull
    }
}

/// The weighted boundary segments of a hull family, ordered by endpoint
/// pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryDiagram {
    segments: Vec<WeightedSegment>,
}

impl BoundaryDiagram {
    /// Builds the diagram after checking that the instance verifies
    /// under its own flags.
    pub fn build(inst: &Instance) -> Result<Self, DiagramError> {
        if !verify(inst).valid {
            return Err(DiagramError::InvalidInstance);
        }
        Self::build_unchecked(inst)
    }

    /// Builds the diagram without verifying the instance first — useful
    /// for diagnosing invalid instances. Still rejects singleton hulls,
    /// which have no boundary segments.
    pub fn build_unchecked(inst: &Instance) -> Result<Self, DiagramError> {
        let mut acc: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (idx, hull) in inst.family().iter().enumerate() {
            match hull.len() {
                0 | 1 => return Err(DiagramError::SingletonHull(idx)),
                2 => {
                    let (u, v) = (hull.indices()[0], hull.indices()[1]);
                    acc.entry((u, v)).or_default().push(idx);
                }
                _ => {
                    let ids: Vec<usize> = inst
                        .region(idx)
                        .vertices()
                        .iter()
                        .map(|p| {
                            inst.point_set()
                                .index_of(p)
                                .expect("hull vertices are members of the point set")
                        })
                        .collect();
                    for i in 0..ids.len() {
                        let (u, v) = (ids[i], ids[(i + 1) % ids.len()]);
                        acc.entry((u.min(v), u.max(v))).or_default().push(idx);
                    }
                }
            }
        }
        let segments = acc
            .into_iter()
            .map(|(endpoints, contributors)| {
                let weight = contributors
                    .iter()
                    .map(|&h| if inst.hull(h).len() == 2 { 3 } else { 1 })
                    .sum();
                WeightedSegment { endpoints, weight, contributors }
            })
            .collect();
        Ok(BoundaryDiagram { segments })
    }

    /// Segments ordered by endpoint pair.
    pub fn segments(&self) -> &[WeightedSegment] {
        &self.segments
    }

    pub fn total_weight(&self) -> u64 {
        self.segments.iter().map(|s| u64::from(s.weight)).sum()
    }

    pub fn max_weight(&self) -> u32 {
        self.segments.iter().map(|s| s.weight).max().unwrap_or(0)
    }

    pub fn segment_between(&self, u: usize, v: usize) -> Option<&WeightedSegment> {
        let key = (u.min(v), u.max(v));
        self.segments.iter().find(|s| s.endpoints == key)
    }

    /// Segments incident to point `p`.
    pub fn incident_to(&self, p: usize) -> impl Iterator<Item = &WeightedSegment> {
        self.segments
            .iter()
            .filter(move |s| s.endpoints.0 == p || s.endpoints.1 == p)
    }
}

/// The angular wedge of a hull at one of its vertices: the cone at the
/// apex spanned by the directions to the two boundary neighbors. For a
/// two-point hull both ends coincide with the other endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wedge {
    pub apex: usize,
    /// Counter-clockwise successor of the apex on the hull boundary.
    pub right_end: usize,
    /// Counter-clockwise predecessor; the segment apex–left_end is the
    /// wedge's left side.
    pub left_end: usize,
    /// The hull the wedge belongs to.
    pub hull: usize,
}

/// The wedge of hull `hull` at vertex `p`. Errors if `p` is not an
/// extreme point of that hull.
pub fn wedge_at(inst: &Instance, hull: usize, p: usize) -> Result<Wedge, DiagramError> {
    if hull >= inst.m() {
        return Err(DiagramError::HullOutOfRange { index: hull, m: inst.m() });
    }
    if p >= inst.n() {
        return Err(DiagramError::PointOutOfRange { index: p, n: inst.n() });
    }
    let h = inst.hull(hull);
    if !h.contains(p) {
        return Err(DiagramError::NotAVertex { point: p, hull });
    }
    match h.len() {
        0 | 1 => Err(DiagramError::SingletonHull(hull)),
        2 => {
            let other = h.indices().iter().copied().find(|&i| i != p).expect("two points");
            Ok(Wedge { apex: p, right_end: other, left_end: other, hull })
        }
        _ => {
            let vs = inst.region(hull).vertices();
            let apex_point = inst.point_set().get(p);
            let pos = vs
                .iter()
                .position(|v| v == apex_point)
                .expect("extreme index maps to a region vertex");
            let succ = &vs[(pos + 1) % vs.len()];
            let pred = &vs[(pos + vs.len() - 1) % vs.len()];
            let right_end = inst.point_set().index_of(succ).expect("vertex is a member");
            let left_end = inst.point_set().index_of(pred).expect("vertex is a member");
            Ok(Wedge { apex: p, right_end, left_end, hull })
        }
    }
}

/// Is segment `p -> a` a leftie from `p`? Returns the first witness: a
/// hull index whose every vertex other than `p` itself lies left of the
/// vector `p -> a` (strictly left, or directly behind `p`).
pub fn is_leftie(inst: &Instance, p: usize, a: usize) -> Result<Option<usize>, DiagramError> {
    let n = inst.n();
    if p >= n {
        return Err(DiagramError::PointOutOfRange { index: p, n });
    }
    if a >= n {
        return Err(DiagramError::PointOutOfRange { index: a, n });
    }
    if p == a {
        return Err(DiagramError::CoincidentPoints);
    }
    let apex = inst.point_set().get(p);
    let toward = inst.point_set().get(a);
    'hulls: for idx in 0..inst.m() {
        for v in inst.region(idx).vertices() {
            if v == apex {
                continue; // the apex counts as left by convention
            }
            if !matches!(left_of_vector(apex, toward, v), Ok(true)) {
                continue 'hulls;
            }
        }
        return Ok(Some(idx));
    }
    Ok(None)
}

/// Sum of the weights of diagram segments at `p` that are not lefties
/// from `p`. Panics on an out-of-range index.
pub fn nonleftie_weight_at(inst: &Instance, diagram: &BoundaryDiagram, p: usize) -> u32 {
    assert!(p < inst.n(), "point index {p} out of range");
    diagram
        .incident_to(p)
        .filter(|s| {
            let other = if s.endpoints.0 == p { s.endpoints.1 } else { s.endpoints.0 };
            is_leftie(inst, p, other)
                .expect("diagram endpoints are distinct in-range indices")
                .is_none()
        })
        .map(|s| s.weight)
        .sum()
}

/// Direction vectors spanning a wedge: to the right end and to the left
/// end.
fn wedge_dirs(inst: &Instance, w: &Wedge) -> ((Rational, Rational), (Rational, Rational)) {
    let apex = inst.point_set().get(w.apex);
    (
        vec_from(apex, inst.point_set().get(w.right_end)),
        vec_from(apex, inst.point_set().get(w.left_end)),
    )
}

/// Is direction `d` in the closed counter-clockwise arc from `s` to `e`?
/// The arc is either a single ray (`s`, `e` parallel, a two-point hull)
/// or spans strictly less than a half turn (a strictly convex interior
/// angle).
fn dir_in_closed_arc(
    d: &(Rational, Rational),
    s: &(Rational, Rational),
    e: &(Rational, Rational),
) -> bool {
    use num_traits::{Signed, Zero};
    let span = cross_vec(s, e);
    if span.is_zero() {
        debug_assert!(dot_vec(s, e).is_positive(), "arc ends must not be opposite");
        cross_vec(s, d).is_zero() && dot_vec(s, d).is_positive()
    } else {
        debug_assert!(span.is_positive(), "wedge arcs wind counter-clockwise");
        !cross_vec(s, d).is_negative() && !cross_vec(d, e).is_negative()
    }
}

/// Do two wedges at a common apex intersect only in the apex? True when
/// their closed angular arcs are disjoint. (Each arc is at most a half
/// turn, so two arcs meet iff one contains an endpoint of the other.)
pub fn wedges_share_only_apex(inst: &Instance, w1: &Wedge, w2: &Wedge) -> bool {
    debug_assert_eq!(w1.apex, w2.apex);
    let (s1, e1) = wedge_dirs(inst, w1);
    let (s2, e2) = wedge_dirs(inst, w2);
    !(dir_in_closed_arc(&s2, &s1, &e1)
        || dir_in_closed_arc(&e2, &s1, &e1)
        || dir_in_closed_arc(&s1, &s2, &e2)
        || dir_in_closed_arc(&e1, &s2, &e2))
}

/// Violations of the two structural leftie facts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeftieLemmaReport {
    /// Diagram segments that are lefties from both endpoints. Always
    /// empty for valid instances.
    pub leftie_from_both: Vec<(usize, usize)>,
    /// Triples `(apex, hull_a, hull_b)` of two wedges at a common apex
    /// sharing only the apex whose left sides are both non-lefties.
    /// Always empty for valid instances.
    pub nonleftie_wedge_pairs: Vec<(usize, usize, usize)>,
}

impl LeftieLemmaReport {
    pub fn is_clean(&self) -> bool {
        self.leftie_from_both.is_empty() && self.nonleftie_wedge_pairs.is_empty()
    }
}

/// Scans a diagram for segments leftie from both endpoints and for
/// apex-sharing wedge pairs (meeting only at the apex) whose left sides
/// are both non-lefties.
pub fn check_leftie_lemmas(inst: &Instance, diagram: &BoundaryDiagram) -> LeftieLemmaReport {
    let mut report = LeftieLemmaReport::default();
    for seg in diagram.segments() {
        let (u, v) = seg.endpoints;
        let from_u = is_leftie(inst, u, v).expect("valid segment endpoints").is_some();
        let from_v = is_leftie(inst, v, u).expect("valid segment endpoints").is_some();
        if from_u && from_v {
            report.leftie_from_both.push((u, v));
        }
    }
    for p in 0..inst.n() {
        let wedges: Vec<Wedge> = (0..inst.m())
            .filter(|&h| inst.hull(h).len() >= 2 && inst.hull(h).contains(p))
            .map(|h| wedge_at(inst, h, p).expect("p is a vertex of h"))
            .collect();
        for i in 0..wedges.len() {
            for j in (i + 1)..wedges.len() {
                if !wedges_share_only_apex(inst, &wedges[i], &wedges[j]) {
                    continue;
                }
                let left_i = is_leftie(inst, p, wedges[i].left_end)
                    .expect("wedge ends differ from apex")
                    .is_some();
                let left_j = is_leftie(inst, p, wedges[j].left_end)
                    .expect("wedge ends differ from apex")
                    .is_some();
                if !left_i && !left_j {
                    report.nonleftie_wedge_pairs.push((p, wedges[i].hull, wedges[j].hull));
                }
            }
        }
    }
    report
}

/// Finds an injection assigning each hull a two-point subset of its
/// indices such that the chosen segments form a valid family of their
/// own (pairwise intersecting, meeting only at member points). Requires
/// a verify-valid instance on points in convex position with exactly as
/// many hulls as points. Returns `None` only after exhausting every
/// combination.
pub fn extract_underlying_linear(
    inst: &Instance,
) -> Result<Option<BTreeMap<usize, (usize, usize)>>, DiagramError> {
    if !verify(inst).valid {
        return Err(DiagramError::InvalidInstance);
    }
    if !inst.point_set().in_convex_position() {
        return Err(DiagramError::NotConvexPosition);
    }
    if inst.m() != inst.n() {
        return Err(DiagramError::WrongFamilySize { n: inst.n(), m: inst.m() });
    }

    let candidates: Vec<Vec<(usize, usize)>> = inst
        .family()
        .iter()
        .map(|h| {
            let ids = h.indices();
            let mut pairs = Vec::new();
            for x in 0..ids.len() {
                for y in (x + 1)..ids.len() {
                    pairs.push((ids[x], ids[y]));
                }
            }
            pairs
        })
        .collect();

    struct State<'a> {
        inst: &'a Instance,
        candidates: &'a [Vec<(usize, usize)>],
        chosen: Vec<(usize, usize)>,
        chosen_regions: Vec<ConvexRegion>,
        // pair_regions[j][i] for i < j: intersection of chosen i and j.
        pair_regions: Vec<Vec<ConvexRegion>>,
        used: BTreeSet<(usize, usize)>,
    }

    impl State<'_> {
        fn segment_region(&self, (a, b): (usize, usize)) -> ConvexRegion {
            ConvexRegion::segment(
                self.inst.point_set().get(a).clone(),
                self.inst.point_set().get(b).clone(),
            )
        }

        fn admissible(&self, pair: (usize, usize), region: &ConvexRegion) -> bool {
            // Must meet every previously chosen segment...
            for (prev, prev_region) in self.chosen.iter().zip(&self.chosen_regions) {
                let share_endpoint = prev.0 == pair.0
                    || prev.0 == pair.1
                    || prev.1 == pair.0
                    || prev.1 == pair.1;
                if !share_endpoint && !regions_intersect(prev_region, region) {
                    return false;
                }
            }
            // ...and every triple must meet in at most a member point.
            for j in 0..self.chosen.len() {
                for i in 0..j {
                    let r = intersect_regions(&self.pair_regions[j][i], region);
                    match r.dimension() {
                        -1 => {}
                        0 => {
                            if self.inst.point_set().index_of(&r.vertices()[0]).is_none() {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
            true
        }

        fn solve(&mut self, level: usize) -> bool {
            if level == self.candidates.len() {
                // Certify the complete selection as a family of its own.
                let family: Vec<Vec<usize>> =
                    self.chosen.iter().map(|&(a, b)| vec![a, b]).collect();
                let seg_inst = Instance::new(
                    self.inst.point_set().clone(),
                    family,
                    VariantFlags::default(),
                )
                .expect("indices are valid");
                return verify(&seg_inst).valid;
            }
            let level_candidates: &[(usize, usize)] = &self.candidates[level];
            for &pair in level_candidates {
                if self.used.contains(&pair) {
                    continue;
                }
                let region = self.segment_region(pair);
                if !self.admissible(pair, &region) {
                    continue;
                }
                let row: Vec<ConvexRegion> = self
                    .chosen_regions
                    .iter()
                    .map(|prev| intersect_regions(prev, &region))
                    .collect();
                self.chosen.push(pair);
                self.chosen_regions.push(region);
                self.pair_regions.push(row);
                self.used.insert(pair);
                if self.solve(level + 1) {
                    return true;
                }
                self.used.remove(&pair);
                self.pair_regions.pop();
                self.chosen_regions.pop();
                self.chosen.pop();
            }
            false
        }
    }

    let mut state = State {
        inst,
        candidates: &candidates,
        chosen: Vec::new(),
        chosen_regions: Vec::new(),
        pair_regions: Vec::new(),
        used: BTreeSet::new(),
    };
    if state.solve(0) {
        Ok(Some(state.chosen.iter().copied().enumerate().collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        gen_counterexample, gen_double_star, gen_gossett, gen_odd_circle, gen_star_neighbors,
        parabola_points,
    };
    use crate::geom::Point;
    use crate::model::PointSet;

    fn ps(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::ints(x, y)).collect()).unwrap()
    }

    fn inst(points: &PointSet, family: &[&[usize]], flags: VariantFlags) -> Instance {
        Instance::new(points.clone(), family.iter().map(|h| h.to_vec()).collect(), flags)
            .unwrap()
    }

    #[test]
    fn all_segment_family_weights() {
        let star = gen_star_neighbors(5).unwrap();
        let d = BoundaryDiagram::build(&star).unwrap();
        assert_eq!(d.segments().len(), 5);
        assert!(d.segments().iter().all(|s| s.weight == 3));
        assert_eq!(d.total_weight(), 15);
    }

    #[test]
    fn single_triangle_diagram_and_weights() {
        let points = ps(&[(0, 0), (4, 0), (0, 4)]);
        let tri = inst(&points, &[&[0, 1, 2]], VariantFlags::default());
        let d = BoundaryDiagram::build(&tri).unwrap();
        assert_eq!(d.segments().len(), 3);
        assert!(d.segments().iter().all(|s| s.weight == 1));
        // With no other hull to witness, every side is non-leftie from
        // each of its endpoints: weight 2 at every vertex.
        for p in 0..3 {
            assert_eq!(nonleftie_weight_at(&tri, &d, p), 2);
        }
    }

    #[test]
    fn diagram_requires_verified_instance_and_no_singletons() {
        let points = ps(&[(0, 0), (1, 0), (10, 1), (11, 3)]);
        let bad = inst(&points, &[&[0, 1], &[2, 3]], VariantFlags::default());
        assert_eq!(BoundaryDiagram::build(&bad), Err(DiagramError::InvalidInstance));
        // ...but the unchecked builder still produces the segments.
        let d = BoundaryDiagram::build_unchecked(&bad).unwrap();
        assert_eq!(d.segments().len(), 2);
        let single = inst(&points, &[&[0]], VariantFlags::default());
        assert_eq!(
            BoundaryDiagram::build_unchecked(&single),
            Err(DiagramError::SingletonHull(0))
        );
    }

    #[test]
    fn merged_weights_under_containment_and_multiset() {
        // Star segments coinciding with triangle edges merge to 3 + 1.
        let g = gen_gossett(7).unwrap();
        let d = BoundaryDiagram::build(&g).unwrap();
        let mixed = d.segment_between(0, 1).unwrap();
        assert_eq!(mixed.weight, 4);
        assert!(mixed.is_mixed(&g));
        assert_eq!(mixed.contributors.len(), 2);
        // An edge of a triangle away from the star center has weight 1.
        let lone = d.segment_between(1, 2).unwrap();
        assert_eq!(lone.weight, 1);
        assert!(!lone.is_mixed(&g));
        // Doubled segments weigh 6.
        let ds = gen_double_star(5).unwrap();
        let dd = BoundaryDiagram::build(&ds).unwrap();
        assert!(dd.segments().iter().all(|s| s.weight == 6));
    }

    #[test]
    fn family_segment_weight_exactly_three_others_at_most_two() {
        for inst in [
            gen_star_neighbors(7).unwrap(),
            gen_odd_circle(7).unwrap(),
            gen_counterexample(8).unwrap(),
        ] {
            let d = BoundaryDiagram::build(&inst).unwrap();
            for seg in d.segments() {
                let is_family_member = inst
                    .family()
                    .iter()
                    .any(|h| h.indices() == [seg.endpoints.0, seg.endpoints.1].as_slice());
                if is_family_member {
                    assert_eq!(seg.weight, 3, "family segment {:?}", seg.endpoints);
                } else {
                    assert!(seg.weight <= 2, "boundary segment {:?}", seg.endpoints);
                }
            }
        }
    }

    #[test]
    fn wedge_at_triangle_and_segment() {
        let points = ps(&[(0, 0), (2, 0), (0, 2)]);
        let tri = inst(&points, &[&[0, 1, 2]], VariantFlags::default());
        let w = wedge_at(&tri, 0, 0).unwrap();
        assert_eq!((w.apex, w.right_end, w.left_end), (0, 1, 2));
        // The left end is left of the vector to the right end.
        assert_eq!(
            left_of_vector(
                tri.point_set().get(w.apex),
                tri.point_set().get(w.right_end),
                tri.point_set().get(w.left_end)
            ),
            Ok(true)
        );
        let seg = inst(&points, &[&[0, 1]], VariantFlags::default());
        let w = wedge_at(&seg, 0, 1).unwrap();
        assert_eq!((w.right_end, w.left_end), (0, 0));
        assert_eq!(
            wedge_at(&tri, 0, 5),
            Err(DiagramError::PointOutOfRange { index: 5, n: 3 })
        );
        let quad = inst(
            &ps(&[(0, 0), (2, 0), (0, 2), (5, 5)]),
            &[&[0, 1, 2]],
            VariantFlags::default(),
        );
        assert_eq!(
            wedge_at(&quad, 0, 3),
            Err(DiagramError::NotAVertex { point: 3, hull: 0 })
        );
    }

    #[test]
    fn wedge_left_right_consistency_across_corpus() {
        for inst in [gen_counterexample(7).unwrap(), gen_gossett(6).unwrap()] {
            for (h, hull) in inst.family().iter().enumerate() {
                for &p in hull.indices() {
                    let w = wedge_at(&inst, h, p).unwrap();
                    if w.right_end != w.left_end {
                        assert_eq!(
                            left_of_vector(
                                inst.point_set().get(w.apex),
                                inst.point_set().get(w.right_end),
                                inst.point_set().get(w.left_end)
                            ),
                            Ok(true)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn counterexample_wedges_tile_the_angle_at_the_center() {
        let inst = gen_counterexample(6).unwrap();
        // The five triangles at q′ (point 0) form a fan: chaining each
        // wedge's left end to the next wedge's right end walks a single
        // cycle through all the other points.
        let wedges: Vec<Wedge> = (0..inst.m())
            .filter(|&h| inst.hull(h).contains(0))
            .map(|h| wedge_at(&inst, h, 0).unwrap())
            .collect();
        assert_eq!(wedges.len(), 5);
        let next: BTreeMap<usize, usize> =
            wedges.iter().map(|w| (w.right_end, w.left_end)).collect();
        assert_eq!(next.len(), 5, "each point starts exactly one wedge");
        let mut seen = BTreeSet::new();
        let mut cur = *next.keys().next().unwrap();
        for _ in 0..5 {
            assert!(seen.insert(cur));
            cur = next[&cur];
        }
        assert!(seen.contains(&cur), "the wedge fan closes into one cycle");
    }

    #[test]
    fn leftie_detection_with_forced_coordinates() {
        // Hull {2,3} lies strictly left of 0 -> 1; hull {4,5} strictly
        // right.
        let points = ps(&[(0, 0), (4, 0), (1, 2), (3, 2), (1, -2), (3, -2)]);
        let i = inst(
            &points,
            &[&[0, 1], &[2, 3], &[4, 5]],
            VariantFlags { allow_collinear: true, ..Default::default() },
        );
        assert_eq!(is_leftie(&i, 0, 1).unwrap(), Some(1));
        assert_eq!(is_leftie(&i, 1, 0).unwrap(), Some(2));
        assert_eq!(is_leftie(&i, 0, 0), Err(DiagramError::CoincidentPoints));
        assert_eq!(
            is_leftie(&i, 0, 9),
            Err(DiagramError::PointOutOfRange { index: 9, n: 6 })
        );
    }

    #[test]
    fn leftie_in_star_depends_on_the_side() {
        let star = gen_star_neighbors(6).unwrap();
        // Everything lies left of p0 -> p1 (toward the rest of the
        // parabola), so a witness exists...
        assert!(is_leftie(&star, 0, 1).unwrap().is_some());
        // ...but right of p0 -> p5 every hull has a blocking vertex.
        assert_eq!(is_leftie(&star, 0, 5).unwrap(), None);
    }

    #[test]
    fn leftie_lemmas_hold_on_valid_instances() {
        for inst in [
            gen_star_neighbors(5).unwrap(),
            gen_odd_circle(7).unwrap(),
            gen_counterexample(6).unwrap(),
        ] {
            let d = BoundaryDiagram::build(&inst).unwrap();
            let report = check_leftie_lemmas(&inst, &d);
            assert!(report.is_clean(), "{report:?}");
        }
    }

    #[test]
    fn leftie_from_both_detected_on_disjoint_witnesses() {
        // Invalid on purpose: hulls {2,3} (above) and {4,5} (below) are
        // disjoint, so segment 0-1 is a leftie from both endpoints.
        let points = ps(&[(0, 0), (4, 0), (1, 2), (3, 3), (1, -2), (3, -3)]);
        let bad = inst(&points, &[&[0, 1], &[2, 3], &[4, 5]], VariantFlags::default());
        assert!(!verify(&bad).valid);
        let d = BoundaryDiagram::build_unchecked(&bad).unwrap();
        let report = check_leftie_lemmas(&bad, &d);
        assert!(report.leftie_from_both.contains(&(0, 1)), "{report:?}");
    }

    #[test]
    fn wedge_arc_disjointness() {
        // Two triangles at a common apex, sectors disjoint.
        let points = ps(&[(0, 0), (4, 1), (4, 3), (-4, 1), (-4, 3), (0, 5)]);
        let i = inst(
            &points,
            &[&[0, 1, 2], &[0, 3, 4], &[0, 2, 5]],
            VariantFlags { allow_collinear: true, ..Default::default() },
        );
        // The family is stored sorted, so find each hull by content.
        let idx = |want: &[usize]| {
            i.family().iter().position(|h| h.indices() == want).expect("hull present")
        };
        let w_right = wedge_at(&i, idx(&[0, 1, 2]), 0).unwrap();
        let w_left = wedge_at(&i, idx(&[0, 3, 4]), 0).unwrap();
        let w_mid = wedge_at(&i, idx(&[0, 2, 5]), 0).unwrap();
        assert!(wedges_share_only_apex(&i, &w_right, &w_left));
        // w_mid shares the ray to point 2 with w_right.
        assert!(!wedges_share_only_apex(&i, &w_right, &w_mid));
    }

    #[test]
    fn extraction_is_identity_on_all_segment_families() {
        for inst in [gen_star_neighbors(6).unwrap(), gen_odd_circle(7).unwrap()] {
            let map = extract_underlying_linear(&inst).unwrap().expect("extraction succeeds");
            assert_eq!(map.len(), inst.m());
            for (h, hull) in inst.family().iter().enumerate() {
                assert_eq!(map[&h], (hull.indices()[0], hull.indices()[1]));
            }
        }
    }

    #[test]
    fn extraction_precondition_errors() {
        // Invalid instance.
        let points = ps(&[(0, 0), (1, 0), (10, 1), (11, 3)]);
        let bad = inst(&points, &[&[0, 1], &[2, 3]], VariantFlags::default());
        assert_eq!(extract_underlying_linear(&bad), Err(DiagramError::InvalidInstance));
        // Valid but not in convex position: a counterexample family
        // trimmed to m = n still contains the interior point q′.
        let cx = gen_counterexample(6).unwrap();
        let trimmed = Instance::new(
            cx.point_set().clone(),
            cx.family().iter().take(6).map(|h| h.indices().to_vec()).collect(),
            VariantFlags::default(),
        )
        .unwrap();
        assert!(verify(&trimmed).valid);
        assert_eq!(
            extract_underlying_linear(&trimmed),
            Err(DiagramError::NotConvexPosition)
        );
        // Valid and convex but m ≠ n.
        let star = gen_star_neighbors(5).unwrap();
        let short = Instance::new(
            star.point_set().clone(),
            star.family().iter().take(4).map(|h| h.indices().to_vec()).collect(),
            VariantFlags::default(),
        )
        .unwrap();
        assert_eq!(
            extract_underlying_linear(&short),
            Err(DiagramError::WrongFamilySize { n: 5, m: 4 })
        );
    }

    #[test]
    fn nonleftie_weight_bound_spot_checks() {
        let star = gen_star_neighbors(5).unwrap();
        let d = BoundaryDiagram::build(&star).unwrap();
        for p in 0..star.n() {
            assert!(nonleftie_weight_at(&star, &d, p) <= 6, "vertex {p}");
        }
        let counter = gen_counterexample(6).unwrap();
        let d = BoundaryDiagram::build(&counter).unwrap();
        for p in 0..counter.n() {
            assert!(nonleftie_weight_at(&counter, &d, p) <= 6, "vertex {p}");
        }
        // Parabola points with an empty family: no diagram to speak of.
        let empty = Instance::new(
            parabola_points(3).unwrap(),
            Vec::new(),
            VariantFlags::default(),
        )
        .unwrap();
        let d = BoundaryDiagram::build(&empty).unwrap();
        assert_eq!(d.total_weight(), 0);
        assert_eq!(nonleftie_weight_at(&empty, &d, 0), 0);
    }
}
