//! Shared first-principles oracles used by several integration suites.
//!
//! Everything here recomputes answers independently of the library's
//! algorithms: membership in a convex hull is decided by scanning all
//! triangles (Carathéodory), extreme points by removing one point at a
//! time, segment crossings by solving the 2x2 linear system, and maximum
//! families by a flat depth-first enumeration that re-verifies whole
//! instances at every step.
#![allow(dead_code)]

use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;
use thrackle_core::geom::{
    convex_hull_extremes, intersect_regions, orientation, rat, regions_intersect, ConvexRegion,
    Point, Rational,
};
use thrackle_core::model::{verify, Instance, PointSet, VariantFlags};
use thrackle_core::search::{max_thrackle, SearchLimits, SearchResult};

pub fn pt(x: i64, y: i64) -> Point {
    Point::ints(x, y)
}

/// Oracle: is `p` on segment `uv` (inclusive)? Orientation plus
/// coordinate-interval checks only.
pub fn on_segment_oracle(p: &Point, u: &Point, v: &Point) -> bool {
    if orientation(u, v, p) != 0 {
        return false;
    }
    let (lo_x, hi_x) = if u.x <= v.x { (&u.x, &v.x) } else { (&v.x, &u.x) };
    let (lo_y, hi_y) = if u.y <= v.y { (&u.y, &v.y) } else { (&v.y, &u.y) };
    *lo_x <= p.x && p.x <= *hi_x && *lo_y <= p.y && p.y <= *hi_y
}

/// Oracle: is `p` inside (or on the boundary of) triangle `abc`?
pub fn in_triangle_oracle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    let d1 = orientation(a, b, p);
    let d2 = orientation(b, c, p);
    let d3 = orientation(c, a, p);
    let has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    let has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    !(has_neg && has_pos)
}

/// Oracle: is `p` in the convex hull of `set`? By Carathéodory's
/// theorem it suffices to test every triangle (and, for degenerate
/// sets, every segment and point).
pub fn in_hull_oracle(p: &Point, set: &[Point]) -> bool {
    if set.iter().any(|q| q == p) {
        return true;
    }
    for i in 0..set.len() {
        for j in (i + 1)..set.len() {
            if on_segment_oracle(p, &set[i], &set[j]) {
                return true;
            }
            for k in (j + 1)..set.len() {
                if orientation(&set[i], &set[j], &set[k]) != 0
                    && in_triangle_oracle(p, &set[i], &set[j], &set[k])
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Oracle: the extreme points of `set` are exactly those not in the
/// hull of the others.
pub fn extreme_points_oracle(set: &[Point]) -> Vec<Point> {
    set.iter()
        .filter(|p| {
            let others: Vec<Point> = set.iter().filter(|q| q != p).cloned().collect();
            !in_hull_oracle(p, &others)
        })
        .cloned()
        .collect()
}

/// Oracle: the proper crossing of segments `a1a2` and `b1b2` solved as a
/// 2x2 linear system (Cramer's rule), ignoring parallel pairs.
pub fn crossing_oracle(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> Option<Point> {
    let dax = &a2.x - &a1.x;
    let day = &a2.y - &a1.y;
    let dbx = &b2.x - &b1.x;
    let dby = &b2.y - &b1.y;
    let det = &dax * &dby - &day * &dbx;
    if det.is_zero() {
        return None;
    }
    let rx = &b1.x - &a1.x;
    let ry = &b1.y - &a1.y;
    let s = (&rx * &dby - &ry * &dbx) / &det;
    let t = (&rx * &day - &ry * &dax) / &det;
    let zero = rat(0);
    let one = rat(1);
    if s < zero || s > one || t < zero || t > one {
        return None;
    }
    Some(Point::new(&a1.x + &dax * &s, &a1.y + &day * &s))
}

pub fn edges_of(region: &ConvexRegion) -> Vec<(Point, Point)> {
    let vs = region.vertices();
    match vs.len() {
        0 | 1 => Vec::new(),
        2 => vec![(vs[0].clone(), vs[1].clone())],
        _ => (0..vs.len()).map(|i| (vs[i].clone(), vs[(i + 1) % vs.len()].clone())).collect(),
    }
}

/// Oracle: the intersection of two convex regions is the hull of (a)
/// vertices of one inside the other and (b) pairwise edge crossings.
pub fn intersection_oracle(a: &ConvexRegion, b: &ConvexRegion) -> ConvexRegion {
    let mut candidates: Vec<Point> = Vec::new();
    for v in a.vertices() {
        if in_hull_oracle(v, b.vertices()) {
            candidates.push(v.clone());
        }
    }
    for v in b.vertices() {
        if in_hull_oracle(v, a.vertices()) {
            candidates.push(v.clone());
        }
    }
    for (a1, a2) in edges_of(a) {
        for (b1, b2) in edges_of(b) {
            if let Some(p) = crossing_oracle(&a1, &a2, &b1, &b2) {
                candidates.push(p);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    if candidates.is_empty() {
        ConvexRegion::empty()
    } else {
        convex_hull_extremes(&candidates).expect("distinct candidates")
    }
}

/// Asserts that both the constructive intersection and the fast
/// disjointness predicate agree with the vertex-and-crossing oracle.
pub fn assert_matches_oracle(a: &ConvexRegion, b: &ConvexRegion, label: &str) {
    let fast = regions_intersect(a, b);
    let constructed = intersect_regions(a, b);
    let oracle = intersection_oracle(a, b);
    assert_eq!(constructed, oracle, "{label}: constructive vs oracle\n a={a:?}\n b={b:?}");
    assert_eq!(fast, !oracle.is_empty(), "{label}: fast predicate vs oracle\n a={a:?}\n b={b:?}");
}

/// Small random region with denominators 1 or 2 so coincidences are
/// common while arithmetic stays exact.
pub fn random_region(rng: &mut ChaCha8Rng) -> ConvexRegion {
    let size = 1 + (rng.next_u64() % 5) as usize;
    let mut pts = Vec::with_capacity(size);
    for _ in 0..size {
        let num_x = (rng.next_u64() % 33) as i64 - 16;
        let num_y = (rng.next_u64() % 33) as i64 - 16;
        let den = 1 + (rng.next_u64() % 2) as i64;
        pts.push(Point::new(
            Rational::new(num_x.into(), den.into()),
            Rational::new(num_y.into(), den.into()),
        ));
    }
    pts.sort();
    pts.dedup();
    convex_hull_extremes(&pts).unwrap()
}

/// Oracle: grows families hull by hull over *raw* subsets (canonical or
/// not — `Instance::new` canonicalizes, and a non-canonical subset just
/// duplicates the equivalent canonical branch), keeping a partial family
/// only if a full re-verification of the instance built from it
/// succeeds. Validity is subset-closed, so no valid family is missed.
pub fn flat_max_family(points: &PointSet, flags: VariantFlags) -> usize {
    let n = points.len();
    assert!(n <= 5, "flat enumeration is exponential");
    let mut pool: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let ids: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if ids.len() < 2 {
            continue;
        }
        pool.push(ids);
    }
    pool.sort();
    let copies = if flags.normalized().allow_multiset { 2 } else { 1 };
    let mut expanded: Vec<Vec<usize>> = Vec::new();
    for ids in pool {
        for _ in 0..copies {
            expanded.push(ids.clone());
        }
    }

    fn grow(
        points: &PointSet,
        flags: VariantFlags,
        pool: &[Vec<usize>],
        chosen: &mut Vec<Vec<usize>>,
        from: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        for next in from..pool.len() {
            chosen.push(pool[next].clone());
            let inst =
                Instance::new(points.clone(), chosen.clone(), flags).expect("indices are valid");
            if verify(&inst).valid {
                grow(points, flags, pool, chosen, next + 1, best);
            }
            chosen.pop();
        }
    }

    let mut best = if points.is_empty() { 0 } else { 1 };
    let mut chosen = Vec::new();
    grow(points, flags, &expanded, &mut chosen, 0, &mut best);
    best
}

/// Asserts the branch-and-bound maximum equals the flat-enumeration
/// maximum and that the returned witness re-verifies.
pub fn assert_search_matches_flat(points: &PointSet, flags: VariantFlags, label: &str) {
    let flat = flat_max_family(points, flags);
    let bnb: SearchResult = max_thrackle(points, flags, SearchLimits::default()).unwrap();
    assert_eq!(bnb.max_size, flat, "{label}");
    if !bnb.witness.is_empty() && bnb.witness[0].len() >= 2 {
        let inst = bnb.witness_instance(points, flags).unwrap();
        assert!(verify(&inst).valid, "{label}: witness verifies");
    }
}
