//! Exact planar geometry over arbitrary-precision rationals.
//!
//! All predicates are decided with exact integer arithmetic; no floating
//! point is used anywhere. Convex regions are kept in a canonical form so
//! that structural equality coincides with geometric equality:
//!
//! * the empty region has no vertices;
//! * a single point has one vertex;
//! * a segment stores its two endpoints with the lexicographically
//!   smaller one first;
//! * a polygon stores its extreme vertices in counter-clockwise order
//!   starting from the lexicographically smallest, with no three
//!   consecutive vertices collinear.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Exact rational scalar used for all coordinates and predicates.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(num.into(), den.into())
}

/// Nearest `f64` to an exact rational (for rendering and plotting only;
/// all predicates stay exact).
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(0.0);
        let d = r.denom().to_f64().unwrap_or(1.0);
        n / d
    })
}

/// Errors from geometric primitives.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    /// A hull of an empty point list was requested.
    #[error("cannot take the hull of an empty point list")]
    EmptyInput,
    /// The same point appeared twice in a hull input.
    #[error("duplicate point {0} in hull input")]
    DuplicatePoint(Point),
    /// An angular test was asked about a direction from a point to itself.
    #[error("direction endpoint coincides with the apex")]
    ApexCoincidence,
    /// A point-location query was made against the empty region.
    #[error("cannot locate a point relative to the empty region")]
    EmptyRegion,
}

/// A point of the rational plane. Ordering is lexicographic by `(x, y)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Signed area times two of the triangle `a, b, c`:
/// `(b - a) × (c - a)`. Positive iff the triple turns counter-clockwise.
pub fn cross_value(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Orientation of the triple `a, b, c`: `1` for a counter-clockwise turn,
/// `-1` for clockwise, `0` for collinear (including repeated points).
pub fn orientation(a: &Point, b: &Point, c: &Point) -> i32 {
    let v = cross_value(a, b, c);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Dot product `(u - o) · (v - o)`.
fn dot_value(o: &Point, u: &Point, v: &Point) -> Rational {
    (&u.x - &o.x) * (&v.x - &o.x) + (&u.y - &o.y) * (&v.y - &o.y)
}

/// Cross product of two free vectors.
pub(crate) fn cross_vec(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Dot product of two free vectors.
pub(crate) fn dot_vec(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// Vector from `a` to `b`.
pub(crate) fn vec_from(a: &Point, b: &Point) -> (Rational, Rational) {
    (&b.x - &a.x, &b.y - &a.y)
}

/// Where a point lies relative to a convex region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointLocation {
    /// Not in the region.
    Outside,
    /// On the relative boundary: a vertex, a segment point, or a point on
    /// a polygon edge.
    Boundary,
    /// In the open interior of a two-dimensional region.
    Interior,
}

/// A canonical closed convex region: empty, a point, a segment, or a
/// convex polygon. Structural equality is geometric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConvexRegion {
    vertices: Vec<Point>,
}

impl ConvexRegion {
    /// The empty region (dimension `-1`).
    pub fn empty() -> Self {
        ConvexRegion { vertices: Vec::new() }
    }

    /// A single point (dimension `0`).
    pub fn point(p: Point) -> Self {
        ConvexRegion { vertices: vec![p] }
    }

    /// The segment between `a` and `b`; collapses to a point if they are
    /// equal. Endpoints are stored in lexicographic order.
    pub fn segment(a: Point, b: Point) -> Self {
        if a == b {
            ConvexRegion::point(a)
        } else if a < b {
            ConvexRegion { vertices: vec![a, b] }
        } else {
            ConvexRegion { vertices: vec![b, a] }
        }
    }

    /// Canonical vertex list: empty, `[point]`, `[min, max]` for a
    /// segment, or counter-clockwise extreme vertices starting at the
    /// lexicographically smallest.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `-1` for empty, `0` for a point, `1` for a segment, `2` for a
    /// polygon.
    pub fn dimension(&self) -> i32 {
        match self.vertices.len() {
            0 => -1,
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Debug for ConvexRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.vertices.len() {
            0 => write!(f, "Region::Empty"),
            1 => write!(f, "Region::Point{}", self.vertices[0]),
            2 => write!(f, "Region::Segment[{}, {}]", self.vertices[0], self.vertices[1]),
            _ => {
                write!(f, "Region::Polygon[")?;
                for (i, v) in self.vertices.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Convex hull of a list of distinct points, keeping only extreme points
/// (no three consecutive hull vertices are collinear). Errors on an empty
/// list or on repeated points.
pub fn convex_hull_extremes(points: &[Point]) -> Result<ConvexRegion, GeomError> {
    if points.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    let mut pts = points.to_vec();
    pts.sort();
    for w in pts.windows(2) {
        if w[0] == w[1] {
            return Err(GeomError::DuplicatePoint(w[0].clone()));
        }
    }
    Ok(hull_of_sorted_distinct(pts))
}

/// Monotone-chain hull of a lexicographically sorted list of distinct
/// points. Pops on non-positive turns, so collinear midpoints are
/// discarded and the result is strictly convex.
fn hull_of_sorted_distinct(pts: Vec<Point>) -> ConvexRegion {
    if pts.len() == 1 {
        return ConvexRegion { vertices: pts };
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in pts.iter() {
        while lower.len() >= 2
            && !cross_value(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross_value(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexRegion { vertices: lower }
}

/// Hull of an arbitrary point list that may contain repeats (e.g. the
/// output of a clipping pass). Never fails: repeats are merged first.
fn hull_of_loose_points(mut pts: Vec<Point>) -> ConvexRegion {
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        ConvexRegion::empty()
    } else {
        hull_of_sorted_distinct(pts)
    }
}

/// Is `p` collinear with `u..v` and within the closed segment span?
fn on_segment(p: &Point, u: &Point, v: &Point) -> bool {
    orientation(u, v, p) == 0
        && !dot_value(u, p, v).is_negative()
        && !dot_value(v, p, u).is_negative()
}

/// Locate `p` relative to a non-empty canonical region.
pub fn point_in_region(p: &Point, region: &ConvexRegion) -> Result<PointLocation, GeomError> {
    let vs = region.vertices();
    match vs.len() {
        0 => Err(GeomError::EmptyRegion),
        1 => Ok(if *p == vs[0] {
            PointLocation::Boundary
        } else {
            PointLocation::Outside
        }),
        2 => Ok(if on_segment(p, &vs[0], &vs[1]) {
            PointLocation::Boundary
        } else {
            PointLocation::Outside
        }),
        n => {
            let mut on_edge = false;
            for i in 0..n {
                let j = (i + 1) % n;
                match orientation(&vs[i], &vs[j], p) {
                    -1 => return Ok(PointLocation::Outside),
                    0 => on_edge = true,
                    _ => {}
                }
            }
            Ok(if on_edge {
                PointLocation::Boundary
            } else {
                PointLocation::Interior
            })
        }
    }
}

/// Intersection of two closed segments, exact in every degenerate case:
/// empty, a single point (crossing or touching), or an overlap segment
/// when the inputs are collinear.
fn segment_x_segment(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> ConvexRegion {
    let c1 = cross_value(b1, b2, a1);
    let c2 = cross_value(b1, b2, a2);
    let c3 = cross_value(a1, a2, b1);
    let c4 = cross_value(a1, a2, b2);

    if c3.is_zero() && c4.is_zero() {
        // Collinear: lexicographic order is a consistent linear order
        // along the common line, so intersect the two intervals.
        let (alo, ahi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let (blo, bhi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let lo = if alo >= blo { alo } else { blo };
        let hi = if ahi <= bhi { ahi } else { bhi };
        return match lo.cmp(hi) {
            std::cmp::Ordering::Greater => ConvexRegion::empty(),
            std::cmp::Ordering::Equal => ConvexRegion::point(lo.clone()),
            std::cmp::Ordering::Less => ConvexRegion::segment(lo.clone(), hi.clone()),
        };
    }

    // Not collinear: the intersection is at most one point.
    if c1.is_zero() && on_segment(a1, b1, b2) {
        return ConvexRegion::point(a1.clone());
    }
    if c2.is_zero() && on_segment(a2, b1, b2) {
        return ConvexRegion::point(a2.clone());
    }
    if c3.is_zero() && on_segment(b1, a1, a2) {
        return ConvexRegion::point(b1.clone());
    }
    if c4.is_zero() && on_segment(b2, a1, a2) {
        return ConvexRegion::point(b2.clone());
    }
    let opposite_a = (c1.is_positive() && c2.is_negative()) || (c1.is_negative() && c2.is_positive());
    let opposite_b = (c3.is_positive() && c4.is_negative()) || (c3.is_negative() && c4.is_positive());
    if opposite_a && opposite_b {
        // Proper crossing: a1 + t (a2 - a1) with t = c1 / (c1 - c2).
        let t = &c1 / (&c1 - &c2);
        let x = &a1.x + &t * (&a2.x - &a1.x);
        let y = &a1.y + &t * (&a2.y - &a1.y);
        return ConvexRegion::point(Point::new(x, y));
    }
    ConvexRegion::empty()
}

/// Clip the segment `u..v` to a convex polygon by shrinking the parameter
/// interval `[t0, t1]` of `u + t (v - u)` at every polygon edge.
fn clip_segment_by_polygon(u: &Point, v: &Point, poly: &[Point]) -> ConvexRegion {
    let mut t0: Rational = Rational::zero();
    let mut t1: Rational = Rational::one();
    let n = poly.len();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let cu = cross_value(a, b, u);
        let cv = cross_value(a, b, v);
        if cu.is_negative() && cv.is_negative() {
            return ConvexRegion::empty();
        }
        if cu.is_negative() || cv.is_negative() {
            // The segment crosses the edge line at t = cu / (cu - cv).
            let t = &cu / (&cu - &cv);
            if cu.is_negative() {
                if t > t0 {
                    t0 = t;
                }
            } else if t < t1 {
                t1 = t;
            }
        }
    }
    if t0 > t1 {
        return ConvexRegion::empty();
    }
    let at = |t: &Rational| {
        Point::new(&u.x + t * (&v.x - &u.x), &u.y + t * (&v.y - &u.y))
    };
    let p0 = at(&t0);
    let p1 = at(&t1);
    ConvexRegion::segment(p0, p1)
}

/// One Sutherland–Hodgman pass: keep the part of a convex cycle on the
/// closed left side of the directed line `a -> b`, inserting the exact
/// crossing point whenever consecutive vertices straddle the line.
fn clip_cycle_halfplane(cycle: &[Point], a: &Point, b: &Point) -> Vec<Point> {
    let n = cycle.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let cs: Vec<Rational> = cycle.iter().map(|p| cross_value(a, b, p)).collect();
    for i in 0..n {
        let j = (i + 1) % n;
        if !cs[i].is_negative() {
            out.push(cycle[i].clone());
        }
        let straddles = (cs[i].is_positive() && cs[j].is_negative())
            || (cs[i].is_negative() && cs[j].is_positive());
        if straddles {
            let t = &cs[i] / (&cs[i] - &cs[j]);
            let (p, q) = (&cycle[i], &cycle[j]);
            out.push(Point::new(&p.x + &t * (&q.x - &p.x), &p.y + &t * (&q.y - &p.y)));
        }
    }
    out
}

/// Exact intersection of two canonical convex regions. The result is
/// again canonical: empty, a point, a segment, or a convex polygon.
pub fn intersect_regions(a: &ConvexRegion, b: &ConvexRegion) -> ConvexRegion {
    let (hi, lo) = if a.dimension() >= b.dimension() { (a, b) } else { (b, a) };
    match lo.dimension() {
        -1 => ConvexRegion::empty(),
        0 => {
            let p = &lo.vertices()[0];
            match point_in_region(p, hi) {
                Ok(PointLocation::Outside) => ConvexRegion::empty(),
                Ok(_) => ConvexRegion::point(p.clone()),
                Err(_) => ConvexRegion::empty(),
            }
        }
        1 => {
            let (u, v) = (&lo.vertices()[0], &lo.vertices()[1]);
            if hi.dimension() == 1 {
                segment_x_segment(u, v, &hi.vertices()[0], &hi.vertices()[1])
            } else {
                clip_segment_by_polygon(u, v, hi.vertices())
            }
        }
        _ => {
            let mut cur: Vec<Point> = hi.vertices().to_vec();
            let bs = lo.vertices();
            let n = bs.len();
            for i in 0..n {
                cur = clip_cycle_halfplane(&cur, &bs[i], &bs[(i + 1) % n]);
                if cur.is_empty() {
                    return ConvexRegion::empty();
                }
            }
            hull_of_loose_points(cur)
        }
    }
}

/// All directed boundary edges of a one- or two-dimensional region: both
/// orientations for a segment, the counter-clockwise cycle for a polygon.
fn directed_edges(r: &ConvexRegion) -> Vec<(&Point, &Point)> {
    let vs = r.vertices();
    match vs.len() {
        2 => vec![(&vs[0], &vs[1]), (&vs[1], &vs[0])],
        n if n >= 3 => (0..n).map(|i| (&vs[i], &vs[(i + 1) % n])).collect(),
        _ => Vec::new(),
    }
}

/// Do two regions intersect? Equivalent to
/// `!intersect_regions(a, b).is_empty()` but avoids constructing the
/// intersection: for two fat regions a separating-edge test suffices,
/// since two disjoint convex polygons are separated by a line supporting
/// an edge of one of them.
pub fn regions_intersect(a: &ConvexRegion, b: &ConvexRegion) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let (hi, lo) = if a.dimension() >= b.dimension() { (a, b) } else { (b, a) };
    match lo.dimension() {
        0 => !matches!(point_in_region(&lo.vertices()[0], hi), Ok(PointLocation::Outside)),
        1 if hi.dimension() == 1 => {
            let (u, v) = (&lo.vertices()[0], &lo.vertices()[1]);
            !segment_x_segment(u, v, &hi.vertices()[0], &hi.vertices()[1]).is_empty()
        }
        _ => {
            for (r, other) in [(hi, lo), (lo, hi)] {
                for (ea, eb) in directed_edges(r) {
                    if other
                        .vertices()
                        .iter()
                        .all(|w| orientation(ea, eb, w) == -1)
                    {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Is the counter-clockwise angle from ray `p -> a` to ray `p -> b` in
/// the half-open range `(0°, 180°]`? In other words, does `b` lie
/// strictly to the left of the directed line through `p` and `a`, or
/// directly behind `p` on that line? Errors if `a` or `b` equals `p`.
pub fn left_of_vector(p: &Point, a: &Point, b: &Point) -> Result<bool, GeomError> {
    if a == p || b == p {
        return Err(GeomError::ApexCoincidence);
    }
    match orientation(p, a, b) {
        1 => Ok(true),
        -1 => Ok(false),
        _ => Ok(dot_value(p, a, b).is_negative()),
    }
}
