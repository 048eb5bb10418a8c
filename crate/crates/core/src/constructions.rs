//! Reference generators for notable convex-hull-thrackle families.
//!
//! Each generator emits an [`Instance`] that the verifier accepts under
//! the generator's declared flags. Coordinates are chosen rational so
//! that every check stays exact; placements on a circle use the
//! tan-half-angle parametrization, and generic convex position uses
//! points on the parabola `y = x²`.

use crate::geom::{rat, ratio, Point, Rational};
use crate::model::{Instance, ModelError, PointSet, VariantFlags};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from the construction generators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("{name} requires n >= {min}, got {n}")]
    TooSmall { name: ConstructionName, min: usize, n: usize },
    #[error("odd_circle requires an odd n, got {n}")]
    EvenN { n: usize },
    #[error("triple_blocks requires n divisible by 3, got {n}")]
    NotDivisibleByThree { n: usize },
    #[error("unknown construction `{0}` (expected one of: {names})", names = ConstructionName::NAMES.join(", "))]
    UnknownName(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// The named generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionName {
    /// `n + 1` hulls on `n` points in general (non-convex) position.
    Counterexample,
    /// The odd star polygon: each point joined to the two almost
    /// opposite points.
    OddCircle,
    /// A star from one point plus the segment between its two
    /// convex-hull neighbors.
    StarNeighbors,
    /// Star segments plus every second triangle at the star center;
    /// needs `allow_containment`.
    Gossett,
    /// All one-per-arc triangles over three equal arcs; needs
    /// `allow_triple_interior`.
    TripleBlocks,
    /// Every star segment doubled; needs `allow_multiset`.
    DoubleStar,
    /// Bare convex-position points `(i, i²)` with an empty family.
    ParabolaPoints,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 7] = [
        ConstructionName::Counterexample,
        ConstructionName::OddCircle,
        ConstructionName::StarNeighbors,
        ConstructionName::Gossett,
        ConstructionName::TripleBlocks,
        ConstructionName::DoubleStar,
        ConstructionName::ParabolaPoints,
    ];

    pub const NAMES: [&'static str; 7] = [
        "counterexample",
        "odd_circle",
        "star_neighbors",
        "gossett",
        "triple_blocks",
        "double_star",
        "parabola_points",
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionName::Counterexample => "counterexample",
            ConstructionName::OddCircle => "odd_circle",
            ConstructionName::StarNeighbors => "star_neighbors",
            ConstructionName::Gossett => "gossett",
            ConstructionName::TripleBlocks => "triple_blocks",
            ConstructionName::DoubleStar => "double_star",
            ConstructionName::ParabolaPoints => "parabola_points",
        }
    }
}

impl fmt::Display for ConstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionName {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // Accept kebab-case spellings on the command line.
        let canon = s.replace('-', "_");
        ConstructionName::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == canon)
            .ok_or_else(|| ConstructError::UnknownName(s.to_string()))
    }
}

/// Dispatches to the generator named `name`. `parabola_points` yields an
/// instance with an empty family.
pub fn generate(name: ConstructionName, n: usize) -> Result<Instance, ConstructError> {
    match name {
        ConstructionName::Counterexample => gen_counterexample(n),
        ConstructionName::OddCircle => gen_odd_circle(n),
        ConstructionName::StarNeighbors => gen_star_neighbors(n),
        ConstructionName::Gossett => gen_gossett(n),
        ConstructionName::TripleBlocks => gen_triple_blocks(n),
        ConstructionName::DoubleStar => gen_double_star(n),
        ConstructionName::ParabolaPoints => {
            let points = parabola_points(n)?;
            Ok(Instance::new(points, Vec::new(), VariantFlags::default())?)
        }
    }
}

/// `n` points `(i, i²)` on the parabola: convex position, no three
/// collinear, all extreme.
pub fn parabola_points(n: usize) -> Result<PointSet, ConstructError> {
    if n == 0 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::ParabolaPoints,
            min: 1,
            n,
        });
    }
    let pts = (0..n as i64).map(|i| Point::ints(i, i * i)).collect();
    Ok(PointSet::new(pts)?)
}

/// A family of `n + 1` hulls on `n` points (`n ≥ 6`).
///
/// Layout: `q′ = (0, 0)` sits inside the triangle of `p = (-5, -3)`,
/// `p′ = (5, -3)`, `q = (0, 10)`. The points `r₁..r_{n-4}` lie on a flat
/// downward-opening arc strictly inside that triangle and below `q′`, so
/// that `p, r₁, …, r_{n-4}, p′, q` is both the radial order around `q′`
/// and (without `q`, which caps the top) a convex chain. The family is
/// the fan of `n - 1` triangles at `q′` over consecutive radial pairs,
/// plus the hull of `{p, p′}` with the even-indexed `r`s and the hull of
/// `{p, p′}` with the odd-indexed `r`s.
///
/// Point order: index 0 = `q′`, 1 = `p`, 2 = `p′`, 3 = `q`,
/// `3 + i` = `rᵢ` for `1 ≤ i ≤ n - 4`.
pub fn gen_counterexample(n: usize) -> Result<Instance, ConstructError> {
    if n < 6 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::Counterexample,
            min: 6,
            n,
        });
    }
    let k = n - 4;
    let mut points = vec![
        Point::ints(0, 0),   // q′
        Point::ints(-5, -3), // p
        Point::ints(5, -3),  // p′
        Point::ints(0, 10),  // q
    ];
    for i in 1..=k {
        // x sweeps from -2 to 19/10 in k - 1 equal steps (k ≥ 2).
        let x: Rational = rat(-2) + ratio(39, 10) * ratio(i as i64 - 1, k as i64 - 1);
        let y: Rational = rat(-1) - &x * &x / rat(10);
        points.push(Point::new(x, y));
    }
    // Radial (counter-clockwise) order of the other points around q′:
    // r₁, …, r_k, p′, q, p.
    let mut cyc: Vec<usize> = (4..4 + k).collect();
    cyc.extend([2, 3, 1]);
    let mut family: Vec<Vec<usize>> = (0..cyc.len())
        .map(|i| vec![0, cyc[i], cyc[(i + 1) % cyc.len()]])
        .collect();
    let evens: Vec<usize> = (1..=k).filter(|i| i % 2 == 0).map(|i| 3 + i).collect();
    let odds: Vec<usize> = (1..=k).filter(|i| i % 2 == 1).map(|i| 3 + i).collect();
    family.push([vec![1, 2], evens].concat());
    family.push([vec![1, 2], odds].concat());
    Ok(Instance::new(PointSet::new(points)?, family, VariantFlags::default())?)
}

/// `n` rational points on the unit circle at increasing angles in the
/// open upper half, preserving the cyclic combinatorics of a regular
/// n-gon. Parametrized by `t ↦ ((1 - t²)/(1 + t²), 2t/(1 + t²))` at
/// `t_j = j + 1/(j + 2)`; the offset keeps the chords of the star
/// polygon free of spurious triple concurrences.
fn upper_circle_points(n: usize) -> PointSet {
    let pts = (0..n as i64)
        .map(|j| {
            let t = ratio((j + 1) * (j + 1), j + 2); // j + 1/(j+2)
            let d = rat(1) + &t * &t;
            Point::new((rat(1) - &t * &t) / &d, rat(2) * &t / &d)
        })
        .collect();
    PointSet::new(pts).expect("strictly increasing parameters give distinct points")
}

/// The odd star polygon: `n` points in convex position (odd `n ≥ 3`),
/// each joined by a segment to the two points almost opposite to it.
/// The pairing `i ↔ i ± (n ± 1)/2` names every edge twice, leaving
/// exactly `n` distinct segments.
pub fn gen_odd_circle(n: usize) -> Result<Instance, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::OddCircle,
            min: 3,
            n,
        });
    }
    if n % 2 == 0 {
        return Err(ConstructError::EvenN { n });
    }
    let points = upper_circle_points(n);
    let half = (n + 1) / 2;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..n {
        for j in [(i + half) % n, (i + n - half) % n] {
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let family = edges.into_iter().map(|(a, b)| vec![a, b]).collect();
    Ok(Instance::new(points, family, VariantFlags::default())?)
}

/// A star of segments from `p₀` to every other point, plus the segment
/// between `p₁` and `p_{n-1}` — the two convex-hull neighbors of `p₀`.
/// `m = n` segments on `n ≥ 3` convex-position points.
pub fn gen_star_neighbors(n: usize) -> Result<Instance, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::StarNeighbors,
            min: 3,
            n,
        });
    }
    let points = parabola_points(n)?;
    let mut family: Vec<Vec<usize>> = (1..n).map(|i| vec![0, i]).collect();
    family.push(vec![1, n - 1]);
    Ok(Instance::new(points, family, VariantFlags::default())?)
}

/// Star segments from `p₀` plus every second triangle at `p₀` (over
/// consecutive pairs in the radial order): `m = ⌊3(n-1)/2⌋` hulls on
/// `n ≥ 3` convex-position points. The triangles contain their two star
/// segments, so the instance is valid only under `allow_containment`.
pub fn gen_gossett(n: usize) -> Result<Instance, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::Gossett,
            min: 3,
            n,
        });
    }
    let points = parabola_points(n)?;
    let mut family: Vec<Vec<usize>> = (1..n).map(|i| vec![0, i]).collect();
    let mut i = 1;
    while i + 1 < n {
        family.push(vec![0, i, i + 1]);
        i += 2;
    }
    let flags = VariantFlags { allow_containment: true, ..Default::default() };
    Ok(Instance::new(points, family, flags)?)
}

/// Splits `n` convex-position points (`3 | n`) into three consecutive
/// arcs of `n/3` and takes every triangle with one vertex per arc:
/// `(n/3)³` triangles, valid under `allow_triple_interior`.
pub fn gen_triple_blocks(n: usize) -> Result<Instance, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::TripleBlocks,
            min: 3,
            n,
        });
    }
    if n % 3 != 0 {
        return Err(ConstructError::NotDivisibleByThree { n });
    }
    let points = parabola_points(n)?;
    let b = n / 3;
    let mut family = Vec::with_capacity(b * b * b);
    for i in 0..b {
        for j in b..2 * b {
            for l in 2 * b..3 * b {
                family.push(vec![i, j, l]);
            }
        }
    }
    let flags = VariantFlags { allow_triple_interior: true, ..Default::default() };
    Ok(Instance::new(points, family, flags)?)
}

/// Two copies of every star segment from `p₀`: `m = 2n - 2` hulls on
/// `n ≥ 2` convex-position points, valid under `allow_multiset`.
pub fn gen_double_star(n: usize) -> Result<Instance, ConstructError> {
    if n < 2 {
        return Err(ConstructError::TooSmall {
            name: ConstructionName::DoubleStar,
            min: 2,
            n,
        });
    }
    let points = parabola_points(n)?;
    let mut family = Vec::with_capacity(2 * (n - 1));
    for i in 1..n {
        family.push(vec![0, i]);
        family.push(vec![0, i]);
    }
    let flags = VariantFlags { allow_multiset: true, ..Default::default() };
    Ok(Instance::new(points, family, flags)?)
}
