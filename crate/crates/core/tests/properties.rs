//! Property-based invariants over the exact-geometry core.

use proptest::prelude::*;
use std::collections::BTreeSet;
use thrackle_core::format::{parse_instance, serialize_instance};
use thrackle_core::geom::{
    convex_hull_extremes, intersect_regions, left_of_vector, orientation, point_in_region,
    regions_intersect, ConvexRegion, Point, PointLocation,
};
use thrackle_core::model::{verify, Instance, PointSet, VariantFlags};

fn arb_point() -> impl Strategy<Value = Point> {
    (-12i64..=12, -12i64..=12).prop_map(|(x, y)| Point::ints(x, y))
}

fn arb_points(min: usize, max: usize) -> impl Strategy<Value = Vec<Point>> {
    proptest::collection::btree_set(arb_point(), min..=max)
        .prop_map(|set| set.into_iter().collect())
}

fn arb_region() -> impl Strategy<Value = ConvexRegion> {
    arb_points(1, 6).prop_map(|pts| convex_hull_extremes(&pts).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn orientation_is_antisymmetric_and_cyclic(a in arb_point(), b in arb_point(), c in arb_point()) {
        prop_assert_eq!(orientation(&a, &b, &c), -orientation(&a, &c, &b));
        prop_assert_eq!(orientation(&a, &b, &c), orientation(&b, &c, &a));
        prop_assert_eq!(orientation(&a, &b, &c), orientation(&c, &a, &b));
    }

    #[test]
    fn hull_is_idempotent_and_canonical(pts in arb_points(1, 8)) {
        let hull = convex_hull_extremes(&pts).unwrap();
        // Idempotent: hulling the vertices changes nothing.
        let again = convex_hull_extremes(hull.vertices()).unwrap();
        prop_assert_eq!(&again, &hull);
        // Vertices are input points.
        for v in hull.vertices() {
            prop_assert!(pts.contains(v));
        }
        // Canonical start: the first vertex is the lexicographic minimum.
        let min = hull.vertices().iter().min().unwrap();
        prop_assert_eq!(&hull.vertices()[0], min);
        // Strict convexity: every consecutive triple turns left.
        let vs = hull.vertices();
        if vs.len() >= 3 {
            for i in 0..vs.len() {
                let a = &vs[i];
                let b = &vs[(i + 1) % vs.len()];
                let c = &vs[(i + 2) % vs.len()];
                prop_assert_eq!(orientation(a, b, c), 1);
            }
        }
        // Input points all lie inside or on the hull.
        for p in &pts {
            prop_assert_ne!(point_in_region(p, &hull).unwrap(), PointLocation::Outside);
        }
    }

    #[test]
    fn intersection_commutes_and_shrinks(a in arb_region(), b in arb_region()) {
        let ab = intersect_regions(&a, &b);
        let ba = intersect_regions(&b, &a);
        prop_assert_eq!(&ab, &ba);
        prop_assert!(ab.dimension() <= a.dimension().min(b.dimension()));
        // Every vertex of the intersection lies in both operands.
        for v in ab.vertices() {
            prop_assert_ne!(point_in_region(v, &a).unwrap(), PointLocation::Outside);
            prop_assert_ne!(point_in_region(v, &b).unwrap(), PointLocation::Outside);
        }
        // The fast predicate agrees with construction.
        prop_assert_eq!(regions_intersect(&a, &b), !ab.is_empty());
        // Self-intersection is identity.
        prop_assert_eq!(intersect_regions(&a, &a), a);
    }

    #[test]
    fn intersection_is_monotone_under_inclusion(pts in arb_points(2, 6), b in arb_region()) {
        // A sub-hull of `a` intersected with `b` stays inside a ∩ b.
        let a = convex_hull_extremes(&pts).unwrap();
        let sub = convex_hull_extremes(&pts[..pts.len() - 1]).unwrap();
        let big = intersect_regions(&a, &b);
        let small = intersect_regions(&sub, &b);
        for v in small.vertices() {
            // v ∈ sub ∩ b ⊆ a ∩ b.
            prop_assert_ne!(point_in_region(v, &big).unwrap(), PointLocation::Outside);
        }
    }

    #[test]
    fn left_of_vector_trichotomy(p in arb_point(), a in arb_point(), b in arb_point()) {
        prop_assume!(p != a && p != b);
        let ab = left_of_vector(&p, &a, &b).unwrap();
        let ba = left_of_vector(&p, &b, &a).unwrap();
        match orientation(&p, &a, &b) {
            0 => {
                // Same ray: both false. Opposite rays (180°): both true.
                prop_assert_eq!(ab, ba);
            }
            _ => prop_assert_ne!(ab, ba),
        }
    }

    #[test]
    fn verification_is_family_order_invariant(
        pts in arb_points(3, 6),
        seed_hulls in proptest::collection::vec(proptest::collection::vec(0usize..6, 2..4), 1..5),
        perm_seed in 0u64..1000,
    ) {
        let points = PointSet::new(pts.clone()).unwrap();
        let n = pts.len();
        let family: Vec<Vec<usize>> = seed_hulls
            .iter()
            .map(|h| {
                let ids: BTreeSet<usize> = h.iter().map(|i| i % n).collect();
                ids.into_iter().collect::<Vec<_>>()
            })
            .filter(|h: &Vec<usize>| h.len() >= 2)
            .collect();
        prop_assume!(!family.is_empty());
        let inst = Instance::new(points.clone(), family.clone(), VariantFlags::default()).unwrap();
        // Shuffle the family deterministically from the seed.
        let mut shuffled = family.clone();
        let mut state = perm_seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        let inst2 = Instance::new(points, shuffled, VariantFlags::default()).unwrap();
        prop_assert_eq!(&inst, &inst2);
        let (r1, r2) = (verify(&inst), verify(&inst2));
        prop_assert_eq!(r1.valid, r2.valid);
        prop_assert_eq!(r1.condition1_violations, r2.condition1_violations);
        prop_assert_eq!(r1.condition2_violations, r2.condition2_violations);
    }

    #[test]
    fn serialization_round_trips(
        pts in arb_points(2, 7),
        seed_hulls in proptest::collection::vec(proptest::collection::vec(0usize..7, 1..5), 0..6),
    ) {
        let n = pts.len();
        let family: Vec<Vec<usize>> = seed_hulls
            .iter()
            .map(|h| {
                let ids: BTreeSet<usize> = h.iter().map(|i| i % n).collect();
                ids.into_iter().collect::<Vec<_>>()
            })
            .collect();
        let points = PointSet::new(pts).unwrap();
        let inst = Instance::new(points, family, VariantFlags::default()).unwrap();
        let text = serialize_instance(&inst);
        let parsed = parse_instance(&text).unwrap();
        prop_assert_eq!(&parsed, &inst);
        prop_assert_eq!(serialize_instance(&parsed), text);
    }

    #[test]
    fn fractional_coordinates_round_trip(
        nums in proptest::collection::vec((-40i64..=40, 1i64..=12, -40i64..=40, 1i64..=12), 1..6),
    ) {
        let mut pts: Vec<Point> = nums
            .iter()
            .map(|&(nx, dx, ny, dy)| {
                Point::new(
                    thrackle_core::geom::ratio(nx, dx),
                    thrackle_core::geom::ratio(ny, dy),
                )
            })
            .collect();
        pts.sort();
        pts.dedup();
        let points = PointSet::new(pts).unwrap();
        let inst = Instance::new(points, Vec::new(), VariantFlags::default()).unwrap();
        let text = serialize_instance(&inst);
        let parsed = parse_instance(&text).unwrap();
        prop_assert_eq!(parsed, inst);
    }
}
