use proptest::prelude::*;
use sumhard::geom::{convex_hull, orient2d, point_in_polygon, IntervalSet, Location, Point2, Polygon};
use sumhard::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=60).prop_map(|(p, q)| Rational::frac(p, q))
}

fn point() -> impl Strategy<Value = Point2> {
    (rational(), rational()).prop_map(|(x, y)| Point2::new(x, y))
}

proptest! {
    #[test]
    fn arithmetic_is_normalized(a in rational(), b in rational()) {
        for x in [&a + &b, &a - &b, &a * &b] {
            let big = x.as_big();
            prop_assert!(big.denom() > &0.into());
            prop_assert_eq!(num_integer::Integer::gcd(big.numer(), big.denom()), 1.into());
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x.clone());
        }
    }

    #[test]
    fn orientation_flips_with_swap(a in point(), b in point(), c in point()) {
        prop_assert_eq!(orient2d(&a, &b, &c), -orient2d(&a, &c, &b));
    }

    #[test]
    fn hull_is_convex_and_covers(pts in prop::collection::vec(point(), 3..30)) {
        if let Ok(hull) = convex_hull(&pts) {
            let vs = hull.vertices();
            let n = vs.len();
            for i in 0..n {
                prop_assert!(orient2d(&vs[i], &vs[(i + 1) % n], &vs[(i + 2) % n]) > 0);
            }
            for p in &pts {
                prop_assert_ne!(point_in_polygon(p, hull.as_polygon()), Location::Outside);
            }
        }
    }

    #[test]
    fn hull_area_dominates_triangles(pts in prop::collection::vec(point(), 3..12)) {
        if let Ok(hull) = convex_hull(&pts) {
            let area = hull.as_polygon().area();
            for w in pts.windows(3) {
                if let Ok(tri) = Polygon::new(w.to_vec()) {
                    prop_assert!(tri.area() <= area);
                }
            }
        }
    }

    #[test]
    fn interval_set_contains_its_endpoints(xs in prop::collection::vec(-50i64..50, 1..12)) {
        let pts: Vec<Rational> = xs.iter().map(|&x| Rational::from_int(x)).collect();
        let set = IntervalSet::from_points(&pts);
        for p in &pts {
            prop_assert!(set.contains(p));
            prop_assert_eq!(set.distance_to(p), Some(Rational::zero()));
        }
    }
}
