mod oracle;

use brocard_core::areal::{distance2, line_through, reflect_in_side};
use brocard_core::nine::published_centres;
use brocard_core::scalar::{int, to_f64, Scalar};
use brocard_core::triangle::{Side, Vertex};
use brocard_core::{circle_through, ArealPoint, Circle, RefTriangle};
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = RefTriangle> {
    (2i64..80, 2i64..80, 2i64..80)
        .prop_filter("valid scalene", |&(a, b, c)| a + b > c && b + c > a && c + a > b && a != b && b != c && c != a)
        .prop_map(|(a, b, c)| RefTriangle::from_ints(a, b, c).unwrap())
}

fn point() -> impl Strategy<Value = ArealPoint> {
    (-30i64..=30, -30i64..=30, -30i64..=30)
        .prop_filter("finite", |&(x, y, z)| x + y + z != 0)
        .prop_map(|(x, y, z)| ArealPoint::from_ints(x, y, z))
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::BC), Just(Side::CA), Just(Side::AB)]
}

proptest! {
    #[test]
    fn metric_agrees_with_cartesian(t in triangle(), p in point(), r in point()) {
        let o = oracle::Tri::new(&t);
        let exact = to_f64(&distance2(&p, &r, &t).unwrap());
        let cart = o.place(&p).dist(o.place(&r)).powi(2);
        prop_assert!(oracle::close(exact, cart, 1e-9), "{exact} vs {cart}");
    }

    #[test]
    fn reflection_is_an_involution(t in triangle(), p in point(), s in side()) {
        let once = reflect_in_side(&p, s, &t).unwrap();
        prop_assert_eq!(reflect_in_side(&once, s, &t).unwrap(), p.clone());
        let mirror = brocard_core::ArealLine::side(s);
        if mirror.contains(&p) {
            prop_assert_eq!(once, p);
        }
    }

    #[test]
    fn reflection_preserves_distance_to_the_side_vertices(t in triangle(), p in point(), s in side()) {
        let q = reflect_in_side(&p, s, &t).unwrap();
        let ends = match s {
            Side::BC => [Vertex::B, Vertex::C],
            Side::CA => [Vertex::C, Vertex::A],
            Side::AB => [Vertex::A, Vertex::B],
        };
        for v in ends {
            prop_assert_eq!(distance2(&p, &t.vertex(v), &t).unwrap(), distance2(&q, &t.vertex(v), &t).unwrap());
        }
    }

    #[test]
    fn second_intersection_twice_returns_the_known_point(t in triangle(), p in point()) {
        let circum = Circle::circumcircle(&t);
        let a = t.vertex(Vertex::A);
        prop_assume!(!p.same_as(&a));
        let line = line_through(&a, &p).unwrap();
        let d = circum.second_intersection(&line, &a).unwrap();
        prop_assert!(circum.contains(&d.point));
        if !d.tangent {
            let back = circum.second_intersection(&line, &d.point).unwrap();
            prop_assert_eq!(back.point, a);
        }
    }

    #[test]
    fn normalize_is_idempotent_and_projective(p in point(), k in -9i64..=9) {
        prop_assume!(k != 0);
        let n = p.normalize().unwrap();
        prop_assert_eq!(n.normalize().unwrap().coords().clone(), n.coords().clone());
        prop_assert_eq!(n.sum(), int(1));
        let scaled = ArealPoint::from_array(p.coords().clone().map(|c| c * int(k))).unwrap();
        prop_assert!(scaled.same_as(&p));
        prop_assert_eq!(scaled.canonical(), p.canonical());
        prop_assert_eq!(scaled.normalize().unwrap().coords().clone(), n.coords().clone());
    }

    #[test]
    fn circle_through_contains_its_points(t in triangle(), p in point(), q in point(), r in point()) {
        if let Ok(c) = circle_through(&p, &q, &r, &t) {
            prop_assert!(c.contains(&p) && c.contains(&q) && c.contains(&r));
            let centre = c.center().unwrap();
            let r2 = c.radius2().unwrap();
            for x in [&p, &q, &r] {
                prop_assert_eq!(distance2(&centre, x, &t).unwrap(), r2.clone());
            }
        }
    }

    #[test]
    fn published_centres_sum_to_q(t in triangle()) {
        for (_, c) in &published_centres(&t).centres {
            let s: Scalar = c.iter().sum();
            prop_assert_eq!(s, t.q.clone());
        }
    }
}
