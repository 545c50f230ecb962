use std::f64::consts::{PI, TAU};

use proptest::prelude::*;

use kiss4d_core::catalog::make_24cell;
use kiss4d_core::config::{apply_rotation, irreducible_signature, verify_kissing, Signature};
use kiss4d_core::cover::covers;
use kiss4d_core::geometry::{
    chord_s2, chord_s3, d2_max, fiber_distance, hopf_lift, hopf_project, theta_min,
};
use kiss4d_core::io::{emit_document, parse_document, ConfigDocument};
use kiss4d_core::{Configuration, FiberAngle, R4Point, Rotation4, S2Point, KISSING_TOL};

fn s2() -> impl Strategy<Value = S2Point> {
    // Uniform in cos α so the poles are not oversampled.
    (-1.0f64..=1.0, 0.0..TAU).prop_map(|(t, phi)| S2Point::from_polar(t.acos(), phi))
}

fn s3() -> impl Strategy<Value = R4Point> {
    prop::array::uniform4(-1.0f64..1.0).prop_filter_map("too short", R4Point::normalized)
}

fn angle() -> impl Strategy<Value = FiberAngle> {
    (0.0..TAU).prop_map(FiberAngle::new)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 2000,
        max_global_rejects: 200_000,
        ..ProptestConfig::default()
    })]

    #[test]
    fn project_after_lift_is_identity(c in s2(), t in angle()) {
        let back = hopf_project(&hopf_lift(&c, t)).unwrap();
        prop_assert!(chord_s2(&c, &back) < 1e-12);
    }

    #[test]
    fn lift_after_project_stays_on_fiber(p in s3()) {
        let c = hopf_project(&p).unwrap();
        // The Hermitian phase against the θ = 0 point recovers p's angle.
        let q = hopf_lift(&c, FiberAngle::new(0.0));
        let h = p.w() * q.w().conj() + p.z() * q.z().conj();
        let lifted = hopf_lift(&c, FiberAngle::new(h.im.atan2(h.re)));
        prop_assert!(chord_s3(&p, &lifted) < 1e-12);
    }

    #[test]
    fn fiber_distance_matches_direct_lift(ci in s2(), ti in angle(), cj in s2(), tj in angle()) {
        let direct = chord_s3(&hopf_lift(&ci, ti), &hopf_lift(&cj, tj));
        prop_assert!((fiber_distance(&ci, ti, &cj, tj) - direct).abs() <= 1e-9);
    }

    #[test]
    fn closest_fiber_points_reach_the_bound(d3 in 0.0f64..2f64.sqrt()) {
        // The nearest two fibers at base chord d2 get is √(2 − √(4 − d2²)).
        let d2 = d2_max(d3).unwrap();
        let nearest = (2.0 - (4.0 - d2 * d2).sqrt()).max(0.0).sqrt();
        prop_assert!((nearest - d3).abs() < 1e-7);
    }

    #[test]
    fn theta_min_is_monotone(a in 0.0f64..3f64.sqrt(), b in 0.0f64..3f64.sqrt()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let t_lo = theta_min(lo).unwrap().unwrap();
        let t_hi = theta_min(hi).unwrap().unwrap();
        prop_assert!(t_lo >= t_hi - 1e-12);
        prop_assert!((0.0..=PI / 3.0 + 1e-12).contains(&t_lo));
    }

    #[test]
    fn theta_min_is_the_kissing_threshold(ci in s2(), cj in s2(), t in angle()) {
        let d2 = chord_s2(&ci, &cj);
        prop_assume!(d2 < 3f64.sqrt() - 1e-6 && d2 > 1e-6);
        let th = theta_min(d2).unwrap().unwrap();
        let phi = kiss4d_core::geometry::phi_offset(&ci, &cj).unwrap().value();
        // At separation exactly θ_min the two points are at chord 1.
        let tj = FiberAngle::new(t.radians() + th - phi);
        prop_assert!((fiber_distance(&ci, t, &cj, tj) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn covers_is_symmetric(p in s3(), q in s3()) {
        prop_assume!(chord_s3(&p, &q) >= 1.0);
        prop_assert_eq!(covers(&p, &q, KISSING_TOL).unwrap(), covers(&q, &p, KISSING_TOL).unwrap());
    }

    #[test]
    fn covers_is_antitransitive(p in s3(), q in s3(), r in s3()) {
        let ok = [(p, q), (q, r), (p, r)].iter().all(|(a, b)| chord_s3(a, b) >= 1.0);
        prop_assume!(ok);
        let pq = covers(&p, &q, KISSING_TOL).unwrap();
        let qr = covers(&q, &r, KISSING_TOL).unwrap();
        prop_assert!(!(pq && qr) || !covers(&p, &r, KISSING_TOL).unwrap());
    }

    #[test]
    fn rotations_preserve_24cell(seed in any::<u64>()) {
        let c = make_24cell();
        let r = Rotation4::random(seed);
        prop_assert!(r.orthogonality_error() < 1e-12);
        prop_assert!((r.determinant() - 1.0).abs() < 1e-12);
        let rotated = apply_rotation(&c, &r);
        let v = verify_kissing(&rotated, KISSING_TOL);
        prop_assert!(v.is_kissing);
        prop_assert!((v.min_distance - 1.0).abs() < 1e-10);
    }

    #[test]
    fn document_round_trip_is_bit_exact(pts in prop::collection::vec(s3(), 1..30)) {
        prop_assume!(Configuration::new(pts.clone()).is_ok());
        let c = Configuration::new(pts).unwrap();
        let text = emit_document(&ConfigDocument::from_configuration(&c, None));
        let back = parse_document(&text).unwrap().to_configuration().unwrap();
        for (a, b) in c.points().iter().zip(back.points()) {
            prop_assert_eq!(a.coords().map(f64::to_bits), b.coords().map(f64::to_bits));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn irreducible_signature_of_24cell(seed in any::<u64>()) {
        prop_assert_eq!(irreducible_signature(&make_24cell(), seed).unwrap(), Signature::from_counts(&[(2, 12)]));
    }
}
