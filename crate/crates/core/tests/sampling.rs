mod common;

use common::{class_of, finite_samples, representatives};
use fourbar::coeffs::{eval_h, h_coeffs};
use fourbar::lengths::ClassKind;
use fourbar::proj::ProjReal;
use fourbar::solver::solve_at_x;

#[test]
fn every_sample_closes_and_satisfies_the_relations() {
    for (kind, tuples) in representatives() {
        for lengths in tuples {
            assert_eq!(class_of(&lengths), kind);
            let s = lengths.sigma();
            let samples = finite_samples(&lengths, 200);
            let branches = fourbar::solver::enumerate_branches(&lengths).unwrap();
            let finite = branches.iter().filter(|b| b.param_kind != fourbar::solver::ParamKind::InfinityCircle).count();
            // at most a couple of pole hits per branch
            assert!(samples.len() + 2 * finite >= 200 * finite, "{lengths}: {} samples", samples.len());
            for (id, c) in &samples {
                assert!(c.closure_residual(&lengths) <= 1e-9 * s, "{lengths} branch {id}: {c:?}");
                let r = c.relation_residuals(&lengths);
                assert!(r.iter().all(|v| v.abs() <= 1e-9 * s * s), "{lengths} branch {id}: {r:?}");
            }
        }
    }
}

#[test]
fn diagonals_satisfy_h() {
    for (kind, tuples) in representatives() {
        for lengths in tuples {
            let s = lengths.sigma();
            let h = h_coeffs(&lengths);
            let [a, b, _, _] = lengths.as_array();
            for (id, c) in finite_samples(&lengths, 200) {
                let (u, v) = (c.u(), c.v());
                assert!(eval_h(&h, u, v).abs() <= 1e-9 * s.powi(6), "{lengths} branch {id}");
                let sum = u * u + v * v;
                match kind {
                    ClassKind::Rhombus => assert!((sum - 4.0 * a * a).abs() <= 1e-9 * s * s),
                    // the butterfly folds the other way and has u·v = |α²−β²| instead
                    ClassKind::Isogram if id == 1 => assert!((sum - 2.0 * a * a - 2.0 * b * b).abs() <= 1e-9 * s * s),
                    ClassKind::Isogram => assert!((u * v - (a * a - b * b).abs()).abs() <= 1e-9 * s * s),
                    _ => {}
                }
            }
        }
    }
}

#[test]
fn solver_recovers_every_sample() {
    for (_, tuples) in representatives() {
        for lengths in tuples {
            for (id, c) in finite_samples(&lengths, 60) {
                let out = solve_at_x(&lengths, c.x);
                assert!(out.len() <= 2, "{lengths}: {} solutions", out.len());
                let hit = out.iter().any(|o| {
                    o.tangents().iter().zip(c.tangents().iter()).all(|(p, q)| p.distance(q) <= 1e-8)
                });
                assert!(hit, "{lengths} branch {id} x={}: {:?} not in {:?}", c.x, c.tangents(), out.iter().map(|o| o.tangents()).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn deltoid_two_has_a_gap_in_x() {
    for lengths in [common::l(2.0, 2.0, 1.0, 1.0), common::l(1.2, 1.2, 1.0, 1.0)] {
        let [_, b, c, _] = lengths.as_array();
        let edge = (b * b / (c * c) - 1.0).sqrt();
        for f in [0.0, 0.3, 0.9, 0.999] {
            assert!(solve_at_x(&lengths, ProjReal::from_f64(f * edge)).is_empty());
        }
        assert!(!solve_at_x(&lengths, ProjReal::from_f64(1.01 * edge)).is_empty());
    }
}
