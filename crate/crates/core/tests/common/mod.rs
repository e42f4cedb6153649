#![allow(dead_code)]

use fourbar::lengths::{classify, validate_lengths, BarLengths, ClassKind, DEFAULT_CLASS_TOL};
use fourbar::solver::{enumerate_branches, sample_normalized, Configuration, ParamKind};

pub fn l(a: f64, b: f64, c: f64, d: f64) -> BarLengths {
    validate_lengths(a, b, c, d).unwrap()
}

/// Three or more length tuples per class, covering both orderings where a
/// class has an orientation-dependent chart.
pub fn representatives() -> Vec<(ClassKind, Vec<BarLengths>)> {
    let o = |a: f64, b: f64, c: f64, d: f64| l(a, b, c, d);
    vec![
        (ClassKind::Rhombus, vec![o(1.0, 1.0, 1.0, 1.0), o(2.5, 2.5, 2.5, 2.5), o(0.3, 0.3, 0.3, 0.3)]),
        (ClassKind::Isogram, vec![o(2.0, 1.0, 2.0, 1.0), o(1.0, 3.0, 1.0, 3.0), o(1.5, 1.2, 1.5, 1.2)]),
        (ClassKind::DeltoidI, vec![o(2.0, 1.0, 1.0, 2.0), o(1.0, 3.0, 3.0, 1.0), o(1.5, 1.4, 1.4, 1.5)]),
        (ClassKind::DeltoidII, vec![o(2.0, 2.0, 1.0, 1.0), o(1.0, 1.0, 3.0, 3.0), o(1.2, 1.2, 1.0, 1.0)]),
        (ClassKind::ConicI, vec![o(2.0, 3.0, 2.0, 1.0), o(1.0, 2.0, 3.0, 2.0), o(2.5, 1.0, 1.5, 3.0)]),
        (ClassKind::ConicII, vec![o(1.0, 2.0, 3.0, 4.0), o(1.5, 2.0, 3.0, 3.5), o(3.0, 2.5, 1.5, 1.0)]),
        (ClassKind::ConicIII, vec![o(3.0, 2.0, 4.0, 1.0), o(1.0, 4.0, 2.0, 3.0), o(2.0, 2.5, 1.0, 3.5)]),
        (
            ClassKind::Elliptic,
            vec![
                o(2.0, 3.0, 4.0, 6.0),
                o(1.0, 2.0, 3.0, 3.5),
                o(3.0, 8f64.sqrt(), 6f64.sqrt(), 7f64.sqrt()),
                o(3.0, 1.2, 2.5, 2.2),
            ],
        ),
    ]
}

pub fn class_of(lengths: &BarLengths) -> ClassKind {
    classify(lengths, DEFAULT_CLASS_TOL).kind
}

/// `n` evenly spaced samples on every finite branch, tagged with the branch
/// id. Samples the chart refuses (only ever at a pole) are skipped.
pub fn finite_samples(lengths: &BarLengths, n: usize) -> Vec<(usize, Configuration)> {
    let mut out = Vec::new();
    for b in enumerate_branches(lengths).unwrap() {
        if b.param_kind == ParamKind::InfinityCircle {
            continue;
        }
        for u in b.domain.normalized_grid(n) {
            if let Ok(c) = sample_normalized(lengths, &b, u) {
                out.push((b.branch_id, c));
            }
        }
    }
    out
}
