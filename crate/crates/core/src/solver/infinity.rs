//! Solutions at infinity: configurations with a joint folded flat.

use crate::lengths::{classify, BarLengths, ClassKind, DEFAULT_CLASS_TOL};
use crate::proj::ProjReal;

use super::branches::enumerate_branches;
use super::params::elliptic_data;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfinityKind {
    /// A single point.
    Isolated,
    /// A whole branch lying at infinity; see that branch's descriptor.
    Circle { branch_id: usize },
}

/// The inequality deciding whether an entry is attained.
#[derive(Clone, Debug, PartialEq)]
pub struct Condition {
    pub description: String,
    /// The quantity the description compares against zero.
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfinitySolution {
    /// `None` for circles and for unreachable points.
    pub tuple: Option<[ProjReal; 4]>,
    pub reachable: bool,
    pub condition: Condition,
    pub kind: InfinityKind,
}

const INF: ProjReal = ProjReal::INFINITY;

fn p(v: f64) -> ProjReal {
    ProjReal::from_f64(v)
}

/// The tangent whose reciprocal is `v`.
fn inv(v: f64) -> ProjReal {
    ProjReal::ratio(1.0, v)
}

/// Square root of a radicand that should be nonnegative; rounding noise is
/// clamped.
fn root(v: f64) -> f64 {
    v.max(0.0).sqrt()
}

fn sign(v: f64) -> f64 {
    if v >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

fn always(description: &str) -> Condition {
    Condition { description: description.to_string(), value: 1.0 }
}

fn point(tuple: [ProjReal; 4], condition: Condition) -> InfinitySolution {
    InfinitySolution { tuple: Some(tuple), reachable: true, condition, kind: InfinityKind::Isolated }
}

fn circles(lengths: &BarLengths) -> Vec<InfinitySolution> {
    let branches = enumerate_branches(lengths).unwrap_or_default();
    branches
        .iter()
        .filter(|b| b.param_kind == super::branches::ParamKind::InfinityCircle)
        .map(|b| InfinitySolution {
            tuple: None,
            reachable: true,
            condition: always("holds for every configuration of the class"),
            kind: InfinityKind::Circle { branch_id: b.branch_id },
        })
        .collect()
}

/// Class-by-class list of the configurations with some tangent at `∞`.
///
/// Elliptic linkages get all eight candidate points, each flagged by its
/// reachability gate; unreachable ones carry no tuple. Conic II and III get
/// their isolated point plus the sign-paired tuples whose radicands are
/// positive.
pub fn solutions_at_infinity(lengths: &BarLengths) -> Vec<InfinitySolution> {
    let [a, b, c, d] = lengths.as_array();
    let kind = classify(lengths, DEFAULT_CLASS_TOL).kind;
    match kind {
        ClassKind::Rhombus | ClassKind::DeltoidI | ClassKind::DeltoidII => circles(lengths),
        ClassKind::Isogram => vec![
            point([INF, p(0.0), INF, p(0.0)], always("limit point of both finite branches")),
            point([p(0.0), INF, p(0.0), INF], always("limit point of both finite branches")),
        ],
        ClassKind::ConicI => vec![point([INF; 4], always("end of both branches"))],
        ClassKind::ConicII => {
            let sg = sign(a + b - c - d);
            let mut out = vec![point([INF, p(0.0), INF, p(0.0)], always("end of both branches"))];
            let gate = d * a - b * c;
            if gate > 0.0 {
                let x = root(a * (b - c) / (c * (b - a)) - 1.0);
                let z = root(d * (c - b) / (b * (c - d)) - 1.0);
                let wi = root(d * a / (b * c) - 1.0);
                let cond = || Condition { description: "delta*alpha > beta*gamma".into(), value: gate };
                out.push(point([p(sg * x), INF, p(-sg * z), inv(wi)], cond()));
                out.push(point([p(-sg * x), INF, p(sg * z), inv(-wi)], cond()));
            } else {
                let x = root(b * (a - d) / (d * (a - b)) - 1.0);
                let yi = root(b * c / (d * a) - 1.0);
                let z = root(c * (d - a) / (a * (d - c)) - 1.0);
                let cond = || Condition { description: "beta*gamma >= delta*alpha".into(), value: -gate };
                out.push(point([p(sg * x), inv(yi), p(-sg * z), INF], cond()));
                out.push(point([p(-sg * x), inv(-yi), p(sg * z), INF], cond()));
            }
            out
        }
        ClassKind::ConicIII => {
            let sg = sign(-a + b + c - d);
            let mut out = vec![point([p(0.0), INF, p(0.0), INF], always("end of both branches"))];
            let gate = c * d - a * b;
            if gate > 0.0 {
                let y = root(c * (b - a) / (a * (b - c)) - 1.0);
                let zi = root(c * d / (a * b) - 1.0);
                let w = root(d * (a - b) / (b * (a - d)) - 1.0);
                let cond = || Condition { description: "gamma*delta > alpha*beta".into(), value: gate };
                out.push(point([INF, p(sg * y), inv(zi), p(-sg * w)], cond()));
                out.push(point([INF, p(-sg * y), inv(-zi), p(sg * w)], cond()));
            } else {
                let xi = root(a * b / (c * d) - 1.0);
                let y = root(b * (c - d) / (d * (c - b)) - 1.0);
                let w = root(a * (d - c) / (c * (d - a)) - 1.0);
                let cond = || Condition { description: "alpha*beta >= gamma*delta".into(), value: -gate };
                out.push(point([inv(xi), p(sg * y), INF, p(-sg * w)], cond()));
                out.push(point([inv(-xi), p(-sg * y), INF, p(sg * w)], cond()));
            }
            out
        }
        ClassKind::Elliptic => elliptic(lengths),
    }
}

fn elliptic(lengths: &BarLengths) -> Vec<InfinitySolution> {
    let [a, b, c, d] = lengths.as_array();
    let s = lengths.sigma();
    let m1 = elliptic_data(lengths).map(|e| e.M - 1.0).unwrap_or(f64::NAN);
    let names = ["x", "y", "z", "w"];
    let bars = ["alpha", "beta", "gamma", "delta"];
    let l = [a, b, c, d];
    let mut out = Vec::with_capacity(8);
    for j in 0..4 {
        let gate = m1 * (s - l[j] - l[(j + 1) % 4]);
        let reachable = gate < 0.0;
        let tuples: [Option<[ProjReal; 4]>; 2] = if reachable {
            let pair = match j {
                0 => {
                    let e = sign(b - a);
                    let y = root(c * (b - a) / ((s - b) * (s - a - c)) - 1.0);
                    let zi = root(c * d / ((s - a) * (s - b)) - 1.0);
                    let w = root(d * (a - b) / ((s - a) * (s - b - d)) - 1.0);
                    [[INF, p(e * y), inv(zi), p(-e * w)], [INF, p(-e * y), inv(-zi), p(e * w)]]
                }
                1 => {
                    let e = sign(c - b);
                    let z = root(d * (c - b) / ((s - c) * (s - b - d)) - 1.0);
                    let wi = root(d * a / ((s - b) * (s - c)) - 1.0);
                    let x = root(a * (b - c) / ((s - b) * (s - a - c)) - 1.0);
                    [[p(-e * x), INF, p(e * z), inv(wi)], [p(e * x), INF, p(-e * z), inv(-wi)]]
                }
                2 => {
                    let e = sign(d - c);
                    let w = root(a * (d - c) / ((s - d) * (s - a - c)) - 1.0);
                    let xi = root(a * b / ((s - c) * (s - d)) - 1.0);
                    let y = root(b * (c - d) / ((s - c) * (s - b - d)) - 1.0);
                    [[inv(xi), p(-e * y), INF, p(e * w)], [inv(-xi), p(e * y), INF, p(-e * w)]]
                }
                _ => {
                    let e = sign(a - d);
                    let x = root(b * (a - d) / ((s - a) * (s - b - d)) - 1.0);
                    let yi = root(b * c / ((s - a) * (s - d)) - 1.0);
                    let z = root(c * (d - a) / ((s - d) * (s - a - c)) - 1.0);
                    [[p(e * x), inv(yi), p(-e * z), INF], [p(-e * x), inv(-yi), p(e * z), INF]]
                }
            };
            pair.map(Some)
        } else {
            [None, None]
        };
        let description = format!(
            "{}=inf reachable iff (M-1)(sigma-{}-{}) < 0",
            names[j],
            bars[j],
            bars[(j + 1) % 4]
        );
        for tuple in tuples {
            out.push(InfinitySolution {
                tuple,
                reachable,
                condition: Condition { description: description.clone(), value: gate },
                kind: InfinityKind::Isolated,
            });
        }
    }
    out
}
