//! Grashof condition, self-intersection and per-linkage topology summaries.

use crate::lengths::{classify, BarLengths, LinkageClass, DEFAULT_CLASS_TOL};
use crate::solver::{
    enumerate_branches, solutions_at_infinity, Configuration, InfinityKind, ParamKind, Point,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grashof {
    /// `max + min < σ`.
    pub holds: bool,
    /// `σ − max − min`.
    pub margin: f64,
}

pub fn grashof(lengths: &BarLengths) -> Grashof {
    let margin = lengths.sigma() - lengths.max() - lengths.min();
    Grashof { holds: margin > 0.0, margin }
}

/// Tangents this close to `0` or `∞` (on normalized representatives) count
/// as folded flat.
pub const FLAT_TOL: f64 = 1e-12;

/// Sign-pattern test: a configuration crosses itself exactly when two
/// cyclically adjacent tangents are positive and the other two negative.
///
/// Needs every tangent finite and nonzero (up to [`FLAT_TOL`]); otherwise use
/// [`self_intersected`], which falls back to the segment test.
pub fn is_self_intersected(config: &Configuration) -> Result<bool> {
    let mut signs = [0i8; 4];
    for (s, t) in signs.iter_mut().zip(config.tangents()) {
        *s = t.sign(FLAT_TOL).ok_or(Error::AngleAtInfinityOrZero)?;
    }
    Ok((0..4).any(|k| signs[k] == 1 && signs[(k + 1) % 4] == 1 && signs[(k + 2) % 4] == -1 && signs[(k + 3) % 4] == -1))
}

fn orient(p: Point, q: Point, r: Point) -> f64 {
    (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
}

/// Whether the closed segments `pq` and `rs` meet, by oriented areas.
pub fn segments_intersect(p: Point, q: Point, r: Point, s: Point) -> bool {
    let (d1, d2) = (orient(r, s, p), orient(r, s, q));
    let (d3, d4) = (orient(p, q, r), orient(p, q, s));
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        return true;
    }
    let on = |a: Point, b: Point, c: Point, d: f64| {
        d == 0.0 && c[0] >= a[0].min(b[0]) && c[0] <= a[0].max(b[0]) && c[1] >= a[1].min(b[1]) && c[1] <= a[1].max(b[1])
    };
    on(r, s, p, d1) || on(r, s, q, d2) || on(p, q, r, d3) || on(p, q, s, d4)
}

/// Geometric test on the vertices: does bar `DA` meet `BC`, or `AB` meet
/// `CD`?
pub fn segment_oracle(config: &Configuration) -> bool {
    let [a, b, c, d] = config.vertices;
    segments_intersect(d, a, b, c) || segments_intersect(a, b, c, d)
}

/// Sign-pattern test where it applies, the segment oracle elsewhere.
pub fn self_intersected(config: &Configuration) -> bool {
    is_self_intersected(config).unwrap_or_else(|_| segment_oracle(config))
}

/// Which tangents can reach `0` and `∞`, read off the triangle inequalities
/// for the diagonal across each joint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reachability {
    /// Indexed `x, y, z, w`.
    pub zero: [bool; 4],
    pub infinity: [bool; 4],
}

impl Reachability {
    /// Joints that can turn all the way round.
    pub fn fully_rotating(&self) -> [bool; 4] {
        std::array::from_fn(|i| self.zero[i] && self.infinity[i])
    }
}

pub fn reachability(lengths: &BarLengths) -> Reachability {
    let l = lengths.as_array();
    let mut r = Reachability { zero: [false; 4], infinity: [false; 4] };
    // joint x sits between the bars α and β, the other joints follow cyclically
    for j in 0..4 {
        let (p, q) = (l[j], l[(j + 1) % 4]);
        let (o1, o2) = (l[(j + 2) % 4], l[(j + 3) % 4]);
        r.infinity[j] = (p - q).abs() >= (o1 - o2).abs();
        r.zero[j] = p + q <= o1 + o2;
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchSummary {
    pub branch_id: usize,
    pub kind: ParamKind,
    /// A closed loop on its own, rather than an arc or a line.
    pub compact: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TopologyReport {
    pub class: LinkageClass,
    pub finite_branches: Vec<BranchSummary>,
    pub infinity_circles: usize,
    /// Reachable isolated points at infinity.
    pub infinity_points: usize,
    pub grashof: Grashof,
    pub reachability: Reachability,
}

impl TopologyReport {
    pub fn fully_rotating_joints(&self) -> Vec<char> {
        let names = ['x', 'y', 'z', 'w'];
        let f = self.reachability.fully_rotating();
        (0..4).filter(|&i| f[i]).map(|i| names[i]).collect()
    }
}

pub fn topology_report(lengths: &BarLengths) -> Result<TopologyReport> {
    let branches = enumerate_branches(lengths)?;
    let finite_branches = branches
        .iter()
        .filter(|b| b.param_kind != ParamKind::InfinityCircle)
        .map(|b| BranchSummary { branch_id: b.branch_id, kind: b.param_kind, compact: b.domain.is_compact() })
        .collect();
    let inf = solutions_at_infinity(lengths);
    let infinity_circles = inf.iter().filter(|s| matches!(s.kind, InfinityKind::Circle { .. })).count();
    let infinity_points = inf.iter().filter(|s| s.kind == InfinityKind::Isolated && s.reachable).count();
    Ok(TopologyReport {
        class: classify(lengths, DEFAULT_CLASS_TOL),
        finite_branches,
        infinity_circles,
        infinity_points,
        grashof: grashof(lengths),
        reachability: reachability(lengths),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lengths::validate_lengths;
    use crate::proj::ProjReal;
    use crate::ClassKind;

    fn l(a: f64, b: f64, c: f64, d: f64) -> BarLengths {
        validate_lengths(a, b, c, d).unwrap()
    }

    #[test]
    fn grashof_examples() {
        let g = grashof(&l(1.0, 2.0, 3.0, 3.5));
        assert!(g.holds);
        assert!((g.margin - 0.25).abs() < 1e-15);
        assert!(!grashof(&l(2.0, 3.0, 4.0, 6.0)).holds);
        assert_eq!(grashof(&l(1.0, 1.0, 1.0, 1.0)), Grashof { holds: false, margin: 0.0 });
    }

    #[test]
    fn sign_patterns() {
        let lengths = l(2.0, 1.0, 2.0, 1.0);
        let mk = |t: [f64; 4]| Configuration::from_tangents(&lengths, t.map(ProjReal::from_f64));
        assert!(is_self_intersected(&mk([1.0, 1.0, -1.0, -1.0])).unwrap());
        assert!(!is_self_intersected(&mk([1.0, 1.0, 1.0, 1.0])).unwrap());
        let butterfly = mk([1.0, 3.0, -1.0, -3.0]);
        assert!(is_self_intersected(&butterfly).unwrap());
        assert!(segment_oracle(&butterfly));
        assert_eq!(is_self_intersected(&mk([0.0, 1.0, 1.0, 1.0])), Err(Error::AngleAtInfinityOrZero));
    }

    #[test]
    fn segments() {
        assert!(segments_intersect([0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]));
        assert!(!segments_intersect([0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]));
        assert!(segments_intersect([0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [1.0, 1.0]));
    }

    #[test]
    fn reports() {
        let r = topology_report(&l(1.0, 1.0, 1.0, 1.0)).unwrap();
        assert_eq!(r.class.kind, ClassKind::Rhombus);
        assert_eq!((r.finite_branches.len(), r.infinity_circles, r.infinity_points), (1, 2, 0));
        assert!(!r.grashof.holds);
        let i = topology_report(&l(2.0, 1.0, 2.0, 1.0)).unwrap();
        assert_eq!((i.finite_branches.len(), i.infinity_points), (2, 2));
        let e = topology_report(&l(1.0, 2.0, 3.0, 3.5)).unwrap();
        assert!(e.finite_branches.iter().all(|b| b.compact));
        // the shortest bar α sits between joints w and x
        assert_eq!(e.fully_rotating_joints(), ['x', 'w']);
    }
}
