//! Post-examination: every configuration with a prescribed `x`.

use crate::coeffs::{f_coeffs, g_coeffs, solve_f_for_second, solve_g_for_opposite, AdjCoeffs};
use crate::lengths::BarLengths;
use crate::proj::ProjReal;

use super::branches::ACCEPT_TOL;
use super::config::{closure_oracle, Configuration};

/// All configurations with the given `x`.
///
/// Candidates for `y`, `z` and `w` come from `f(α,β,γ,δ; x,y)`,
/// `g(α,β,γ,δ; x,z)` and `f(β,α,δ,γ; x,w)`. A candidate tuple is kept when
/// the linkage placed from `ρx`, `ρy` closes, its `z`, `w` agree with the
/// geometric angles, and the remaining permuted relations vanish, all within
/// [`ACCEPT_TOL`]. Generic `x` have zero or two solutions; a tangency (or a
/// rhombus joint folding onto a neighbour) changes the count.
pub fn solve_at_x(lengths: &BarLengths, x: ProjReal) -> Vec<Configuration> {
    let [a, b, c, d] = lengths.as_array();
    let roots = |r: crate::Result<crate::coeffs::Roots>| r.map(|r| r.into_vec()).unwrap_or_default();
    let ys = roots(solve_f_for_second(&f_coeffs(lengths), x));
    let zs = roots(solve_g_for_opposite(&g_coeffs(lengths), x));
    let ws = roots(solve_f_for_second(&AdjCoeffs::from_signed([b, a, d, c]), x));
    let s = lengths.sigma();
    let mut out: Vec<Configuration> = Vec::new();
    for &y in &ys {
        let geo = closure_oracle(lengths, x.angle(), y.angle());
        if geo.residual > ACCEPT_TOL * s {
            continue;
        }
        for &z in &zs {
            for &w in &ws {
                let cfg = Configuration::from_tangents(lengths, [x, y, z, w]);
                if cfg.geometric_mismatch(lengths) > ACCEPT_TOL {
                    continue;
                }
                let rel = cfg.relation_residuals(lengths);
                if rel.iter().any(|r| r.abs() > ACCEPT_TOL * s * s) {
                    continue;
                }
                // near a double point the roots split by about √ε, so
                // anything closer than the acceptance tolerance is one solution
                let score = cfg.geometric_mismatch(lengths);
                match out.iter_mut().find(|o| {
                    o.tangents().iter().zip(cfg.tangents().iter()).all(|(p, q)| p.distance(q) < ACCEPT_TOL)
                }) {
                    Some(o) if o.geometric_mismatch(lengths) > score => *o = cfg,
                    Some(_) => {}
                    None => out.push(cfg),
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lengths::validate_lengths;

    fn p(v: f64) -> ProjReal {
        ProjReal::from_f64(v)
    }

    fn has(out: &[Configuration], t: [ProjReal; 4]) -> bool {
        out.iter().any(|c| c.tangents().iter().zip(&t).all(|(a, b)| a.distance(b) < 1e-12))
    }

    #[test]
    fn rhombus_at_two() {
        let l = validate_lengths(1.0, 1.0, 1.0, 1.0).unwrap();
        let out = solve_at_x(&l, p(2.0));
        assert!(has(&out, [p(2.0), p(0.5), p(2.0), p(0.5)]));
        // the second solution lies on the circle where y and w are folded flat
        assert!(has(&out, [p(2.0), ProjReal::INFINITY, p(-2.0), ProjReal::INFINITY]));
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn isogram_at_one() {
        let l = validate_lengths(2.0, 1.0, 2.0, 1.0).unwrap();
        let out = solve_at_x(&l, p(1.0));
        assert_eq!(out.len(), 2);
        assert!(has(&out, [p(1.0); 4]));
        assert!(has(&out, [p(1.0), p(3.0), p(-1.0), p(-3.0)]));
    }

    #[test]
    fn deltoid_two_unreachable() {
        let l = validate_lengths(2.0, 2.0, 1.0, 1.0).unwrap();
        assert!(solve_at_x(&l, p(0.0)).is_empty());
        assert!(solve_at_x(&l, p(1.5)).is_empty());
        assert!(!solve_at_x(&l, p(2.0)).is_empty());
    }
}
