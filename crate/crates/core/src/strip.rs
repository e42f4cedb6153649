//! Switching a strip: a sign/inversion correspondence between a linkage and
//! one with two negated bars.
//!
//! | variant | lengths | tangents |
//! |---|---|---|
//! | 1 | `(α, β, −γ, −δ)` | `(x, −1/y, −z, −1/w)` |
//! | 2 | `(−α, β, γ, −δ)` | `(−1/x, y, −1/z, −w)` |
//! | 3 | `(−α, −β, γ, δ)` | `(−x, −1/y, z, −1/w)` |
//! | 4 | `(α, −β, −γ, δ)` | `(−1/x, −y, −1/z, w)` |
//!
//! Every variant is an involution. Numerically it carries both opposite-angle
//! relations `g` over to the signed lengths, together with the two adjacent
//! relations at the joint whose tangent is left unchanged (`x` for variant 1,
//! `y` for 2, `z` for 3, `w` for 4). The other two adjacent relations are not
//! preserved, see the tests.

use crate::proj::ProjReal;
use crate::{Error, Result};

/// Applies `variant` to signed lengths and a tangent tuple.
pub fn switch_strip(
    lengths: [f64; 4],
    config: [ProjReal; 4],
    variant: u8,
) -> Result<([f64; 4], [ProjReal; 4])> {
    let [a, b, c, d] = lengths;
    let [x, y, z, w] = config;
    let flip = |p: ProjReal| -p.recip();
    Ok(match variant {
        1 => ([a, b, -c, -d], [x, flip(y), -z, flip(w)]),
        2 => ([-a, b, c, -d], [flip(x), y, flip(z), -w]),
        3 => ([-a, -b, c, d], [-x, flip(y), z, flip(w)]),
        4 => ([a, -b, -c, d], [flip(x), -y, flip(z), w]),
        v => return Err(Error::InvalidVariant(v)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{eval_f, eval_g, AdjCoeffs, OppCoeffs};
    use crate::lengths::validate_lengths;

    fn p(v: f64) -> ProjReal {
        ProjReal::from_f64(v)
    }

    #[test]
    fn rhombus_variant_three() {
        let cfg = [p(2.0), p(0.5), p(2.0), p(0.5)];
        let (l, t) = switch_strip([1.0; 4], cfg, 3).unwrap();
        assert_eq!(l, [-1.0, -1.0, 1.0, 1.0]);
        assert_eq!(t, [p(-2.0), p(-2.0), p(2.0), p(-2.0)]);
    }

    #[test]
    fn variant_two_sends_zero_to_infinity() {
        let (_, t) = switch_strip([1.0; 4], [ProjReal::ZERO; 4], 2).unwrap();
        assert_eq!(t[0], ProjReal::INFINITY);
    }

    #[test]
    fn involution() {
        let cfg = [p(0.3), p(-1.7), ProjReal::INFINITY, p(0.0)];
        let l = [2.0, 3.0, 4.0, 6.0];
        for v in 1..=4 {
            let (l1, c1) = switch_strip(l, cfg, v).unwrap();
            let (l2, c2) = switch_strip(l1, c1, v).unwrap();
            assert_eq!(l2, l);
            for (a, b) in c2.iter().zip(&cfg) {
                assert!(a.distance(b) < 1e-15);
            }
        }
        assert_eq!(switch_strip(l, cfg, 5), Err(Error::InvalidVariant(5)));
    }

    #[test]
    fn preserved_relations() {
        let lengths = validate_lengths(2.0, 3.0, 4.0, 6.0).unwrap();
        let rx = 0.9;
        let conf = crate::solver::solve_at_x(&lengths, ProjReal::from_angle(rx));
        assert!(!conf.is_empty());
        let t = conf[0].tangents();
        for v in 1..=4u8 {
            let (l, [x, y, z, w]) = switch_strip(lengths.as_array(), t, v).unwrap();
            let rot = |k: usize| {
                let mut r = l;
                r.rotate_left(k);
                r
            };
            let rel = [
                eval_f(&AdjCoeffs::from_signed(rot(0)), x, y),
                eval_f(&AdjCoeffs::from_signed(rot(1)), y, z),
                eval_f(&AdjCoeffs::from_signed(rot(2)), z, w),
                eval_f(&AdjCoeffs::from_signed(rot(3)), w, x),
                eval_g(&OppCoeffs::from_signed(rot(0)), x, z),
                eval_g(&OppCoeffs::from_signed(rot(1)), y, w),
            ];
            // adjacent relations at the fixed joint, indexed as above
            let kept = match v {
                1 => [0, 3],
                2 => [0, 1],
                3 => [1, 2],
                _ => [2, 3],
            };
            for i in [kept[0], kept[1], 4, 5] {
                assert!(rel[i].abs() < 1e-10, "variant {v} relation {i}: {}", rel[i]);
            }
            let lost = (0..4).filter(|i| !kept.contains(i)).map(|i| rel[i].abs()).fold(0.0, f64::max);
            assert!(lost > 1e-3, "variant {v} unexpectedly preserves every relation");
        }
    }
}
