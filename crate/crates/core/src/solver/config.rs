//! Configurations and the coordinate closure oracle.
//!
//! Vertices: `D` at the origin, `A = (β, 0)`, `B = A + γ(cos ρy, sin ρy)`,
//! `C = (−α cos ρx, α sin ρx)`. Each rotational angle is the signed turning
//! angle of the boundary `D → A → B → C → D` at its joint (`ρx` at `D`, `ρy`
//! at `A`, `ρz` at `B`, `ρw` at `C`), so a convex counter-clockwise
//! quadrilateral has all four angles positive.

use crate::coeffs::{eval_f, eval_g, AdjCoeffs, OppCoeffs};
use crate::lengths::BarLengths;
use crate::proj::ProjReal;

pub type Point = [f64; 2];

/// Output of [`closure_oracle`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Closure {
    /// `||B − C| − δ|`.
    pub residual: f64,
    pub rho_z: f64,
    pub rho_w: f64,
    /// `[A, B, C, D]`.
    pub vertices: [Point; 4],
}

fn sub(p: Point, q: Point) -> Point {
    [p[0] - q[0], p[1] - q[1]]
}

/// Signed angle turning `a` into `b`, in `(−π, π]`.
fn turning(a: Point, b: Point) -> f64 {
    let r = (a[0] * b[1] - a[1] * b[0]).atan2(a[0] * b[0] + a[1] * b[1]);
    if r == -std::f64::consts::PI {
        -r
    } else {
        r
    }
}

pub(crate) fn vertices(lengths: &BarLengths, rho_x: f64, rho_y: f64) -> [Point; 4] {
    let [a, b, c, _] = lengths.as_array();
    let pa = [b, 0.0];
    let pb = [b + c * rho_y.cos(), c * rho_y.sin()];
    let pc = [-a * rho_x.cos(), a * rho_x.sin()];
    [pa, pb, pc, [0.0, 0.0]]
}

/// Places the linkage from `ρx`, `ρy`, measures how far `|BC|` is from `δ`
/// and reads `ρz`, `ρw` off the resulting vertices.
pub fn closure_oracle(lengths: &BarLengths, rho_x: f64, rho_y: f64) -> Closure {
    let v = vertices(lengths, rho_x, rho_y);
    let [pa, pb, pc, pd] = v;
    let bc = sub(pc, pb);
    Closure {
        residual: (bc[0].hypot(bc[1]) - lengths.delta()).abs(),
        rho_z: turning(sub(pb, pa), bc),
        rho_w: turning(bc, sub(pd, pc)),
        vertices: v,
    }
}

/// A point of the configuration space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Configuration {
    pub x: ProjReal,
    pub y: ProjReal,
    pub z: ProjReal,
    pub w: ProjReal,
    /// `[ρx, ρy, ρz, ρw]`, each in `(−π, π]`.
    pub rho: [f64; 4],
    /// `[A, B, C, D]`.
    pub vertices: [Point; 4],
}

impl Configuration {
    /// Builds from tangents; vertices come from `x` and `y`.
    pub fn from_tangents(lengths: &BarLengths, t: [ProjReal; 4]) -> Self {
        let rho = t.map(|p| p.angle());
        Configuration {
            x: t[0],
            y: t[1],
            z: t[2],
            w: t[3],
            rho,
            vertices: vertices(lengths, rho[0], rho[1]),
        }
    }

    pub fn tangents(&self) -> [ProjReal; 4] {
        [self.x, self.y, self.z, self.w]
    }

    /// Diagonal `|C − A|`.
    pub fn u(&self) -> f64 {
        let d = sub(self.vertices[2], self.vertices[0]);
        d[0].hypot(d[1])
    }

    /// Diagonal `|B − D|`.
    pub fn v(&self) -> f64 {
        let d = sub(self.vertices[1], self.vertices[3]);
        d[0].hypot(d[1])
    }

    /// `||B − C| − δ|`.
    pub fn closure_residual(&self, lengths: &BarLengths) -> f64 {
        let d = sub(self.vertices[2], self.vertices[1]);
        (d[0].hypot(d[1]) - lengths.delta()).abs()
    }

    /// The four adjacent relations `f` (`xy, yz, zw, wx`) followed by the two
    /// opposite relations `g` (`xz, yw`), on normalized representatives.
    pub fn relation_residuals(&self, lengths: &BarLengths) -> [f64; 6] {
        relation_residuals(lengths.as_array(), self.tangents())
    }

    /// Largest projective distance between the stored `z`, `w` and the ones
    /// read off the vertices.
    pub fn geometric_mismatch(&self, lengths: &BarLengths) -> f64 {
        let c = closure_oracle(lengths, self.rho[0], self.rho[1]);
        let dz = ProjReal::from_angle(c.rho_z).distance(&self.z);
        let dw = ProjReal::from_angle(c.rho_w).distance(&self.w);
        dz.max(dw)
    }
}

pub(crate) fn relation_residuals(l: [f64; 4], t: [ProjReal; 4]) -> [f64; 6] {
    let rot = |k: usize| {
        let mut r = l;
        r.rotate_left(k);
        r
    };
    let [x, y, z, w] = t;
    [
        eval_f(&AdjCoeffs::from_signed(rot(0)), x, y),
        eval_f(&AdjCoeffs::from_signed(rot(1)), y, z),
        eval_f(&AdjCoeffs::from_signed(rot(2)), z, w),
        eval_f(&AdjCoeffs::from_signed(rot(3)), w, x),
        eval_g(&OppCoeffs::from_signed(rot(0)), x, z),
        eval_g(&OppCoeffs::from_signed(rot(1)), y, w),
    ]
}
