//! The three coupling polynomials.
//!
//! * `f(α,β,γ,δ; x,y) = f22·x²y² + f20·x² + 2f11·xy + f02·y² + f00` links
//!   adjacent tangents.
//! * `g(α,β,γ,δ; x,z) = g22·x²z² + g20·x² + g02·z² + g00` links opposite ones.
//! * `h(u,v) = u⁴v² + u²v⁴ + h11·u²v² + h10·u² + h01·v² + h00` links the two
//!   diagonal lengths.
//!
//! Coefficients accept signed lengths (`[f64; 4]`) because the strip switch
//! and the conic reductions work with negated bars. Evaluation is on
//! bihomogeneous representatives so `∞` needs no special casing. Note that
//! the `f02` monomial is `x₂²y₁²`, symmetric to `f20·x₁²y₂²`.

use crate::lengths::BarLengths;
use crate::proj::ProjReal;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdjCoeffs {
    pub f22: f64,
    pub f20: f64,
    pub f11: f64,
    pub f02: f64,
    pub f00: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OppCoeffs {
    pub g22: f64,
    pub g20: f64,
    pub g02: f64,
    pub g00: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagCoeffs {
    pub h11: f64,
    pub h10: f64,
    pub h01: f64,
    pub h00: f64,
}

fn semi(l: &[f64; 4]) -> f64 {
    l.iter().sum::<f64>() / 2.0
}

impl AdjCoeffs {
    /// Semi-perimeter factored form.
    pub fn from_signed(l: [f64; 4]) -> Self {
        let [a, b, c, d] = l;
        let s = semi(&l);
        Self {
            f22: (s - b) * (s - b - d),
            f20: (s - a) * (s - a - d),
            f11: -a * c,
            f02: (s - c) * (s - c - d),
            f00: s * (s - d),
        }
    }

    /// Product-of-linear-forms version, kept as an independent cross-check.
    pub fn expanded(l: [f64; 4]) -> Self {
        let [a, b, c, d] = l;
        Self {
            f22: (a - b + c + d) * (a - b + c - d) / 4.0,
            f20: (-a + b + c + d) * (-a + b + c - d) / 4.0,
            f11: -a * c,
            f02: (a + b - c - d) * (a + b - c + d) / 4.0,
            f00: (a + b + c + d) * (a + b + c - d) / 4.0,
        }
    }

    pub fn as_array(&self) -> [f64; 5] {
        [self.f22, self.f20, self.f11, self.f02, self.f00]
    }
}

impl OppCoeffs {
    pub fn from_signed(l: [f64; 4]) -> Self {
        let [a, b, c, d] = l;
        let s = semi(&l);
        Self {
            g22: (s - a - c) * (s - b - c),
            g20: (s - a) * (s - b),
            g02: -(s - c) * (s - d),
            g00: s * (s - a - b),
        }
    }

    pub fn expanded(l: [f64; 4]) -> Self {
        let [a, b, c, d] = l;
        Self {
            g22: (a - b + c - d) * (-a + b + c - d) / 4.0,
            g20: (-a + b + c + d) * (a - b + c + d) / 4.0,
            g02: (-a - b + c - d) * (a + b + c - d) / 4.0,
            g00: (a + b + c + d) * (-a - b + c + d) / 4.0,
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.g22, self.g20, self.g02, self.g00]
    }
}

impl DiagCoeffs {
    pub fn from_signed(l: [f64; 4]) -> Self {
        let [a, b, c, d] = l.map(|v| v * v);
        Self {
            h11: -(a + b + c + d),
            h10: -(b - c) * (d - a),
            h01: -(a - b) * (c - d),
            h00: (a * c - b * d) * (a - b + c - d),
        }
    }

    /// The same coefficients written through the semi-perimeter, which is
    /// what makes them visibly conjugation invariant.
    pub fn expanded(l: [f64; 4]) -> Self {
        let [a, b, c, d] = l;
        let s = semi(&l);
        let sq = |v: f64| v * v;
        let (sa, sb, sc, sd) = (s - a, s - b, s - c, s - d);
        // β²−γ² = (β−γ)(β+γ) with β+γ = (σ−α)+(σ−δ), and so on
        Self {
            h11: -(sq(sa) + sq(sb) + sq(sc) + sq(sd)),
            h10: -((sc - sb) * (sa + sd)) * ((sa - sd) * (sb + sc)),
            h01: -((sb - sa) * (sc + sd)) * ((sd - sc) * (sa + sb)),
            h00: 0.5
                * (sq(sb) + sq(sd) - sq(sa) - sq(sc))
                * (sa * sc + sb * sd)
                * ((sb - sa) * (sc + sd) + (sd - sc) * (sa + sb)),
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.h11, self.h10, self.h01, self.h00]
    }
}

pub fn f_coeffs(lengths: &BarLengths) -> AdjCoeffs {
    AdjCoeffs::from_signed(lengths.as_array())
}

pub fn g_coeffs(lengths: &BarLengths) -> OppCoeffs {
    OppCoeffs::from_signed(lengths.as_array())
}

pub fn h_coeffs(lengths: &BarLengths) -> DiagCoeffs {
    DiagCoeffs::from_signed(lengths.as_array())
}

/// `f` on normalized representatives.
pub fn eval_f(c: &AdjCoeffs, x: ProjReal, y: ProjReal) -> f64 {
    let (x1, x2, y1, y2) = (x.num(), x.den(), y.num(), y.den());
    c.f22 * x1 * x1 * y1 * y1
        + c.f20 * x1 * x1 * y2 * y2
        + 2.0 * c.f11 * x1 * y1 * x2 * y2
        + c.f02 * x2 * x2 * y1 * y1
        + c.f00 * x2 * x2 * y2 * y2
}

pub fn eval_g(c: &OppCoeffs, x: ProjReal, z: ProjReal) -> f64 {
    let (x1, x2, z1, z2) = (x.num(), x.den(), z.num(), z.den());
    c.g22 * x1 * x1 * z1 * z1 + c.g20 * x1 * x1 * z2 * z2 + c.g02 * x2 * x2 * z1 * z1 + c.g00 * x2 * x2 * z2 * z2
}

/// `h` at diagonal lengths `u`, `v`.
pub fn eval_h(c: &DiagCoeffs, u: f64, v: f64) -> f64 {
    let (u2, v2) = (u * u, v * v);
    u2 * u2 * v2 + u2 * v2 * v2 + c.h11 * u2 * v2 + c.h10 * u2 + c.h01 * v2 + c.h00
}

/// Real roots of a binary quadratic form.
#[derive(Clone, Debug, PartialEq)]
pub enum Roots {
    /// One or two distinct real roots; a double root is listed once.
    Real(Vec<ProjReal>),
    /// The roots are a complex-conjugate pair.
    NoRealSolution,
}

impl Roots {
    pub fn into_vec(self) -> Vec<ProjReal> {
        match self {
            Roots::Real(v) => v,
            Roots::NoRealSolution => Vec::new(),
        }
    }
}

// Relative size below which a discriminant counts as zero.
const DISC_TOL: f64 = 1e-10;

/// Roots `t₁ : t₂` of `a·t₁² + 2b·t₁t₂ + c·t₂² = 0`.
pub(crate) fn binary_quadratic(a: f64, b: f64, c: f64) -> Result<Roots> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return Err(Error::DegenerateIdentically);
    }
    let (a, b, c) = (a / scale, b / scale, c / scale);
    let mut disc = b * b - a * c;
    if disc < -DISC_TOL {
        return Ok(Roots::NoRealSolution);
    }
    // b² − ac carries rounding noise of a few ulps; keep it from splitting
    // a double root by √ε
    if disc < 8.0 * f64::EPSILON {
        disc = 0.0;
    }
    let sq = disc.sqrt();
    // q carries the sign of b so no cancellation happens
    let q = -(b + if b >= 0.0 { sq } else { -sq });
    let mut out = Vec::with_capacity(2);
    if q == 0.0 {
        // b = 0 and a·c ≈ 0: a double root at 0 or at ∞
        out.push(if a.abs() < c.abs() { ProjReal::INFINITY } else { ProjReal::ZERO });
    } else {
        out.push(ProjReal::ratio(q, a));
        let r = ProjReal::ratio(c, q);
        if r.distance(&out[0]) > 1e-12 {
            out.push(r);
        }
    }
    Ok(Roots::Real(out))
}

/// Solves `f(x, ·) = 0` for the adjacent tangent.
pub fn solve_f_for_second(c: &AdjCoeffs, x: ProjReal) -> Result<Roots> {
    let (x1, x2) = (x.num(), x.den());
    binary_quadratic(
        c.f22 * x1 * x1 + c.f02 * x2 * x2,
        c.f11 * x1 * x2,
        c.f20 * x1 * x1 + c.f00 * x2 * x2,
    )
}

/// Solves `g(x, ·) = 0`, i.e. `z² = −(g20x² + g00)/(g22x² + g02)`.
pub fn solve_g_for_opposite(c: &OppCoeffs, x: ProjReal) -> Result<Roots> {
    let (x1, x2) = (x.num(), x.den());
    let lead = c.g22 * x1 * x1 + c.g02 * x2 * x2;
    let tail = c.g20 * x1 * x1 + c.g00 * x2 * x2;
    binary_quadratic(lead, 0.0, tail)
}
