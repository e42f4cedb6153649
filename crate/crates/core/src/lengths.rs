//! Bar lengths, their validation and the eight-class taxonomy.

use std::fmt;

use crate::{Error, Result};

/// Default relative tolerance used by [`classify`].
pub const DEFAULT_CLASS_TOL: f64 = 1e-9;

/// Names the four bars, counter-clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bar {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bar::Alpha => "alpha",
            Bar::Beta => "beta",
            Bar::Gamma => "gamma",
            Bar::Delta => "delta",
        })
    }
}

/// Validated lengths `(α, β, γ, δ)`. Each bar is strictly shorter than the
/// other three together.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BarLengths {
    l: [f64; 4],
    sigma: f64,
}

/// Checks positivity and the four quadrilateral inequalities.
pub fn validate_lengths(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<BarLengths> {
    let l = [alpha, beta, gamma, delta];
    let bars = [Bar::Alpha, Bar::Beta, Bar::Gamma, Bar::Delta];
    for (&v, &bar) in l.iter().zip(&bars) {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::NonPositiveLength { bar, value: v });
        }
    }
    let total: f64 = l.iter().sum();
    for (&v, &bar) in l.iter().zip(&bars) {
        if v >= total - v {
            return Err(Error::QuadrilateralInequalityViolated { bar });
        }
    }
    Ok(BarLengths { l, sigma: total / 2.0 })
}

impl BarLengths {
    pub fn alpha(&self) -> f64 {
        self.l[0]
    }
    pub fn beta(&self) -> f64 {
        self.l[1]
    }
    pub fn gamma(&self) -> f64 {
        self.l[2]
    }
    pub fn delta(&self) -> f64 {
        self.l[3]
    }
    /// Semi-perimeter.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
    pub fn as_array(&self) -> [f64; 4] {
        self.l
    }

    /// Relabels so that `(β, γ, δ, α)` become the new `(α, β, γ, δ)`, applied
    /// `k` times. The tangents follow as `x → y → z → w`.
    pub fn rotated(&self, k: usize) -> BarLengths {
        let mut l = self.l;
        l.rotate_left(k % 4);
        BarLengths { l, sigma: self.sigma }
    }

    /// `d₁, d₂, d₃`, the three linear forms whose zeros define the classes.
    pub fn degeneracy_forms(&self) -> [f64; 3] {
        let [a, b, c, d] = self.l;
        [a - b + c - d, a - b - c + d, a + b - c - d]
    }

    pub fn min(&self) -> f64 {
        self.l.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.l.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

impl fmt::Display for BarLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.l;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Rhombus,
    Isogram,
    DeltoidI,
    DeltoidII,
    ConicI,
    ConicII,
    ConicIII,
    Elliptic,
}

impl ClassKind {
    pub const ALL: [ClassKind; 8] = [
        ClassKind::Rhombus,
        ClassKind::Isogram,
        ClassKind::DeltoidI,
        ClassKind::DeltoidII,
        ClassKind::ConicI,
        ClassKind::ConicII,
        ClassKind::ConicIII,
        ClassKind::Elliptic,
    ];

    /// Stable lower-case identifier used on the wire.
    pub fn name(&self) -> &'static str {
        match self {
            ClassKind::Rhombus => "rhombus",
            ClassKind::Isogram => "isogram",
            ClassKind::DeltoidI => "deltoid_i",
            ClassKind::DeltoidII => "deltoid_ii",
            ClassKind::ConicI => "conic_i",
            ClassKind::ConicII => "conic_ii",
            ClassKind::ConicIII => "conic_iii",
            ClassKind::Elliptic => "elliptic",
        }
    }

    pub fn is_conic(&self) -> bool {
        matches!(self, ClassKind::ConicI | ClassKind::ConicII | ClassKind::ConicIII)
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkageClass {
    pub kind: ClassKind,
    /// Only ever set for [`ClassKind::Elliptic`].
    pub orthodiagonal: bool,
}

/// Classifies by which of `d₁, d₂, d₃` vanish, each compared against
/// `rel_tol · σ`. Elliptic linkages are also tested for perpendicular
/// diagonals, `α² + γ² = β² + δ²` within `rel_tol · σ²`.
pub fn classify(lengths: &BarLengths, rel_tol: f64) -> LinkageClass {
    let s = lengths.sigma();
    let z = lengths.degeneracy_forms().map(|d| d.abs() <= rel_tol * s);
    let kind = match z {
        [true, true, true] => ClassKind::Rhombus,
        [false, true, true] => ClassKind::Isogram,
        [true, false, true] => ClassKind::DeltoidI,
        [true, true, false] => ClassKind::DeltoidII,
        [true, false, false] => ClassKind::ConicI,
        [false, true, false] => ClassKind::ConicII,
        [false, false, true] => ClassKind::ConicIII,
        [false, false, false] => ClassKind::Elliptic,
    };
    let [a, b, c, d] = lengths.as_array();
    let orthodiagonal =
        kind == ClassKind::Elliptic && (a * a + c * c - b * b - d * d).abs() <= rel_tol * s * s;
    LinkageClass { kind, orthodiagonal }
}

/// The conjugate linkage `(σ−α, σ−β, σ−γ, σ−δ)`. It shares the diagonal
/// relation `h` with the original.
pub fn conjugate(lengths: &BarLengths) -> BarLengths {
    let s = lengths.sigma();
    let [a, b, c, d] = lengths.as_array();
    let out = validate_lengths(s - a, s - b, s - c, s - d);
    // (σ−b)+(σ−c)+(σ−d) − (σ−a) = 2a > 0, and σ−a > 0 by validity.
    out.expect("the conjugate of a valid linkage is valid")
}
