//! Square roots that keep track of whether they landed on the real or the
//! imaginary axis.
//!
//! `signed_sqrt(a)` is `√a` for `a ≥ 0` and `i·√(−a)` otherwise. Amplitudes
//! and phase shifts are products and quotients of such roots, so they never
//! leave the two axes and can be stored as a signed real coefficient plus an
//! axis tag.

use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Real,
    Imaginary,
}

/// The number `coeff` (on [`Axis::Real`]) or `i·coeff` (on
/// [`Axis::Imaginary`]). `coeff` may be negative after multiplication.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedValue {
    pub coeff: f64,
    pub axis: Axis,
}

impl SignedValue {
    pub const fn real(coeff: f64) -> Self {
        Self { coeff, axis: Axis::Real }
    }

    pub const fn imaginary(coeff: f64) -> Self {
        Self { coeff, axis: Axis::Imaginary }
    }

    pub fn is_real(&self) -> bool {
        self.axis == Axis::Real
    }

    /// `|self|`.
    pub fn magnitude(&self) -> f64 {
        self.coeff.abs()
    }

    /// Always real: `coeff²` or `−coeff²`.
    pub fn square(&self) -> f64 {
        match self.axis {
            Axis::Real => self.coeff * self.coeff,
            Axis::Imaginary => -self.coeff * self.coeff,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self.axis {
            Axis::Real => Complex64::new(self.coeff, 0.0),
            Axis::Imaginary => Complex64::new(0.0, self.coeff),
        }
    }
}

/// `√a` for `a ≥ 0`, `i·√(−a)` for `a < 0`.
pub fn signed_sqrt(a: f64) -> SignedValue {
    if a >= 0.0 {
        SignedValue::real(a.sqrt())
    } else {
        SignedValue::imaginary((-a).sqrt())
    }
}

impl Mul for SignedValue {
    type Output = SignedValue;

    fn mul(self, rhs: SignedValue) -> SignedValue {
        let coeff = self.coeff * rhs.coeff;
        match (self.axis, rhs.axis) {
            (Axis::Imaginary, Axis::Imaginary) => SignedValue::real(-coeff),
            (a, Axis::Real) => SignedValue { coeff, axis: a },
            (Axis::Real, b) => SignedValue { coeff, axis: b },
        }
    }
}

impl Div for SignedValue {
    type Output = SignedValue;

    /// `(i a)/(i b) = a/b`, `a/(i b) = −i a/b`.
    fn div(self, rhs: SignedValue) -> SignedValue {
        let coeff = self.coeff / rhs.coeff;
        match (self.axis, rhs.axis) {
            (a, Axis::Real) => SignedValue { coeff, axis: a },
            (Axis::Imaginary, Axis::Imaginary) => SignedValue::real(coeff),
            (Axis::Real, Axis::Imaginary) => SignedValue::imaginary(-coeff),
        }
    }
}

impl Neg for SignedValue {
    type Output = SignedValue;

    fn neg(self) -> SignedValue {
        SignedValue { coeff: -self.coeff, axis: self.axis }
    }
}

impl Mul<f64> for SignedValue {
    type Output = SignedValue;

    fn mul(self, rhs: f64) -> SignedValue {
        SignedValue { coeff: self.coeff * rhs, axis: self.axis }
    }
}

impl SignedValue {
    /// Multiplication by `i`.
    pub fn times_i(self) -> SignedValue {
        match self.axis {
            Axis::Real => SignedValue::imaginary(self.coeff),
            Axis::Imaginary => SignedValue::real(-self.coeff),
        }
    }
}

impl fmt::Display for SignedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis {
            Axis::Real => write!(f, "{}", self.coeff),
            Axis::Imaginary => write!(f, "{}i", self.coeff),
        }
    }
}
