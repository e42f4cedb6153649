//! The real projective line `ℝ ∪ {∞}`.
//!
//! A [`ProjReal`] is stored as a ratio `num : den` scaled so that the larger
//! component has magnitude one and `den ≥ 0`. Both infinities are the single
//! point `1 : 0`.

use std::f64::consts::PI;
use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjReal {
    num: f64,
    den: f64,
}

impl ProjReal {
    pub const ZERO: ProjReal = ProjReal { num: 0.0, den: 1.0 };
    pub const ONE: ProjReal = ProjReal { num: 1.0, den: 1.0 };
    pub const INFINITY: ProjReal = ProjReal { num: 1.0, den: 0.0 };

    /// Builds `num : den`, rejecting `0 : 0` and non-finite components.
    pub fn new(num: f64, den: f64) -> Result<Self> {
        if !num.is_finite() || !den.is_finite() || (num == 0.0 && den == 0.0) {
            return Err(Error::InvalidProjective { num, den });
        }
        Ok(Self::normalize(num, den))
    }

    /// Like [`ProjReal::new`] for callers that already guarantee validity.
    pub(crate) fn ratio(num: f64, den: f64) -> Self {
        debug_assert!(num.is_finite() && den.is_finite() && (num != 0.0 || den != 0.0));
        Self::normalize(num, den)
    }

    fn normalize(num: f64, den: f64) -> Self {
        let m = num.abs().max(den.abs());
        let (mut n, mut d) = (num / m, den / m);
        if d < 0.0 {
            n = -n;
            d = -d;
        }
        if d == 0.0 {
            return Self::INFINITY;
        }
        // -0.0 would otherwise leak into equality and printing
        Self { num: n + 0.0, den: d + 0.0 }
    }

    /// The affine value `v`, with either infinity mapped to `∞`.
    ///
    /// # Panics
    /// On NaN.
    pub fn from_f64(v: f64) -> Self {
        assert!(!v.is_nan(), "NaN is not a projective real");
        if v.is_infinite() {
            Self::INFINITY
        } else {
            Self::normalize(v, 1.0)
        }
    }

    /// `tan(ρ/2)` for a rotational angle `ρ`.
    pub fn from_angle(rho: f64) -> Self {
        let h = rho / 2.0;
        Self::ratio(h.sin(), h.cos())
    }

    pub fn num(&self) -> f64 {
        self.num
    }

    pub fn den(&self) -> f64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0.0
    }

    /// The affine value, `f64::INFINITY` at `∞`.
    pub fn value(&self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.num / self.den
        }
    }

    /// The rotational angle `ρ ∈ (−π, π]` with `tan(ρ/2)` equal to `self`.
    pub fn angle(&self) -> f64 {
        let r = 2.0 * self.num.atan2(self.den);
        if r <= -PI {
            r + 2.0 * PI
        } else {
            r
        }
    }

    pub fn recip(&self) -> Self {
        Self::normalize(self.den, self.num)
    }

    /// `c · self`; `c = 0` sends every finite point to zero and keeps `∞`.
    pub fn scale(&self, c: f64) -> Self {
        if self.is_infinite() || c == 0.0 && self.num == 0.0 {
            return *self;
        }
        if c == 0.0 {
            return Self::ZERO;
        }
        Self::normalize(c * self.num, self.den)
    }

    /// Sine of the angle between the representatives, in `[0, 1]`.
    pub fn distance(&self, other: &ProjReal) -> f64 {
        let cross = self.num * other.den - self.den * other.num;
        cross.abs() / (self.num.hypot(self.den) * other.num.hypot(other.den))
    }

    /// Sign of the affine value; `None` at `0` and `∞` (both within `tol`).
    pub fn sign(&self, tol: f64) -> Option<i8> {
        if self.num.abs() <= tol || self.den <= tol {
            None
        } else if self.num > 0.0 {
            Some(1)
        } else {
            Some(-1)
        }
    }
}

impl std::ops::Neg for ProjReal {
    type Output = ProjReal;

    fn neg(self) -> ProjReal {
        Self::normalize(-self.num, self.den)
    }
}

impl From<f64> for ProjReal {
    fn from(v: f64) -> Self {
        Self::from_f64(v)
    }
}

impl fmt::Display for ProjReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.value())
        }
    }
}
