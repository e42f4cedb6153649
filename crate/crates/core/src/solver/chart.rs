//! Evaluation of the branch parametrizations on the projective line.
//!
//! Every complex argument used by a chart has the form `m·Q + iσ` with an
//! integer `m`, `Q` the quarter period. By the imaginary transformations
//! the value there is a ratio of real functions of `σ` at the complementary
//! modulus (or of `cosh`, `sinh`), with a numerator on the real or the
//! imaginary axis. Keeping the ratio unevaluated means poles come out as
//! `∞` instead of overflowing.

use crate::elliptic::{jacobi_real_with, Modulus};
use crate::proj::ProjReal;
use crate::signed::{Axis, SignedValue};
use crate::{Error, Result};

use super::params::Phase;

/// Tolerance for discarding an imaginary residue, `|Im| ≤ tol·(1 + |Re|)`.
pub const IMAG_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Family {
    Cos,
    Cn(Modulus),
    Sn(Modulus),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Func {
    /// The family's periodic function.
    Periodic,
    /// `exp(i·arg)`.
    Exp,
}

/// `amp · func(t − shift)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Coord {
    pub amp: SignedValue,
    pub func: Func,
    pub shift: Phase,
}

/// Post-processing `v ↦ sign·v` or `v ↦ sign/v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct PostOp {
    pub recip: bool,
    pub sign: f64,
}

impl PostOp {
    pub const ID: PostOp = PostOp { recip: false, sign: 1.0 };

    pub const fn new(recip: bool, sign: f64) -> Self {
        Self { recip, sign }
    }

    fn apply(&self, p: ProjReal) -> ProjReal {
        let q = if self.recip { p.recip() } else { p };
        if self.sign < 0.0 {
            -q
        } else {
            q
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct ComplexChart {
    pub family: Family,
    /// Offset of the line `t = offset·Q + is`, in quarters.
    pub offset: i32,
    pub coords: [Coord; 4],
    pub post: [PostOp; 4],
}

impl ComplexChart {
    pub fn quarter(&self) -> f64 {
        match self.family {
            Family::Cos => std::f64::consts::FRAC_PI_2,
            Family::Cn(m) | Family::Sn(m) => m.K,
        }
    }

    pub fn eval(&self, s: f64) -> Result<[ProjReal; 4]> {
        let mut out = [ProjReal::ZERO; 4];
        for (i, c) in self.coords.iter().enumerate() {
            let m = (self.offset - c.shift.quarters).rem_euclid(4);
            let sigma = s - c.shift.imag;
            let (num, den) = match c.func {
                Func::Periodic => periodic(self.family, m, sigma),
                Func::Exp => exp_i(m, sigma),
            };
            out[i] = self.post[i].apply(real_ratio(c.amp * num, den)?);
        }
        Ok(out)
    }
}

/// `num / den` with `num` required to be real.
fn real_ratio(num: SignedValue, den: f64) -> Result<ProjReal> {
    match num.axis {
        Axis::Real => ProjReal::new(num.coeff, den),
        Axis::Imaginary => {
            if num.coeff.abs() <= IMAG_TOL * den.abs() {
                Ok(ProjReal::ZERO)
            } else if den == 0.0 {
                Err(Error::ImaginaryResidue(f64::INFINITY))
            } else {
                Err(Error::ImaginaryResidue((num.coeff / den).abs()))
            }
        }
    }
}

/// `f(m·Q + iσ)` as an unreduced ratio.
fn periodic(family: Family, m: i32, sigma: f64) -> (SignedValue, f64) {
    match family {
        Family::Cos => {
            // (cosh, sinh) scaled by e^{−|σ|} so large |σ| cannot overflow
            let e = (-sigma.abs()).exp();
            let e2 = e * e;
            let ch = 0.5 * (1.0 + e2);
            let sh = 0.5 * (1.0 - e2) * sigma.signum();
            let num = match m {
                0 => SignedValue::real(ch),
                1 => SignedValue::imaginary(-sh),
                2 => SignedValue::real(-ch),
                _ => SignedValue::imaginary(sh),
            };
            (num, e)
        }
        Family::Cn(md) => {
            let j = jacobi_real_with(sigma, &md.complement());
            let kp = md.k_prime;
            match m {
                0 => (SignedValue::real(1.0), j.cn),
                1 => (SignedValue::imaginary(-kp * j.sn), j.dn),
                2 => (SignedValue::real(-1.0), j.cn),
                _ => (SignedValue::imaginary(kp * j.sn), j.dn),
            }
        }
        Family::Sn(md) => {
            let j = jacobi_real_with(sigma, &md.complement());
            match m {
                0 => (SignedValue::imaginary(j.sn), j.cn),
                1 => (SignedValue::real(1.0), j.dn),
                2 => (SignedValue::imaginary(-j.sn), j.cn),
                _ => (SignedValue::real(-1.0), j.dn),
            }
        }
    }
}

/// `exp(i(m·π/2 + iσ)) = iᵐ·e^{−σ}`.
fn exp_i(m: i32, sigma: f64) -> (SignedValue, f64) {
    // e^{−σ} as a ratio that cannot overflow
    let (mag, den) = if sigma >= 0.0 { ((-sigma).exp(), 1.0) } else { (1.0, sigma.exp()) };
    let num = match m {
        0 => SignedValue::real(mag),
        1 => SignedValue::imaginary(mag),
        2 => SignedValue::real(-mag),
        _ => SignedValue::imaginary(-mag),
    };
    (num, den)
}
