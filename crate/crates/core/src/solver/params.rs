//! Amplitudes, elliptic modulus and phase shifts.

use num_complex::Complex64;

use crate::coeffs::OppCoeffs;
use crate::elliptic::{inverse_dc_with, Modulus};
use crate::lengths::{classify, BarLengths, ClassKind, DEFAULT_CLASS_TOL};
use crate::signed::{signed_sqrt, SignedValue};
use crate::{Error, Result};

/// `p_x, p_y, p_z, p_w` with `p_x² = −g00/g20`, `p_z² = −g00/g02` and the
/// cyclic relabeling for `p_y, p_w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Amplitudes {
    pub p_x: SignedValue,
    pub p_y: SignedValue,
    pub p_z: SignedValue,
    pub p_w: SignedValue,
}

impl Amplitudes {
    pub fn as_array(&self) -> [SignedValue; 4] {
        [self.p_x, self.p_y, self.p_z, self.p_w]
    }
}

/// Amplitudes for possibly negative (signed) lengths.
pub(crate) fn amplitudes_signed(l: [f64; 4]) -> Amplitudes {
    let pair = |l: [f64; 4]| {
        let g = OppCoeffs::from_signed(l);
        (signed_sqrt(-g.g00 / g.g20), signed_sqrt(-g.g00 / g.g02))
    };
    let (p_x, p_z) = pair(l);
    let [a, b, c, d] = l;
    let (p_y, p_w) = pair([b, c, d, a]);
    Amplitudes { p_x, p_y, p_z, p_w }
}

/// Amplitudes of the actual lengths.
///
/// Rhombus, isogram and deltoid-I linkages have rational configuration
/// curves without a conic normal form and are rejected.
pub fn amplitudes(lengths: &BarLengths) -> Result<Amplitudes> {
    let kind = classify(lengths, DEFAULT_CLASS_TOL).kind;
    match kind {
        ClassKind::Rhombus | ClassKind::Isogram | ClassKind::DeltoidI => {
            Err(Error::WrongClass { expected: "deltoid II, conic or elliptic", actual: kind })
        }
        _ => Ok(amplitudes_signed(lengths.as_array())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EllipticForm {
    /// `M > 1`, parametrized by `cn`.
    CnForm,
    /// `M < 1`, parametrized by `sn`.
    SnForm,
}

#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticData {
    /// `αβγδ / ((σ−α)(σ−β)(σ−γ)(σ−δ))`.
    pub M: f64,
    pub form: EllipticForm,
    pub modulus: Modulus,
}

/// `M`, the parametrization form and the modulus.
///
/// With `P = αβγδ`, `Q = Π(σ−·)` and `P − Q = σ(σ−α−β)(σ−α−γ)(σ−β−γ)`, the
/// cn-form has `k² = (P−Q)/P`, `k′² = Q/P` and the sn-form has
/// `k² = (Q−P)/Q`, `k′² = P/Q`. The factored difference keeps `k` accurate
/// when `M` is close to one.
pub fn elliptic_data(lengths: &BarLengths) -> Result<EllipticData> {
    let kind = classify(lengths, DEFAULT_CLASS_TOL).kind;
    if kind != ClassKind::Elliptic {
        return Err(Error::WrongClass { expected: "elliptic", actual: kind });
    }
    let [a, b, c, d] = lengths.as_array();
    let s = lengths.sigma();
    let p = a * b * c * d;
    let q = (s - a) * (s - b) * (s - c) * (s - d);
    let diff = s * (s - a - b) * (s - a - c) * (s - b - c);
    let (form, modulus) = if diff > 0.0 {
        (EllipticForm::CnForm, Modulus::from_squares(diff / p, q / p)?)
    } else {
        (EllipticForm::SnForm, Modulus::from_squares(-diff / q, p / q)?)
    };
    Ok(EllipticData { M: p / q, form, modulus })
}

/// A point `m·Q + i·imag` of the parameter plane, `Q` being the quarter
/// period of the family (`K` or `π/2`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Phase {
    pub quarters: i32,
    pub imag: f64,
}

impl Phase {
    pub const fn new(quarters: i32, imag: f64) -> Self {
        Self { quarters, imag }
    }
}

/// Phase shifts `θ₁`, `θ₂` of the `y` and `w` coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseShifts {
    pub theta1: Complex64,
    pub theta2: Complex64,
    pub(crate) exact: [Phase; 2],
}

impl PhaseShifts {
    fn build(p1: Phase, p2: Phase, quarter: f64) -> Self {
        let c = |p: Phase| Complex64::new(p.quarters as f64 * quarter, p.imag);
        PhaseShifts { theta1: c(p1), theta2: c(p2), exact: [p1, p2] }
    }
}

/// The four rows of the phase table, selected by which of `p_x`, `p_y` are
/// real. `a` applies when `p_x, p_y` are both real or both imaginary, `b`
/// otherwise.
pub(crate) fn phase_rows(amps: &Amplitudes, a: f64, b: f64) -> [Phase; 2] {
    match (amps.p_x.is_real(), amps.p_y.is_real()) {
        (true, true) => [Phase::new(0, a), Phase::new(1, a)],
        (true, false) => [Phase::new(1, b), Phase::new(0, b)],
        (false, true) => [Phase::new(-1, -b), Phase::new(-2, -b)],
        (false, false) => [Phase::new(2, -a), Phase::new(3, -a)],
    }
}

/// Imaginary part of the conic phase shift,
/// `atanh(min(√|αγ|, √|βδ|) / max(…))`.
pub(crate) fn conic_imag(l: [f64; 4]) -> f64 {
    let p = (l[0] * l[2]).abs().sqrt();
    let q = (l[1] * l[3]).abs().sqrt();
    (p.min(q) / p.max(q)).atanh()
}

/// Signed lengths in which conic II and III take the conic I shape.
pub(crate) fn conic_lengths(kind: ClassKind, l: [f64; 4]) -> [f64; 4] {
    let [a, b, c, d] = l;
    match kind {
        ClassKind::ConicII => [a, b, -c, -d],
        ClassKind::ConicIII => [-a, b, c, -d],
        _ => l,
    }
}

/// Elliptic phase data: the shifts plus the amplitudes they belong to.
pub(crate) fn elliptic_phases(lengths: &BarLengths, data: &EllipticData) -> Result<[Phase; 2]> {
    let [a, b, c, d] = lengths.as_array();
    let s = lengths.sigma();
    let ac = (s - a) * (s - c) / (a * c);
    let bd = (s - b) * (s - d) / (b * d);
    let (ta, tb) = match data.form {
        EllipticForm::CnForm => (ac.sqrt(), bd.sqrt()),
        EllipticForm::SnForm => ((1.0 / ac).sqrt(), (1.0 / bd).sqrt()),
    };
    let comp = data.modulus.complement();
    // rounding can put a target a hair below one
    let inv = |t: f64| inverse_dc_with(t.max(1.0), &comp);
    let amps = amplitudes_signed(lengths.as_array());
    Ok(phase_rows(&amps, inv(ta)?, inv(tb)?))
}

/// Phase shifts of the conic and elliptic parametrizations.
///
/// For conic II and III these belong to the signed lengths in which the
/// class takes the conic I shape, `(α, β, −γ, −δ)` and `(−α, β, γ, −δ)`.
pub fn phase_shifts(lengths: &BarLengths) -> Result<PhaseShifts> {
    let kind = classify(lengths, DEFAULT_CLASS_TOL).kind;
    match kind {
        ClassKind::Elliptic => {
            let data = elliptic_data(lengths)?;
            let [p1, p2] = elliptic_phases(lengths, &data)?;
            Ok(PhaseShifts::build(p1, p2, data.modulus.K))
        }
        k if k.is_conic() => {
            let l = conic_lengths(k, lengths.as_array());
            let th = conic_imag(l);
            let [p1, p2] = phase_rows(&amplitudes_signed(l), th, th);
            Ok(PhaseShifts::build(p1, p2, std::f64::consts::FRAC_PI_2))
        }
        k => Err(Error::WrongClass { expected: "conic or elliptic", actual: k }),
    }
}
