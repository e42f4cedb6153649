//! Branch descriptors and sampling.

use std::f64::consts::PI;

use crate::lengths::{classify, BarLengths, ClassKind, LinkageClass, DEFAULT_CLASS_TOL};
use crate::proj::ProjReal;
use crate::signed::SignedValue;
use crate::{Error, Result};

use super::chart::{ComplexChart, Coord, Family, Func, PostOp};
use super::config::Configuration;
use super::params::{
    amplitudes_signed, conic_imag, conic_lengths, elliptic_data, elliptic_phases, phase_rows,
    EllipticForm, Phase,
};

/// Parametrizations and geometry may disagree by this much (relative to `σ`)
/// before a sample is rejected.
pub const ACCEPT_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    /// A rational curve in `x`, parametrized by `ρx`.
    RationalCircle,
    /// `cos` along `t = offset + is`.
    TrigLine,
    EllipticCn,
    EllipticSn,
    /// A circle of configurations with some tangents fixed at `∞`.
    InfinityCircle,
}

impl ParamKind {
    pub fn name(&self) -> &'static str {
        match self {
            ParamKind::RationalCircle => "rational_circle",
            ParamKind::TrigLine => "trig_line",
            ParamKind::EllipticCn => "elliptic_cn",
            ParamKind::EllipticSn => "elliptic_sn",
            ParamKind::InfinityCircle => "infinity_circle",
        }
    }
}

/// What the native branch parameter `s` measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    RhoX,
    RhoY,
    /// Imaginary part of the complex parameter `t`.
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainKind {
    /// `[lo, hi)` with the ends identified.
    Periodic,
    /// The open interval `(lo, hi)`.
    Arc,
    /// The whole real line.
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Domain {
    pub kind: DomainKind,
    pub lo: f64,
    pub hi: f64,
}

impl Domain {
    fn periodic(lo: f64, hi: f64) -> Self {
        Self { kind: DomainKind::Periodic, lo, hi }
    }

    pub fn is_compact(&self) -> bool {
        self.kind == DomainKind::Periodic
    }

    /// Brings `s` into the domain, wrapping periodic ones.
    pub fn reduce(&self, s: f64) -> Result<f64> {
        if !s.is_finite() {
            return Err(Error::OutOfDomain { s });
        }
        match self.kind {
            DomainKind::Line => Ok(s),
            DomainKind::Arc if s > self.lo && s < self.hi => Ok(s),
            DomainKind::Arc => Err(Error::OutOfDomain { s }),
            DomainKind::Periodic => {
                let p = self.hi - self.lo;
                Ok(self.lo + (s - self.lo).rem_euclid(p))
            }
        }
    }

    /// Maps `u ∈ [0, 1)` (open at 0 too for arcs and lines) onto the domain;
    /// lines use `s = 2·atanh(2u − 1)`.
    pub fn from_normalized(&self, u: f64) -> f64 {
        match self.kind {
            DomainKind::Line => 2.0 * (2.0 * u - 1.0).atanh(),
            _ => self.lo + u * (self.hi - self.lo),
        }
    }

    pub fn to_normalized(&self, s: f64) -> f64 {
        match self.kind {
            DomainKind::Line => 0.5 * ((s / 2.0).tanh() + 1.0),
            _ => (s - self.lo) / (self.hi - self.lo),
        }
    }

    /// `n` normalized grid points: `j/n` on periodic domains, `(j + ½)/n`
    /// on open ones.
    pub fn normalized_grid(&self, n: usize) -> Vec<f64> {
        let shift = if self.is_compact() { 0.0 } else { 0.5 };
        (0..n).map(|j| (j as f64 + shift) / n as f64).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SnapKind {
    XZero,
    XInfinity,
}

/// A parameter where `x` passes through `0` or `∞`. The chart is
/// projectively continuous there, so both one-sided limits are recorded and
/// agree; a renderer may still split the branch into two arcs at `s`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SnapPoint {
    pub s: f64,
    pub kind: SnapKind,
    pub left: [ProjReal; 4],
    pub right: [ProjReal; 4],
}

/// A parameter interval on which `x·z` keeps one sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XzPiece {
    pub lo: f64,
    pub hi: f64,
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum RationalKind {
    /// `y = 1/x, z = x, w = 1/x`.
    Parallel,
    /// `y = (α+β)/((α−β)x), z = −x, w = −y`.
    Butterfly,
    DeltoidI,
    /// `(x, ∞, −x, ∞)`.
    InfinityX,
    /// `(∞, y, ∞, −y)`.
    InfinityY,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub(crate) enum Chart {
    Rational(RationalKind),
    Complex(ComplexChart),
}

/// One connected piece of the configuration space and how to sample it.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchDescriptor {
    pub class: LinkageClass,
    /// 1-based.
    pub branch_id: usize,
    pub param_kind: ParamKind,
    pub parameter: Parameter,
    /// Real part of `t` along the branch (zero for rational branches).
    pub t_offset: f64,
    pub domain: Domain,
    pub snap_points: Vec<SnapPoint>,
    /// Empty for rational branches.
    pub xz_pieces: Vec<XzPiece>,
    lengths: [f64; 4],
    pub(crate) chart: Chart,
}

impl BranchDescriptor {
    /// Tangents `(x, y, z, w)` at parameter `s` (already in the domain).
    pub fn tangents_at(&self, s: f64) -> Result<[ProjReal; 4]> {
        match &self.chart {
            Chart::Complex(c) => c.eval(s),
            Chart::Rational(kind) => Ok(rational(*kind, self.lengths, ProjReal::from_angle(s))),
        }
    }

    /// Whether the descriptor was built for `lengths`.
    pub fn belongs_to(&self, lengths: &BarLengths) -> bool {
        self.lengths == lengths.as_array()
    }
}

fn rational(kind: RationalKind, l: [f64; 4], p: ProjReal) -> [ProjReal; 4] {
    let [a, b, _, _] = l;
    let (x1, x2) = (p.num(), p.den());
    let inf = ProjReal::INFINITY;
    match kind {
        RationalKind::Parallel => [p, p.recip(), p, p.recip()],
        RationalKind::Butterfly => {
            let y = ProjReal::ratio((a + b) * x2, (a - b) * x1);
            [p, y, -p, -y]
        }
        RationalKind::DeltoidI => {
            let (s1, s2) = (x1 * x1, x2 * x2);
            let y = ProjReal::ratio((b - a) * s1 + (b + a) * s2, 2.0 * a * x1 * x2);
            let w = ProjReal::ratio((a - b) * s1 + (a + b) * s2, 2.0 * b * x1 * x2);
            [p, y, p, w]
        }
        RationalKind::InfinityX => [p, inf, -p, inf],
        RationalKind::InfinityY => [inf, p, inf, -p],
    }
}

struct Builder {
    class: LinkageClass,
    lengths: [f64; 4],
    out: Vec<BranchDescriptor>,
}

impl Builder {
    fn rational(&mut self, kind: RationalKind) {
        let (param_kind, parameter) = match kind {
            RationalKind::InfinityX => (ParamKind::InfinityCircle, Parameter::RhoX),
            RationalKind::InfinityY => (ParamKind::InfinityCircle, Parameter::RhoY),
            _ => (ParamKind::RationalCircle, Parameter::RhoX),
        };
        self.push(param_kind, parameter, 0.0, Domain::periodic(-PI, PI), Chart::Rational(kind));
    }

    fn complex(&mut self, param_kind: ParamKind, domain: Domain, chart: ComplexChart) -> Result<()> {
        let t_offset = chart.offset as f64 * chart.quarter();
        self.push(param_kind, Parameter::S, t_offset, domain, Chart::Complex(chart));
        let b = self.out.last_mut().expect("just pushed");
        let candidates: Vec<f64> = match chart.family {
            Family::Cos => vec![0.0],
            Family::Cn(m) | Family::Sn(m) => vec![-m.K_prime, 0.0, m.K_prime],
        };
        for &s in &candidates {
            let on_domain = match domain.kind {
                DomainKind::Periodic => s >= domain.lo && s < domain.hi,
                _ => s >= domain.lo && s <= domain.hi,
            };
            if !on_domain {
                continue;
            }
            let t = chart.eval(s)?;
            let kind = if t[0].distance(&ProjReal::ZERO) < 1e-9 {
                SnapKind::XZero
            } else if t[0].distance(&ProjReal::INFINITY) < 1e-9 {
                SnapKind::XInfinity
            } else {
                continue;
            };
            b.snap_points.push(SnapPoint { s, kind, left: t, right: t });
        }
        // x and z only vanish or blow up at the candidates
        let mut cuts: Vec<f64> = candidates.into_iter().filter(|&s| s > domain.lo && s < domain.hi).collect();
        cuts.insert(0, domain.lo);
        cuts.push(domain.hi);
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mid = match (lo.is_finite(), hi.is_finite()) {
                (true, true) => 0.5 * (lo + hi),
                (false, _) => hi - 1.0,
                (_, false) => lo + 1.0,
            };
            let t = chart.eval(mid)?;
            let sign = match (t[0].sign(0.0), t[2].sign(0.0)) {
                (Some(a), Some(c)) => a * c,
                _ => 0,
            };
            b.xz_pieces.push(XzPiece { lo, hi, sign });
        }
        Ok(())
    }

    fn push(&mut self, param_kind: ParamKind, parameter: Parameter, t_offset: f64, domain: Domain, chart: Chart) {
        self.out.push(BranchDescriptor {
            class: self.class,
            branch_id: self.out.len() + 1,
            param_kind,
            parameter,
            t_offset,
            domain,
            snap_points: Vec::new(),
            xz_pieces: Vec::new(),
            lengths: self.lengths,
            chart,
        });
    }
}

fn coords(amps: [SignedValue; 4], shifts: [Phase; 4]) -> [Coord; 4] {
    std::array::from_fn(|i| Coord { amp: amps[i], func: Func::Periodic, shift: shifts[i] })
}

/// Every branch of the configuration space, finite ones first.
pub fn enumerate_branches(lengths: &BarLengths) -> Result<Vec<BranchDescriptor>> {
    let class = classify(lengths, DEFAULT_CLASS_TOL);
    let l = lengths.as_array();
    let mut b = Builder { class, lengths: l, out: Vec::new() };
    let line = Domain { kind: DomainKind::Line, lo: f64::NEG_INFINITY, hi: f64::INFINITY };
    let z_shift = Phase::new(-1, 0.0);
    match class.kind {
        ClassKind::Rhombus => {
            b.rational(RationalKind::Parallel);
            b.rational(RationalKind::InfinityX);
            b.rational(RationalKind::InfinityY);
        }
        ClassKind::Isogram => {
            b.rational(RationalKind::Parallel);
            b.rational(RationalKind::Butterfly);
        }
        ClassKind::DeltoidI => {
            b.rational(RationalKind::DeltoidI);
            b.rational(RationalKind::InfinityX);
        }
        ClassKind::DeltoidII => {
            let (beta, gamma) = (l[1], l[2]);
            let amps = amplitudes_signed(l);
            let q = SignedValue::real(((beta + gamma) / (beta - gamma).abs()).sqrt());
            let (yw_shift, zs, offsets) = if beta > gamma {
                (Phase::new(0, 0.0), z_shift, [0, 2])
            } else {
                (Phase::new(1, 0.0), Phase::new(1, 0.0), [1, 3])
            };
            let yw = Coord { amp: q, func: Func::Exp, shift: yw_shift };
            let x = Coord { amp: amps.p_x, func: Func::Periodic, shift: Phase::new(0, 0.0) };
            let z = Coord { amp: amps.p_z, func: Func::Periodic, shift: zs };
            for offset in offsets {
                let chart = ComplexChart { family: Family::Cos, offset, coords: [x, yw, z, yw], post: [PostOp::ID; 4] };
                b.complex(ParamKind::TrigLine, line, chart)?;
            }
            b.rational(RationalKind::InfinityY);
        }
        k @ (ClassKind::ConicI | ClassKind::ConicII | ClassKind::ConicIII) => {
            let lc = conic_lengths(k, l);
            let amps = amplitudes_signed(lc);
            let th = conic_imag(lc);
            let [p1, p2] = phase_rows(&amps, th, th);
            let sg = if lc.iter().sum::<f64>() > 0.0 { 1.0 } else { -1.0 };
            let post = match k {
                ClassKind::ConicI => [PostOp::ID; 4],
                ClassKind::ConicII => {
                    [PostOp::ID, PostOp::new(true, sg), PostOp::new(false, -1.0), PostOp::new(true, sg)]
                }
                _ => [
                    PostOp::new(true, -1.0),
                    PostOp::new(false, -sg),
                    PostOp::new(true, -1.0),
                    PostOp::new(false, sg),
                ],
            };
            let c = coords(amps.as_array(), [Phase::new(0, 0.0), p1, z_shift, p2]);
            let offsets = if amps.p_x.is_real() { [0, 2] } else { [1, 3] };
            for offset in offsets {
                let chart = ComplexChart { family: Family::Cos, offset, coords: c, post };
                b.complex(ParamKind::TrigLine, line, chart)?;
            }
        }
        ClassKind::Elliptic => {
            let data = elliptic_data(lengths)?;
            let amps = amplitudes_signed(l);
            let [p1, p2] = elliptic_phases(lengths, &data)?;
            let c = coords(amps.as_array(), [Phase::new(0, 0.0), p1, z_shift, p2]);
            let m = data.modulus;
            let (family, kind, domain) = match data.form {
                EllipticForm::CnForm => (
                    Family::Cn(m),
                    ParamKind::EllipticCn,
                    Domain { kind: DomainKind::Arc, lo: -m.K_prime, hi: m.K_prime },
                ),
                EllipticForm::SnForm => (Family::Sn(m), ParamKind::EllipticSn, Domain::periodic(-m.K_prime, m.K_prime)),
            };
            let px_real = amps.p_x.is_real();
            let offsets = if px_real == (data.form == EllipticForm::CnForm) { [0, 2] } else { [1, 3] };
            for offset in offsets {
                let chart = ComplexChart { family, offset, coords: c, post: [PostOp::ID; 4] };
                b.complex(kind, domain, chart)?;
            }
        }
    }
    Ok(b.out)
}

/// The configuration at parameter `s` of `branch`.
///
/// Periodic parameters are wrapped; arcs reject `s` outside their open
/// interval. The sample is checked against the coordinate oracle and
/// rejected with [`Error::ResidualTooLarge`] if the two disagree by more than
/// [`ACCEPT_TOL`]`·σ`.
pub fn sample_branch(lengths: &BarLengths, branch: &BranchDescriptor, s: f64) -> Result<Configuration> {
    let s = branch.domain.reduce(s)?;
    let t = branch.tangents_at(s)?;
    let c = Configuration::from_tangents(lengths, t);
    let residual = (c.closure_residual(lengths) / lengths.sigma()).max(c.geometric_mismatch(lengths));
    if residual.is_nan() || residual > ACCEPT_TOL {
        return Err(Error::ResidualTooLarge { residual });
    }
    Ok(c)
}

/// Samples at a normalized coordinate `u ∈ [0, 1)`.
pub fn sample_normalized(lengths: &BarLengths, branch: &BranchDescriptor, u: f64) -> Result<Configuration> {
    sample_branch(lengths, branch, branch.domain.from_normalized(u))
}
