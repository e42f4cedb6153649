//! Serialized forms of library values.
//!
//! Tangents go over the wire as `{num, den}` so that `∞` is `{1, 0}`. The
//! pair is the library's own normalization (larger component of magnitude
//! one, `den ≥ 0`). Floats are written by `serde_json` in shortest
//! round-trip form and by the CSV writer with 17 significant digits; both
//! parse back to the same `f64`.

use std::io::Write;

use fourbar::analysis::self_intersected;
use fourbar::proj::ProjReal;
use fourbar::solver::{BranchDescriptor, Configuration, DomainKind, Parameter, SnapKind};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjWire {
    pub num: f64,
    pub den: f64,
}

impl From<ProjReal> for ProjWire {
    fn from(p: ProjReal) -> Self {
        ProjWire { num: p.num(), den: p.den() }
    }
}

impl TryFrom<ProjWire> for ProjReal {
    type Error = fourbar::Error;

    fn try_from(p: ProjWire) -> fourbar::Result<ProjReal> {
        ProjReal::new(p.num, p.den)
    }
}

/// One configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigRecord {
    /// Branch parameter; absent for configurations that did not come from a
    /// branch chart.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    pub x: ProjWire,
    pub y: ProjWire,
    pub z: ProjWire,
    pub w: ProjWire,
    pub rho_x: f64,
    pub rho_y: f64,
    pub rho_z: f64,
    pub rho_w: f64,
    /// `A, B, C, D`.
    pub vertices: [[f64; 2]; 4],
    pub u: f64,
    pub v: f64,
    pub self_intersected: bool,
}

impl ConfigRecord {
    pub fn new(c: &Configuration, s: Option<f64>) -> Self {
        let [rho_x, rho_y, rho_z, rho_w] = c.rho;
        ConfigRecord {
            s,
            x: c.x.into(),
            y: c.y.into(),
            z: c.z.into(),
            w: c.w.into(),
            rho_x,
            rho_y,
            rho_z,
            rho_w,
            vertices: c.vertices,
            u: c.u(),
            v: c.v(),
            self_intersected: self_intersected(c),
        }
    }

    pub fn tangents(&self) -> fourbar::Result<[ProjReal; 4]> {
        Ok([self.x.try_into()?, self.y.try_into()?, self.z.try_into()?, self.w.try_into()?])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainWire {
    pub kind: String,
    /// `null` for an unbounded end.
    pub lo: Option<f64>,
    pub hi: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SnapWire {
    pub s: f64,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XzPieceWire {
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchWire {
    pub branch_id: usize,
    pub param_kind: String,
    pub parameter: String,
    pub t_offset: f64,
    pub domain: DomainWire,
    pub snap_points: Vec<SnapWire>,
    pub xz_pieces: Vec<XzPieceWire>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

impl From<&BranchDescriptor> for BranchWire {
    fn from(b: &BranchDescriptor) -> Self {
        let kind = match b.domain.kind {
            DomainKind::Periodic => "periodic",
            DomainKind::Arc => "arc",
            DomainKind::Line => "line",
        };
        let parameter = match b.parameter {
            Parameter::RhoX => "rho_x",
            Parameter::RhoY => "rho_y",
            Parameter::S => "s",
        };
        BranchWire {
            branch_id: b.branch_id,
            param_kind: b.param_kind.name().to_string(),
            parameter: parameter.to_string(),
            t_offset: b.t_offset,
            domain: DomainWire { kind: kind.to_string(), lo: finite(b.domain.lo), hi: finite(b.domain.hi) },
            snap_points: b
                .snap_points
                .iter()
                .map(|p| SnapWire {
                    s: p.s,
                    kind: match p.kind {
                        SnapKind::XZero => "x_zero",
                        SnapKind::XInfinity => "x_infinity",
                    }
                    .to_string(),
                })
                .collect(),
            xz_pieces: b.xz_pieces.iter().map(|p| XzPieceWire { lo: finite(p.lo), hi: finite(p.hi), sign: p.sign }).collect(),
        }
    }
}

/// CSV header, in column order.
pub const CSV_COLUMNS: [&str; 24] = [
    "s", "x_num", "x_den", "y_num", "y_den", "z_num", "z_den", "w_num", "w_den", "rho_x", "rho_y", "rho_z", "rho_w",
    "Ax", "Ay", "Bx", "By", "Cx", "Cy", "Dx", "Dy", "u", "v", "self_intersected",
];

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes records as CSV with [`CSV_COLUMNS`]. A missing `s` is an empty
/// field.
pub fn write_csv<W: Write>(out: W, records: &[ConfigRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        let mut row = vec![r.s.map(num).unwrap_or_default()];
        for p in [r.x, r.y, r.z, r.w] {
            row.push(num(p.num));
            row.push(num(p.den));
        }
        row.extend([r.rho_x, r.rho_y, r.rho_z, r.rho_w].map(num));
        row.extend(r.vertices.iter().flatten().map(|&c| num(c)));
        row.push(num(r.u));
        row.push(num(r.v));
        row.push(r.self_intersected.to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
