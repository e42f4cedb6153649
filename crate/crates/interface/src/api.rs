//! Request handling shared by the CLI and the HTTP service.
//!
//! Every handler is a pure function of its input. Failures are split into
//! [`ApiError::BadInput`] (malformed or out-of-range requests) and
//! [`ApiError::Domain`] (well-formed lengths that do not make a linkage).

use std::f64::consts::PI;

use fourbar::analysis::topology_report;
use fourbar::identities::verify_identities;
use fourbar::lengths::{classify as classify_lengths, validate_lengths, BarLengths, DEFAULT_CLASS_TOL};
use fourbar::proj::ProjReal;
use fourbar::solver::{
    enumerate_branches, sample_branch, solutions_at_infinity, solve_at_x, BranchDescriptor, DomainKind,
    InfinityKind, Parameter,
};
use fourbar::Error;
use serde::{Deserialize, Serialize};

use crate::wire::{BranchWire, ConfigRecord, ProjWire};

pub const MAX_SAMPLES: usize = 100_000;

/// Half-width of the `s` window used to trace unbounded branches by raw
/// parameter.
pub const S_WINDOW: f64 = 6.0;

/// Grid used to invert `ρx` along branches not parametrized by it.
const RHO_SCAN: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
pub enum ApiError {
    BadInput(String),
    Domain(String),
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub detail: String,
}

impl ApiError {
    pub fn status(&self) -> u16 {
        match self {
            ApiError::BadInput(_) => 400,
            ApiError::Domain(_) => 422,
            ApiError::Internal(_) => 500,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ApiError::BadInput(_) => 2,
            ApiError::Domain(_) | ApiError::Internal(_) => 1,
        }
    }

    pub fn body(&self) -> ErrorBody {
        let (error, detail) = match self {
            ApiError::BadInput(d) => ("bad_input", d),
            ApiError::Domain(d) => ("invalid_lengths", d),
            ApiError::Internal(d) => ("internal", d),
        };
        ErrorBody { error: error.to_string(), detail: detail.clone() }
    }
}

impl std::fmt::Display for ApiError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.body().detail)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonPositiveLength { .. } | Error::QuadrilateralInequalityViolated { .. } => {
                ApiError::Domain(e.to_string())
            }
            Error::NoSuchBranch(_) | Error::InvalidProjective { .. } | Error::InvalidVariant(_) => {
                ApiError::BadInput(e.to_string())
            }
            _ => ApiError::Internal(e.to_string()),
        }
    }
}

pub type ApiResult<T> = Result<T, ApiError>;

/// Parses `"a,b,c,d"`.
pub fn parse_lengths(text: &str) -> ApiResult<[f64; 4]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(ApiError::BadInput(format!("expected four comma-separated lengths, got {:?}", text)));
    }
    let mut out = [0.0; 4];
    for (o, p) in out.iter_mut().zip(&parts) {
        *o = p.parse().map_err(|_| ApiError::BadInput(format!("{p:?} is not a number")))?;
    }
    Ok(out)
}

pub fn lengths(l: [f64; 4]) -> ApiResult<BarLengths> {
    Ok(validate_lengths(l[0], l[1], l[2], l[3])?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyResponse {
    pub lengths: [f64; 4],
    pub class: String,
    pub orthodiagonal: bool,
}

pub fn classify(l: [f64; 4], tol: Option<f64>) -> ApiResult<ClassifyResponse> {
    let tol = tol.unwrap_or(DEFAULT_CLASS_TOL);
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(ApiError::BadInput(format!("tolerance must be finite and nonnegative, got {tol}")));
    }
    let c = classify_lengths(&lengths(l)?, tol);
    Ok(ClassifyResponse { lengths: l, class: c.kind.name().to_string(), orthodiagonal: c.orthodiagonal })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    /// Evenly spaced in the branch's normalized coordinate.
    #[default]
    Normalized,
    /// Evenly spaced in `ρx` over a full turn; a branch may pass a given
    /// `ρx` several times or not at all.
    RhoX,
    /// Evenly spaced in the raw parameter, over `[−S_WINDOW, S_WINDOW]` on
    /// unbounded branches.
    S,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceRequest {
    pub lengths: [f64; 4],
    #[serde(alias = "branch")]
    pub branch_id: usize,
    pub samples: usize,
    #[serde(default)]
    pub coordinate: Coordinate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceResponse {
    pub lengths: [f64; 4],
    pub class: String,
    pub branch: BranchWire,
    pub records: Vec<ConfigRecord>,
}

/// Samples one branch. Parameters the chart cannot evaluate (poles of the
/// elliptic functions) are skipped rather than failing the whole trace.
pub fn trace(req: &TraceRequest) -> ApiResult<TraceResponse> {
    if !(2..=MAX_SAMPLES).contains(&req.samples) {
        return Err(ApiError::BadInput(format!("samples must be between 2 and {MAX_SAMPLES}, got {}", req.samples)));
    }
    let l = lengths(req.lengths)?;
    let branches = enumerate_branches(&l)?;
    let branch = branches
        .iter()
        .find(|b| b.branch_id == req.branch_id)
        .ok_or(Error::NoSuchBranch(req.branch_id))?;
    let n = req.samples;
    let d = branch.domain;
    let params: Vec<f64> = match req.coordinate {
        Coordinate::Normalized => d.normalized_grid(n).into_iter().map(|u| d.from_normalized(u)).collect(),
        Coordinate::S => match d.kind {
            DomainKind::Line => (0..n).map(|j| -S_WINDOW + 2.0 * S_WINDOW * j as f64 / (n - 1) as f64).collect(),
            _ => d.normalized_grid(n).into_iter().map(|u| d.from_normalized(u)).collect(),
        },
        Coordinate::RhoX if branch.parameter == Parameter::RhoX => {
            (0..n).map(|j| -PI + 2.0 * PI * j as f64 / n as f64).collect()
        }
        Coordinate::RhoX => invert_rho_x(&l, branch, n),
    };
    let records = params
        .into_iter()
        .filter_map(|s| sample_branch(&l, branch, s).ok().map(|c| ConfigRecord::new(&c, Some(s))))
        .collect();
    Ok(TraceResponse {
        lengths: req.lengths,
        class: branch.class.kind.name().to_string(),
        branch: branch.into(),
        records,
    })
}

fn wrap(a: f64) -> f64 {
    let r = (a + PI).rem_euclid(2.0 * PI) - PI;
    if r == -PI {
        PI
    } else {
        r
    }
}

/// Parameters where `ρx` hits `−π + 2πj/n`, sorted by `j` then `s`.
fn invert_rho_x(l: &BarLengths, branch: &BranchDescriptor, n: usize) -> Vec<f64> {
    let d = branch.domain;
    let rho = |s: f64| sample_branch(l, branch, s).ok().map(|c| c.rho[0]);
    let mut grid: Vec<f64> = d.normalized_grid(RHO_SCAN).into_iter().map(|u| d.from_normalized(u)).collect();
    if d.kind == DomainKind::Periodic {
        grid.push(grid[0] + (d.hi - d.lo));
    }
    let h = 2.0 * PI / n as f64;
    let mut hits: Vec<(usize, f64)> = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &s in &grid {
        let Some(r) = rho(s) else {
            prev = None;
            continue;
        };
        if let Some((sa, ra)) = prev {
            let step = wrap(r - ra);
            if step != 0.0 {
                // targets τ = −π + kh with (τ − ρa)/step in [0, 1)
                let (lo, hi) = if step > 0.0 { (ra, ra + step) } else { (ra + step, ra) };
                let k0 = ((lo + PI) / h).ceil() as i64;
                let k1 = ((hi + PI) / h).floor() as i64;
                for k in k0..=k1 {
                    let tau = -PI + k as f64 * h;
                    let frac = (tau - ra) / step;
                    if !(0.0..1.0).contains(&frac) {
                        continue;
                    }
                    let j = k.rem_euclid(n as i64) as usize;
                    hits.push((j, bisect_rho(&rho, sa, s, tau, step > 0.0)));
                }
            }
        }
        prev = Some((s, r));
    }
    hits.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    hits.into_iter().map(|(_, s)| s).collect()
}

fn bisect_rho(rho: &impl Fn(f64) -> Option<f64>, mut a: f64, mut b: f64, tau: f64, rising: bool) -> f64 {
    for _ in 0..100 {
        let m = 0.5 * (a + b);
        if m <= a.min(b) || m >= a.max(b) {
            break;
        }
        let Some(r) = rho(m) else { break };
        let below = wrap(r - tau) < 0.0;
        if below == rising {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveRequest {
    pub lengths: [f64; 4],
    pub x: ProjWire,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResponse {
    pub lengths: [f64; 4],
    pub class: String,
    pub records: Vec<ConfigRecord>,
}

pub fn solve(req: &SolveRequest) -> ApiResult<SolveResponse> {
    let l = lengths(req.lengths)?;
    let x = ProjReal::try_from(req.x)?;
    let records = solve_at_x(&l, x).iter().map(|c| ConfigRecord::new(c, None)).collect();
    Ok(SolveResponse { lengths: req.lengths, class: class_name(&l), records })
}

fn class_name(l: &BarLengths) -> String {
    classify_lengths(l, DEFAULT_CLASS_TOL).kind.name().to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionWire {
    pub description: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfinityWire {
    /// `isolated` or `circle`.
    pub kind: String,
    /// The branch describing a circle at infinity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_id: Option<usize>,
    pub tuple: Option<[ProjWire; 4]>,
    pub reachable: bool,
    pub condition: ConditionWire,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfinityResponse {
    pub lengths: [f64; 4],
    pub class: String,
    pub solutions: Vec<InfinityWire>,
}

pub fn infinity(l4: [f64; 4]) -> ApiResult<InfinityResponse> {
    let l = lengths(l4)?;
    let solutions = solutions_at_infinity(&l)
        .into_iter()
        .map(|s| {
            let (kind, branch_id) = match s.kind {
                InfinityKind::Isolated => ("isolated", None),
                InfinityKind::Circle { branch_id } => ("circle", Some(branch_id)),
            };
            InfinityWire {
                kind: kind.to_string(),
                branch_id,
                tuple: s.tuple.map(|t| t.map(ProjWire::from)),
                reachable: s.reachable,
                condition: ConditionWire { description: s.condition.description, value: s.condition.value },
            }
        })
        .collect();
    Ok(InfinityResponse { lengths: l4, class: class_name(&l), solutions })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityWire {
    pub id: u8,
    pub residual: f64,
    pub permutations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentitiesResponse {
    pub lengths: [f64; 4],
    pub identities: Vec<IdentityWire>,
    pub max_residual: f64,
}

pub fn identities(l4: [f64; 4]) -> ApiResult<IdentitiesResponse> {
    let r = verify_identities(&lengths(l4)?);
    Ok(IdentitiesResponse {
        lengths: l4,
        max_residual: r.max_residual(),
        identities: r
            .checks
            .iter()
            .map(|c| IdentityWire { id: c.id, residual: c.residual, permutations: c.permutations })
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchSummaryWire {
    pub branch_id: usize,
    pub param_kind: String,
    pub compact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrashofWire {
    pub holds: bool,
    pub margin: f64,
}

/// Per joint, in the order `x, y, z, w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReachableWire {
    pub zero: [bool; 4],
    pub infinity: [bool; 4],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportResponse {
    pub lengths: [f64; 4],
    pub class: String,
    pub orthodiagonal: bool,
    pub branches: Vec<BranchSummaryWire>,
    pub infinity_circles: usize,
    pub infinity_points: usize,
    pub grashof: GrashofWire,
    pub reachable: ReachableWire,
    pub fully_rotating: Vec<String>,
    pub identities: IdentitiesResponse,
}

pub fn report(l4: [f64; 4]) -> ApiResult<ReportResponse> {
    let l = lengths(l4)?;
    let r = topology_report(&l)?;
    Ok(ReportResponse {
        lengths: l4,
        class: r.class.kind.name().to_string(),
        orthodiagonal: r.class.orthodiagonal,
        branches: r
            .finite_branches
            .iter()
            .map(|b| BranchSummaryWire { branch_id: b.branch_id, param_kind: b.kind.name().to_string(), compact: b.compact })
            .collect(),
        infinity_circles: r.infinity_circles,
        infinity_points: r.infinity_points,
        grashof: GrashofWire { holds: r.grashof.holds, margin: r.grashof.margin },
        reachable: ReachableWire { zero: r.reachability.zero, infinity: r.reachability.infinity },
        fully_rotating: r.fully_rotating_joints().iter().map(char::to_string).collect(),
        identities: identities(l4)?,
    })
}
