//! From lengths to configurations: amplitudes, phase shifts, branch charts,
//! sampling, post-examination and solutions at infinity.

mod branches;
mod chart;
mod config;
mod infinity;
mod params;
mod solve;

pub use branches::{
    enumerate_branches, sample_branch, sample_normalized, BranchDescriptor, Domain, DomainKind, ParamKind,
    Parameter, SnapKind, SnapPoint, XzPiece, ACCEPT_TOL,
};
pub use chart::IMAG_TOL;
pub use config::{closure_oracle, Closure, Configuration, Point};
pub use infinity::{solutions_at_infinity, Condition, InfinityKind, InfinitySolution};
pub use params::{amplitudes, elliptic_data, phase_shifts, Amplitudes, EllipticData, EllipticForm, PhaseShifts};
pub use solve::solve_at_x;
