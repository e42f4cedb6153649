//! Configuration spaces of planar four-bar linkages.
//!
//! A linkage is described by its bar lengths `(α, β, γ, δ)` and its state by
//! the half-angle tangents `x, y, z, w` of the four rotational angles. The
//! tangents live on the projective line so that a joint folded flat (`ρ = π`)
//! is the ordinary value `∞` instead of a special case.
//!
//! The crate is organised bottom-up:
//!
//! * [`proj`] projective reals.
//! * [`lengths`] validation, the eight-class taxonomy, the conjugate linkage.
//! * [`coeffs`] the three coupling polynomials `f`, `g`, `h` and their solvers.
//! * [`identities`] and [`strip`] algebraic bookkeeping on lengths.
//! * [`elliptic`] complete integrals and Jacobi functions, real and complex.
//! * [`solver`] amplitudes, phase shifts, branch charts, sampling, the
//!   post-examination solver and solutions at infinity.
//! * [`analysis`] Grashof condition, self-intersection, topology summaries.
//!
//! ```
//! use fourbar::{lengths::validate_lengths, solver::{enumerate_branches, sample_branch}};
//!
//! let l = validate_lengths(2.0, 3.0, 4.0, 6.0)?;
//! let branches = enumerate_branches(&l)?;
//! let c = sample_branch(&l, &branches[0], 0.3)?;
//! assert!(c.closure_residual(&l) < 1e-9 * l.sigma());
//! # Ok::<(), fourbar::Error>(())
//! ```

pub mod analysis;
pub mod coeffs;
pub mod elliptic;
mod error;
pub mod identities;
pub mod lengths;
pub mod proj;
pub mod signed;
pub mod solver;
pub mod strip;

pub use error::{Error, Result};
pub use lengths::{classify, validate_lengths, BarLengths, ClassKind, LinkageClass};
pub use proj::ProjReal;
