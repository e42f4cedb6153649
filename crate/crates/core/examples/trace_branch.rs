//! Walk once around each branch of an elliptic linkage and print the
//! tangents, joint angles and closure residual.

use fourbar::lengths::validate_lengths;
use fourbar::solver::{enumerate_branches, sample_normalized};

pub fn run() -> fourbar::Result<()> {
    let l = validate_lengths(2.0, 3.0, 4.0, 6.0)?;
    for b in enumerate_branches(&l)? {
        println!("branch {} ({}, {:?} domain [{:.6}, {:.6}])", b.branch_id, b.param_kind.name(), b.domain.kind, b.domain.lo, b.domain.hi);
        for u in b.domain.normalized_grid(8) {
            let c = sample_normalized(&l, &b, u)?;
            let deg = c.rho.map(f64::to_degrees);
            println!(
                "  u={u:.3}  x={:>10.5} y={:>10.5} z={:>10.5} w={:>10.5}  rho=({:7.2}, {:7.2}, {:7.2}, {:7.2})  residual={:.1e}",
                c.x.value(), c.y.value(), c.z.value(), c.w.value(), deg[0], deg[1], deg[2], deg[3], c.closure_residual(&l)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
