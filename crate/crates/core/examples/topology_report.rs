//! Branch structure, Grashof condition and joint mobility for one linkage
//! of each class.

use fourbar::analysis::topology_report;
use fourbar::identities::verify_identities;
use fourbar::lengths::validate_lengths;

pub fn run() -> fourbar::Result<()> {
    let tuples = [
        (1.0, 1.0, 1.0, 1.0),
        (2.0, 1.0, 2.0, 1.0),
        (2.0, 1.0, 1.0, 2.0),
        (2.0, 2.0, 1.0, 1.0),
        (2.0, 3.0, 2.0, 1.0),
        (1.0, 2.0, 3.0, 4.0),
        (3.0, 2.0, 4.0, 1.0),
        (1.0, 2.0, 3.0, 3.5),
    ];
    for (a, b, c, d) in tuples {
        let l = validate_lengths(a, b, c, d)?;
        let r = topology_report(&l)?;
        let kinds: Vec<_> = r.finite_branches.iter().map(|b| b.kind.name()).collect();
        println!(
            "{:<10} {:<20} branches {:?} circles at inf {} points at inf {} grashof {} (margin {:+.3}) fully rotating {:?} identity residual {:.1e}",
            r.class.kind.name(),
            l.to_string(),
            kinds,
            r.infinity_circles,
            r.infinity_points,
            r.grashof.holds,
            r.grashof.margin,
            r.fully_rotating_joints(),
            verify_identities(&l).max_residual(),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
