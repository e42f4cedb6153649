//! Configurations with a joint folded flat, with their reachability
//! conditions.

use fourbar::lengths::validate_lengths;
use fourbar::solver::solutions_at_infinity;

pub fn run() -> fourbar::Result<()> {
    for (a, b, c, d) in [(2.0, 3.0, 4.0, 6.0), (1.0, 2.0, 3.0, 3.5), (1.0, 2.0, 3.0, 4.0), (1.0, 1.0, 1.0, 1.0)] {
        let l = validate_lengths(a, b, c, d)?;
        println!("{l}");
        for s in solutions_at_infinity(&l) {
            let tuple = s.tuple.map(|t| t.map(|p| p.to_string()).join(", ")).unwrap_or_else(|| "-".into());
            println!("  {:?} reachable={} [{}] ({}, value {:.4})", s.kind, s.reachable, tuple, s.condition.description, s.condition.value);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
