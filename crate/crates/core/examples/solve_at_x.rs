//! Post-examination: every configuration with a prescribed input tangent.

use fourbar::lengths::validate_lengths;
use fourbar::proj::ProjReal;
use fourbar::solver::solve_at_x;

pub fn run() -> fourbar::Result<()> {
    let cases = [((1.0, 1.0, 1.0, 1.0), 2.0), ((2.0, 1.0, 2.0, 1.0), 1.0), ((2.0, 2.0, 1.0, 1.0), 1.0), ((2.0, 3.0, 4.0, 6.0), 0.8)];
    for ((a, b, c, d), x) in cases {
        let l = validate_lengths(a, b, c, d)?;
        let out = solve_at_x(&l, ProjReal::from_f64(x));
        println!("{l} at x = {x}: {} configuration(s)", out.len());
        for cfg in out {
            println!("  y={} z={} w={}  u={:.6} v={:.6}", cfg.y, cfg.z, cfg.w, cfg.u(), cfg.v());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
