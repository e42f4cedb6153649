//! The conjugate linkage shares the diagonal relation; switching a strip
//! trades two bar signs for a tangent inversion.

use fourbar::coeffs::h_coeffs;
use fourbar::lengths::{conjugate, validate_lengths};
use fourbar::proj::ProjReal;
use fourbar::strip::switch_strip;

pub fn run() -> fourbar::Result<()> {
    let l = validate_lengths(2.0, 3.0, 4.0, 6.0)?;
    let c = conjugate(&l);
    println!("{l} -> conjugate {c}");
    println!("  h of both: {:?}\n             {:?}", h_coeffs(&l).as_array(), h_coeffs(&c).as_array());

    let rhombus = [ProjReal::from_f64(2.0), ProjReal::from_f64(0.5), ProjReal::from_f64(2.0), ProjReal::from_f64(0.5)];
    for variant in 1..=4 {
        let (signed, t) = switch_strip([1.0; 4], rhombus, variant)?;
        println!("  variant {variant}: lengths {signed:?} tangents ({}, {}, {}, {})", t[0], t[1], t[2], t[3]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
