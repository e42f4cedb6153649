//! Classify a few bar-length tuples into the eight linkage classes.

use fourbar::lengths::{classify, validate_lengths, DEFAULT_CLASS_TOL};

pub fn run() -> fourbar::Result<()> {
    for t in [[1.0, 1.0, 1.0, 1.0], [2.0, 1.0, 2.0, 1.0], [2.0, 2.0, 1.0, 1.0], [1.0, 2.0, 3.0, 4.0], [2.0, 3.0, 4.0, 6.0]] {
        let l = validate_lengths(t[0], t[1], t[2], t[3])?;
        let c = classify(&l, DEFAULT_CLASS_TOL);
        println!("{:<22} {:<10} orthodiagonal={}", l.to_string(), c.kind, c.orthodiagonal);
    }
    // a flat or impossible quadrilateral is rejected up front
    match validate_lengths(5.0, 1.0, 1.0, 1.0) {
        Err(e) => println!("(5, 1, 1, 1) rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
