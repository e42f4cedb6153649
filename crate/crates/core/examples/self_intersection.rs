//! The isogram's two motions: the convex parallelogram never crosses itself,
//! the butterfly always does.

use fourbar::analysis::{is_self_intersected, segment_oracle};
use fourbar::lengths::validate_lengths;
use fourbar::solver::{enumerate_branches, sample_normalized};

pub fn run() -> fourbar::Result<()> {
    let l = validate_lengths(2.0, 1.0, 2.0, 1.0)?;
    for b in enumerate_branches(&l)? {
        let (mut crossed, mut total, mut agree) = (0, 0, 0);
        for u in b.domain.normalized_grid(100) {
            let c = sample_normalized(&l, &b, u)?;
            let Ok(s) = is_self_intersected(&c) else { continue };
            total += 1;
            crossed += s as usize;
            agree += (s == segment_oracle(&c)) as usize;
        }
        println!("branch {}: {crossed}/{total} self-intersected, sign test agrees with geometry on {agree}", b.branch_id);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
