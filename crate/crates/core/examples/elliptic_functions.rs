//! Jacobi elliptic functions: quarter periods, real and complex values, and
//! the inverse of dc.

use fourbar::elliptic::{dc, inverse_dc, jacobi_complex, jacobi_real, Modulus};
use num_complex::Complex64;

pub fn run() -> fourbar::Result<()> {
    let m = Modulus::new(0.3125)?;
    println!("k = {}  K = {:.15}  K' = {:.15}", m.k, m.K, m.K_prime);
    for u in [0.0, 0.5 * m.K, m.K, 2.0 * m.K] {
        let j = jacobi_real(u, m.k)?;
        println!("u = {u:.6}: sn = {:+.12} cn = {:+.12} dn = {:.12}", j.sn, j.cn, j.dn);
    }
    let t = Complex64::new(0.4, 0.5 * m.K_prime);
    let j = jacobi_complex(t, m.k)?;
    println!("sn({t}) = {:.12}, sn² + cn² = {:.3e}", j.sn, (j.sn * j.sn + j.cn * j.cn - 1.0).norm());
    let half = dc(m.K / 2.0, m.k)?;
    println!("dc(K/2) = {half:.15} (sqrt(1 + k') = {:.15}), back to u = {:.15}", (1.0 + m.k_prime).sqrt(), inverse_dc(half, m.k)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> fourbar::Result<()> {
    run()
}
