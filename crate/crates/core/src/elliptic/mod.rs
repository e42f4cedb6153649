//! Complete elliptic integrals of the first kind and the Jacobi functions
//! `sn`, `cn`, `dn`.
//!
//! The parameter is always the **modulus** `k`, never `m = k²`.
//!
//! `K(k)` comes from the arithmetic-geometric mean. Real arguments are reduced
//! into `[0, K/2]` with the quarter-period shift and reflection formulas and
//! evaluated by descending Landen (AGM) recursion. Complex arguments are split
//! once with the addition formula and Jacobi's imaginary transformation,
//! using real evaluations at `k` and at the complementary modulus `k′`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::{Error, Result};

/// Arguments closer than this to a pole are rejected.
pub const POLE_GUARD: f64 = 1e-8;

/// A modulus with its complement and both quarter periods.
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Modulus {
    pub k: f64,
    pub k_prime: f64,
    /// `K(k)`, infinite at `k = 1`.
    pub K: f64,
    /// `K(k′)`, infinite at `k = 0`.
    pub K_prime: f64,
}

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        check_modulus(k)?;
        Ok(Self::from_parts(k, (1.0 - k * k).sqrt()))
    }

    /// Builds from `k²` and `k′²` computed independently, which keeps full
    /// relative precision in whichever of the two is small.
    pub fn from_squares(k2: f64, kp2: f64) -> Result<Self> {
        if !(k2 >= 0.0 && kp2 >= 0.0) || ((k2 + kp2) - 1.0).abs() > 1e-9 {
            return Err(Error::ModulusOutOfRange(k2.sqrt()));
        }
        Ok(Self::from_parts(k2.sqrt(), kp2.sqrt()))
    }

    fn from_parts(k: f64, k_prime: f64) -> Self {
        Self { k, k_prime, K: quarter(k_prime), K_prime: quarter(k) }
    }

    /// The modulus with `k` and `k′` exchanged.
    pub fn complement(&self) -> Modulus {
        Modulus { k: self.k_prime, k_prime: self.k, K: self.K_prime, K_prime: self.K }
    }
}

fn check_modulus(k: f64) -> Result<()> {
    if (0.0..=1.0).contains(&k) {
        Ok(())
    } else {
        Err(Error::ModulusOutOfRange(k))
    }
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 1e-16 * a {
            break;
        }
        (a, b) = (0.5 * (a + b), (a * b).sqrt());
    }
    0.5 * (a + b)
}

/// `K` from the complementary modulus, `π / (2·agm(1, k′))`.
fn quarter(k_prime: f64) -> f64 {
    if k_prime == 0.0 {
        f64::INFINITY
    } else {
        FRAC_PI_2 / agm(1.0, k_prime)
    }
}

/// The complete elliptic integral of the first kind, `0 ≤ k < 1`.
#[allow(non_snake_case)]
pub fn complete_K(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::ModulusOutOfRange(k));
    }
    Ok(quarter((1.0 - k * k).sqrt()))
}

/// `(sn, cn, dn)` at one argument.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiTriple<T> {
    pub sn: T,
    pub cn: T,
    pub dn: T,
}

/// Descending Landen recursion, accurate for `|u|` up to about `K`.
fn landen(u: f64, k: f64, k_prime: f64) -> (f64, f64, f64) {
    let mut a = [0.0f64; 32];
    let mut c = [0.0f64; 32];
    a[0] = 1.0;
    c[0] = k;
    let mut b = k_prime;
    let mut n = 0;
    while c[n].abs() > 1e-16 && n < 31 {
        let an = a[n];
        a[n + 1] = 0.5 * (an + b);
        c[n + 1] = 0.5 * (an - b);
        b = (an * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    while n > 0 {
        phi = 0.5 * (phi + (c[n] / a[n] * phi.sin()).asin());
        n -= 1;
    }
    let sn = phi.sin();
    (sn, phi.cos(), (1.0 - k * k * sn * sn).sqrt())
}

/// Real `(sn, cn, dn)` given `k`, `k′` and `K` consistently.
fn jacobi_parts(u: f64, m: &Modulus) -> (f64, f64, f64) {
    let (k, kp) = (m.k, m.k_prime);
    if k == 0.0 {
        return (u.sin(), u.cos(), 1.0);
    }
    if kp == 0.0 {
        let sech = 1.0 / u.cosh();
        return (u.tanh(), sech, sech);
    }
    let big_k = m.K;
    let sign = if u < 0.0 { -1.0 } else { 1.0 };
    let r = u.abs() % (4.0 * big_k);
    let q = (r / big_k).floor().min(3.0) as u8;
    let v = r - q as f64 * big_k;
    // value at v ∈ [0, K), reflected about K/2 for accuracy near K
    let (s, c, d) = if v == 0.0 {
        (0.0, 1.0, 1.0)
    } else if v <= 0.5 * big_k {
        landen(v, k, kp)
    } else {
        let (s1, c1, d1) = landen(big_k - v, k, kp);
        (c1 / d1, kp * s1 / d1, kp / d1)
    };
    // u = qK + v: quarter-period shifts
    let (s, c, d) = match q {
        0 => (s, c, d),
        1 => (c / d, -kp * s / d, kp / d),
        2 => (-s, -c, d),
        _ => (-c / d, kp * s / d, kp / d),
    };
    (sign * s + 0.0, c + 0.0, d)
}

/// `(sn, cn, dn)(u; k)` for real `u` and `0 ≤ k ≤ 1`.
pub fn jacobi_real(u: f64, k: f64) -> Result<JacobiTriple<f64>> {
    let m = Modulus::new(k)?;
    Ok(jacobi_real_with(u, &m))
}

/// As [`jacobi_real`] with a precomputed modulus.
pub fn jacobi_real_with(u: f64, m: &Modulus) -> JacobiTriple<f64> {
    let (sn, cn, dn) = jacobi_parts(u, m);
    JacobiTriple { sn, cn, dn }
}

/// Distance from `u + iv` to the nearest pole `2mK + i(2n+1)K′`.
fn pole_distance(u: f64, v: f64, m: &Modulus) -> f64 {
    if !m.K_prime.is_finite() {
        return f64::INFINITY;
    }
    let du = if m.K.is_finite() {
        let p = 2.0 * m.K;
        let r = u.rem_euclid(p);
        r.min(p - r)
    } else {
        u.abs()
    };
    let p = 2.0 * m.K_prime;
    let r = (v - m.K_prime).rem_euclid(p);
    du.hypot(r.min(p - r))
}

/// `(sn, cn, dn)(t; k)` for complex `t`.
pub fn jacobi_complex(t: Complex64, k: f64) -> Result<JacobiTriple<Complex64>> {
    let m = Modulus::new(k)?;
    jacobi_complex_with(t, &m)
}

/// As [`jacobi_complex`] with a precomputed modulus.
pub fn jacobi_complex_with(t: Complex64, m: &Modulus) -> Result<JacobiTriple<Complex64>> {
    let distance = pole_distance(t.re, t.im, m);
    if distance < POLE_GUARD {
        return Err(Error::NearPole { distance });
    }
    let k2 = m.k * m.k;
    let (s, c, d) = jacobi_parts(t.re, m);
    let (s1, c1, d1) = jacobi_parts(t.im, &m.complement());
    let den = c1 * c1 + k2 * s * s * s1 * s1;
    Ok(JacobiTriple {
        sn: Complex64::new(s * d1, c * d * s1 * c1) / den,
        cn: Complex64::new(c * c1, -s * d * s1 * d1) / den,
        dn: Complex64::new(d * c1 * d1, -k2 * s * c * s1) / den,
    })
}

/// `dc = dn / cn`, infinite where `cn = 0`.
pub fn dc(u: f64, k: f64) -> Result<f64> {
    let j = jacobi_real(u, k)?;
    Ok(j.dn / j.cn)
}

/// The `u ∈ [0, K)` with `dc(u; k) = v`.
///
/// `dc` increases from 1 at `u = 0` to `∞` at `u = K`, so every `v ≥ 1` has
/// exactly one preimage there. Solved by bisection on the equivalent
/// `sn²(u) = (v²−1)/(v²−k²)`, which stays bounded as `v → ∞`.
pub fn inverse_dc(v: f64, k: f64) -> Result<f64> {
    let m = Modulus::new(k)?;
    inverse_dc_with(v, &m)
}

/// As [`inverse_dc`] with a precomputed modulus.
pub fn inverse_dc_with(v: f64, m: &Modulus) -> Result<f64> {
    if v.is_nan() || v < 1.0 {
        return Err(Error::TargetOutOfRange { value: v });
    }
    if v.is_infinite() {
        return Ok(m.K);
    }
    // sn² = (v²−1)/(v²−k²) and cn² = k′²/(v²−k²); bisect on whichever is
    // small so the comparison keeps relative precision
    let den = (v - m.k) * (v + m.k);
    let sn2 = (v - 1.0) * (v + 1.0) / den;
    let cn2 = m.k_prime * m.k_prime / den;
    let (mut lo, mut hi) = (0.0, if m.K.is_finite() { m.K } else { (v + (v * v - 1.0).sqrt()).ln() + 1.0 });
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (s, c, _) = jacobi_parts(mid, m);
        let below = if sn2 <= cn2 { s * s < sn2 } else { c * c > cn2 };
        if below {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn quarter_period_basics() {
        assert_eq!(complete_K(0.0).unwrap(), PI / 2.0);
        assert!(complete_K(1.0).is_err());
        assert!(complete_K(-0.1).is_err());
        assert!(complete_K(0.5).unwrap() > complete_K(0.4).unwrap());
        // K(1/√2) = Γ(1/4)² / (4√π)
        let gamma_quarter = 3.625_609_908_221_908;
        let want = gamma_quarter * gamma_quarter / (4.0 * PI.sqrt());
        assert!((complete_K(0.5f64.sqrt()).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn special_values() {
        let k = 0.6;
        let m = Modulus::new(k).unwrap();
        let j = jacobi_real(m.K, k).unwrap();
        assert_eq!((j.sn, j.cn), (1.0, 0.0));
        assert!((j.dn - 0.8).abs() < 1e-15);
        let z = jacobi_real(0.0, k).unwrap();
        assert_eq!((z.sn, z.cn, z.dn), (0.0, 1.0, 1.0));
    }

    #[test]
    fn degenerate_moduli() {
        for u in [-2.0, 0.3, 1.7] {
            let j = jacobi_real(u, 0.0).unwrap();
            assert_eq!((j.sn, j.cn, j.dn), (f64::sin(u), f64::cos(u), 1.0));
            let h = jacobi_real(u, 1.0).unwrap();
            assert!((h.sn - u.tanh()).abs() < 1e-15);
            assert!((h.cn - 1.0 / u.cosh()).abs() < 1e-15);
        }
        assert!(jacobi_real(0.0, 1.5).is_err());
    }

    #[test]
    fn shift_by_quarter_period() {
        let k = 0.7;
        let m = Modulus::new(k).unwrap();
        for u in [0.1, 0.9, 2.5, -1.3] {
            let a = jacobi_real(u, k).unwrap();
            let b = jacobi_real(u + m.K, k).unwrap();
            assert!((b.sn - a.cn / a.dn).abs() < 1e-13);
            assert!((b.cn + m.k_prime * a.sn / a.dn).abs() < 1e-13);
            assert!((b.dn - m.k_prime / a.dn).abs() < 1e-13);
        }
    }

    #[test]
    fn imaginary_transformation() {
        let k = 0.3125;
        let m = Modulus::new(k).unwrap();
        for s in [0.2, 1.0, -1.4] {
            let a = jacobi_complex(Complex64::new(0.0, s), k).unwrap();
            let b = jacobi_real(s, m.k_prime).unwrap();
            assert!((a.cn * b.cn - 1.0).norm() < 1e-12);
            let c = jacobi_complex(Complex64::new(m.K, s), k).unwrap();
            assert!((c.sn * b.dn - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn poles_are_guarded() {
        let m = Modulus::new(0.5).unwrap();
        let e = jacobi_complex(Complex64::new(0.0, m.K_prime), 0.5).unwrap_err();
        assert!(matches!(e, Error::NearPole { .. }));
        assert!(jacobi_complex(Complex64::new(2.0 * m.K, 3.0 * m.K_prime), 0.5).is_err());
        assert!(jacobi_complex(Complex64::new(m.K, m.K_prime), 0.5).is_ok());
    }

    #[test]
    fn dc_round_trip() {
        assert_eq!(dc(0.0, 0.4).unwrap(), 1.0);
        for k in [0.1, 0.5, 0.95] {
            let m = Modulus::new(k).unwrap();
            let half = dc(m.K / 2.0, k).unwrap();
            assert!((half - (1.0 + m.k_prime).sqrt()).abs() < 1e-12);
            assert!((inverse_dc(half, k).unwrap() - m.K / 2.0).abs() < 1e-10);
            for v in [1.0, 1.01, 3.0, 1e4] {
                let u = inverse_dc(v, k).unwrap();
                let back = dc(u, k).unwrap();
                assert!(((back - v) / v).abs() < 1e-10, "k={k} v={v} u={u} back={back}");
            }
        }
        assert!(matches!(inverse_dc(0.5, 0.3), Err(Error::TargetOutOfRange { .. })));
    }
}
