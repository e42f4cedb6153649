//! Numerical check of the length identities relating `α, β, γ, δ` to
//! `σ−α, σ−β, σ−γ, σ−δ`.
//!
//! Each identity is a chain `e₀ = e₁ = …` of expressions homogeneous of some
//! degree `n`. Its residual is `max |eᵢ − e₀| / σⁿ`, maximised over all 24
//! relabelings of the bars. Identity 8 only holds when `α²+γ² = β²+δ²`, so it
//! is evaluated on the relabelings that satisfy that condition.

use crate::lengths::BarLengths;

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    /// 1 to 8.
    pub id: u8,
    pub residual: f64,
    /// Number of relabelings the identity was evaluated on.
    pub permutations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn get(&self, id: u8) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// A chain of expressions that should all be equal, plus its degree.
type Chain = (u32, Vec<f64>);

fn chains(id: u8, l: [f64; 4]) -> Vec<Chain> {
    let [a, b, c, d] = l;
    let s = (a + b + c + d) / 2.0;
    let (sa, sb, sc, sd) = (s - a, s - b, s - c, s - d);
    let sum_sq = a * a + b * b + c * c + d * d;
    match id {
        1 => vec![(1, vec![s - a - b, -(s - c - d)])],
        2 => vec![(
            2,
            vec![sa * sb - a * b, s * (s - a - b), -s * (s - c - d), c * d - sc * sd],
        )],
        3 => vec![(
            2,
            vec![
                sa * sb - c * d,
                sa * sb - (c + d) * c + c * c,
                sa * sb - (2.0 * s - a - b) * c + c * c,
                (s - a - c) * (s - b - c),
                -(s - c - a) * (s - d - a),
                a * b - sc * sd,
            ],
        )],
        4 => vec![
            (1, vec![a + b, sc + sd]),
            (1, vec![a - b, sb - sa]),
            (2, vec![a * b + c * d, sa * sb + sc * sd]),
        ],
        5 => vec![(
            4,
            vec![
                a * b * c * d - sa * sb * sc * sd,
                (sa * sb + sc * sd - c * d) * c * d - sa * sb * sc * sd,
                (sa * sb - c * d) * (c * d - sc * sd),
                s * (s - a - b) * (s - a - c) * (s - b - c),
            ],
        )],
        6 => {
            let pairs = a * b + a * c + a * d + b * c + b * d + c * d;
            let spairs = sa * sb + sa * sc + sa * sd + sb * sc + sb * sd + sc * sd;
            vec![(
                2,
                vec![
                    sum_sq,
                    (a + b + c + d).powi(2) - 2.0 * pairs,
                    (sa + sb + sc + sd).powi(2) - 2.0 * spairs,
                    sa * sa + sb * sb + sc * sc + sd * sd,
                ],
            )]
        }
        7 => vec![(
            2,
            vec![
                a * b - c * d,
                0.5 * ((a + b).powi(2) + (c - d).powi(2) - sum_sq),
                0.5 * ((sc + sd).powi(2) + (sc - sd).powi(2) - sum_sq),
                0.5 * (2.0 * sc * sc + 2.0 * sd * sd - sum_sq),
                0.5 * (-sa * sa - sb * sb + sc * sc + sd * sd),
            ],
        )],
        8 => vec![
            (
                2,
                vec![
                    sb * (s - b - d),
                    0.25 * ((a + c - b).powi(2) - d * d),
                    0.25 * ((a + c).powi(2) - 2.0 * b * (a + c) + b * b - d * d),
                    0.5 * (b - a) * (b - c),
                ],
            ),
            (2, vec![sa * (s - a - d), 0.5 * (b - a) * (b + c)]),
            (2, vec![sc * (s - c - d), 0.5 * (b + a) * (b - c)]),
            (2, vec![s * (s - d), 0.5 * (b + a) * (b + c)]),
            (2, vec![sa * sc, 0.5 * (a * c + b * d), sb * sd]),
        ],
        _ => unreachable!("identities are numbered 1 to 8"),
    }
}

fn chain_residual(chains: &[Chain], s: f64) -> f64 {
    chains
        .iter()
        .flat_map(|(deg, exprs)| {
            let scale = s.powi(*deg as i32);
            exprs.iter().map(move |e| (e - exprs[0]).abs() / scale)
        })
        .fold(0.0, f64::max)
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in (0..4).filter(|&j| j != i) {
            for k in (0..4).filter(|&k| k != i && k != j) {
                out.push([i, j, k, 6 - i - j - k]);
            }
        }
    }
    out
}

/// Evaluates identities 1 to 7 on every relabeling, and identity 8 on the
/// relabelings with `α²+γ² = β²+δ²` (to `1e−9·σ²`), if any.
pub fn verify_identities(lengths: &BarLengths) -> IdentityReport {
    let l = lengths.as_array();
    let s = lengths.sigma();
    let mut checks = Vec::with_capacity(8);
    for id in 1..=8u8 {
        let mut residual: f64 = 0.0;
        let mut count = 0;
        for p in permutations() {
            let q = p.map(|i| l[i]);
            if id == 8 {
                let ortho = q[0] * q[0] + q[2] * q[2] - q[1] * q[1] - q[3] * q[3];
                if ortho.abs() > 1e-9 * s * s {
                    continue;
                }
            }
            residual = residual.max(chain_residual(&chains(id, q), s));
            count += 1;
        }
        if count > 0 {
            checks.push(IdentityCheck { id, residual, permutations: count });
        }
    }
    IdentityReport { checks }
}
