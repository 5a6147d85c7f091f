//! Ramsey-theoretic side of the ε-relaxed bound.
//!
//! If χ exceeds `(1/2 + ε)ω + (Δ + 2)/2`, comparing with the bound
//! `½(ω + Δ + 1) + κ̄ + 1 − α/4` gives `εω + α/4 < κ̄ + ½`, hence
//! `ω < (κ̄ + ½)/ε` and `α < 4κ̄ + 2`. A graph with independence number α and
//! clique number ω has fewer than `R(α+1, ω+1) ≤ C(α+ω, α) ≤ 2^(α+ω)`
//! vertices, so `log₂ n < α + ω < (4 + 1/ε)κ̄ + 2 + 1/(2ε)`, i.e.
//!
//! ```text
//! κ̄ > (log₂ n − 2 − 1/(2ε)) / (4 + 1/ε)
//! ```

use num_rational::Rational64;

use crate::invariants::InvariantReport;
use crate::rational::rational_to_f64;

/// Erdős–Szekeres upper bound `C(s+t−2, s−1)` on the Ramsey number R(s, t).
///
/// # Panics
/// If `s` or `t` is zero, or the binomial overflows `u128`.
pub fn ramsey_upper(s: u32, t: u32) -> u128 {
    assert!(s >= 1 && t >= 1, "Ramsey arguments must be positive");
    let n = (s + t - 2) as u128;
    let k = (s - 1).min(t - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// Lower bound on κ̄ that every graph violating the ε-relaxed bound must
/// satisfy, clamped at 0. Logarithm base 2.
pub fn prop12_threshold(n: usize, eps: Rational64) -> f64 {
    assert!(n >= 1, "graphs are non-empty");
    let e = rational_to_f64(eps);
    let t = ((n as f64).log2() - 2.0 - 1.0 / (2.0 * e)) / (4.0 + 1.0 / e);
    t.max(0.0)
}

/// The intermediate inequality `εω + α/4 < κ̄ + ½`, evaluated exactly.
pub fn eps_chain_holds(r: &InvariantReport, eps: Rational64) -> bool {
    let lhs = eps * r.clique as i64 + Rational64::new(r.independence as i64, 4);
    let rhs = Rational64::from_integer(r.kappa_bar as i64) + Rational64::new(1, 2);
    lhs < rhs
}

/// The Ramsey step `n < C(α+ω, α)`.
pub fn ramsey_step_holds(r: &InvariantReport) -> bool {
    (r.n as u128) < ramsey_upper(r.independence as u32 + 1, r.clique as u32 + 1)
}
