// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Small numerical toolbox: Gauss–Legendre quadrature and bracketed root
//! finding.
//!
//! Both tools are deliberately simple and deterministic. The integrands in
//! this crate are low-degree polynomials in cos θ, which an n-point
//! Gauss–Legendre rule integrates *exactly* for n ≥ 2, and every root we
//! bracket is simple and monotone through its bracket, so plain bisection
//! converges unconditionally to the requested tolerance.

use crate::error::{Error, Result};

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
///
/// Newton iteration on the Legendre polynomial Pₙ with the standard Chebyshev
/// initial guess; weights are 2 / ((1 − x²) Pₙ′(x)²). Accurate to machine
/// precision for the modest orders (n ≤ 64) used here.
///
/// # Panics
/// Panics if `n == 0`.
pub fn gauss_legendre_nodes(n: usize) -> Vec<(f64, f64)> {
    assert!(n > 0, "quadrature order must be positive");
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-style initial guess for the i-th root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
    }
    rule.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("nodes are finite"));
    rule
}

// (Pₙ(x), Pₙ′(x)) via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P₀
    let mut p = x; // P₁
    if n == 1 {
        return (x, 1.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
        p_prev = p;
        p = p_next;
    }
    // Pₙ′(x) = n (x Pₙ − Pₙ₋₁) / (x² − 1).
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// ∫ₐᵇ f(x) dx by the n-point Gauss–Legendre rule.
pub fn integrate_gauss_legendre<F: Fn(f64) -> f64>(a: f64, b: f64, n: usize, f: F) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    gauss_legendre_nodes(n)
        .into_iter()
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// Root of `f` in the bracket [lo, hi] by bisection, to within `tol` on the
/// abscissa. Requires a sign change over the bracket
/// ([`Error::RootNotBracketed`] otherwise); endpoints that are exact zeros
/// are returned directly.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::RootNotBracketed { lo, hi });
    }
    let descending = f_lo > 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == descending {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// First sub-interval of [a, b] (stepping by `step`) across which `f`
/// changes sign, scanning left to right. Returns the bracketing pair, or
/// `None` if no sign change is found.
///
/// Zeros keep their IEEE sign bit (`+0.0` counts as positive), so a
/// quantity that decays to an underflowed `+0.0` tail — an asymptote, not a
/// crossing — is correctly reported as having no sign change.
pub fn scan_first_sign_change<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    step: f64,
) -> Option<(f64, f64)> {
    assert!(step > 0.0, "scan step must be positive");
    let mut x = a;
    let mut fx = f(x);
    while x < b {
        let next = (x + step).min(b);
        let f_next = f(next);
        if fx.signum() != f_next.signum() {
            return Some((x, next));
        }
        x = next;
        fx = f_next;
        if next >= b {
            break;
        }
    }
    None
}
