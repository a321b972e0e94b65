//! Primality, predecessor primes and numeric checks of the summation and
//! prime-gap inequalities the construction leans on.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// These twelve bases are a deterministic witness set for every n < 3.3e24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime strictly below `x`.
pub fn prev_prime(x: u64) -> Option<u64> {
    if x <= 2 {
        return None;
    }
    (2..x).rev().find(|&k| is_prime(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheckReport {
    pub n: u32,
    pub eps: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluates `sum_{m=1}^{n-1} 2^m / m^(1+eps) <= 2 * 2^n / n^(1+eps)`.
///
/// Terms are positive and at most 60 of them are summed with compensation,
/// so the relative error stays within a few ulps.
pub fn check_claim_sum(n: u32, eps: f64) -> Result<BoundCheckReport> {
    if n <= 10 || n > 1000 {
        return Err(Error::Domain(n as u64));
    }
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::InvalidConfig(format!("eps = {eps} outside [0, 1]")));
    }
    let term = |m: u32| (m as f64 * std::f64::consts::LN_2 - (1.0 + eps) * (m as f64).ln()).exp();
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for m in 1..n {
        let y = term(m) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let rhs = 2.0 * term(n);
    Ok(BoundCheckReport { n, eps, lhs: sum, rhs, holds: sum <= rhs })
}

/// Whether a prime lies in `[x - x^(21/40), x]`.
pub fn bhp_gap_holds(x: u64) -> Result<bool> {
    let width = (x as f64).powf(21.0 / 40.0);
    let lo = x as f64 - width;
    if lo < 2.0 {
        return Err(Error::Domain(x));
    }
    let lo = lo.ceil() as u64;
    Ok(match prev_prime(x.saturating_add(1)) {
        Some(p) => p >= lo,
        None => false,
    })
}
