//! Exact binomial and Gaussian-binomial coefficients.
//!
//! The binomial convention here is load-bearing: C(a, b) = 0 whenever
//! b < 0, b > a, or a < 0. The closed-form enumerator sums rely on this at
//! their range boundaries.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// C(a, b) with the zero-outside-range convention, over signed arguments.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// C(n, k) over unsigned arguments.
pub fn binomial_u(n: usize, k: usize) -> BigUint {
    binomial(n as i64, k as i64)
        .to_biguint()
        .expect("binomial of non-negative args is non-negative")
}

/// Gaussian binomial [t choose s]_q: the number of s-dimensional subspaces
/// of a t-dimensional space over GF(q). Zero when t < s, one when s = 0.
pub fn gaussian_binomial(t: i64, s: i64, q: u64) -> BigUint {
    if s < 0 || t < 0 || s > t {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..s as u32 {
        num *= q.pow(t as u32 - i) - 1u32;
        den *= q.pow(s as u32 - i) - 1u32;
    }
    &num / &den
}

/// [t]_s = prod_{i=0}^{s-1} (q^t - q^i).
pub fn falling_q_factorial(t: u32, s: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let qt = q.pow(t);
    let mut out = BigUint::one();
    for i in 0..s {
        out *= &qt - q.pow(i);
    }
    out
}
