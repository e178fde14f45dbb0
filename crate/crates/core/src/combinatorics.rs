//! Exact combinatorial numbers.

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::ZERO;
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(2m)! / (m! 2^m) = (2m - 1)!!`, the number of ways to split `2m` items
/// into unordered pairs.
pub fn double_factorial_odd(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}
