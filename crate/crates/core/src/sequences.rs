//! Integer sequences given by the Toeplitz hafnian, indexed from `m = 1`.

use num_bigint::BigInt;

use crate::ring::RingValue;
use crate::toeplitz::{hafnian_toeplitz, ToeplitzSpec};

fn toeplitz_terms(a: i64, b: i64, max_m: u64) -> Vec<BigInt> {
    (1..=max_m)
        .map(|m| match hafnian_toeplitz(&ToeplitzSpec::integer(a, b, m)) {
            RingValue::Integer(n) => n,
            other => unreachable!("integer input gave {other:?}"),
        })
        .collect()
}

/// `Hf(T(2, 1))` for `m = 1..=max_m`: 2, 7, 37, 266, ... (OEIS A001515).
pub fn sequence_a001515(max_m: u64) -> Vec<BigInt> {
    toeplitz_terms(2, 1, max_m)
}

/// `Hf(T(0, 1))` for `m = 1..=max_m`: loopless linear chord diagrams with `m`
/// chords (OEIS A278990).
pub fn sequence_a278990(max_m: u64) -> Vec<BigInt> {
    toeplitz_terms(0, 1, max_m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn a001515_prefix() {
        assert_eq!(sequence_a001515(6), ints(&[2, 7, 37, 266, 2431, 27007]));
        assert_eq!(sequence_a001515(1), ints(&[2]));
        assert_eq!(sequence_a001515(0), ints(&[]));
    }

    #[test]
    fn a278990_prefix() {
        // Alternating sums Σ (-1)^(m-k) c_k: 0, 1, 5, 36, 329.
        assert_eq!(sequence_a278990(5), ints(&[0, 1, 5, 36, 329]));
    }
}
