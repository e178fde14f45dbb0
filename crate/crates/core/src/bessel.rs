//! Bessel polynomial coefficients.
//!
//! `y_m(x) = Σ_k c_k x^k` with `c_k = (m+k)! / (k! (m-k)! 2^k)`. The same
//! integers are the coefficients of the Toeplitz hafnian closed form.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ring::RingValue;

/// The coefficients `c_0..=c_m` of the degree-`m` Bessel polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BesselCoefficients {
    degree: u64,
    coeffs: Vec<BigUint>,
}

impl BesselCoefficients {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Checks `c_0 = 1` and `2(k+1) c_{k+1} = (m+k+1)(m-k) c_k`.
    pub fn satisfies_recurrence(&self) -> bool {
        let m = self.degree;
        self.coeffs.len() as u64 == m + 1
            && self.coeffs[0].is_one()
            && self.coeffs.windows(2).zip(0u64..).all(|(w, k)| {
                &w[1] * (2 * (k + 1)) == &w[0] * (m + k + 1) * (m - k)
            })
    }

    /// `y_m(x)` by Horner's rule, with no division in the target ring.
    pub fn eval(&self, x: &RingValue) -> RingValue {
        let ring = x.ring();
        self.coeffs
            .iter()
            .rev()
            .fold(RingValue::zero(&ring), |acc, c| {
                acc * x + RingValue::from_integer(c.clone(), &ring)
            })
    }
}

/// Yields `c_0, c_1, ..., c_m` by `c_{k+1} = c_k (m+k+1)(m-k) / (2(k+1))`.
///
/// Each step multiplies before dividing; the division is always exact.
#[derive(Debug, Clone)]
pub struct CoefficientRecurrence {
    m: u64,
    k: u64,
    current: Option<BigUint>,
}

impl CoefficientRecurrence {
    pub fn new(m: u64) -> Self {
        Self {
            m,
            k: 0,
            current: Some(BigUint::one()),
        }
    }
}

impl Iterator for CoefficientRecurrence {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        let c = self.current.take()?;
        let (m, k) = (self.m, self.k);
        if k < m {
            let numer = &c * (m + k + 1) * (m - k);
            let (q, r) = numer.div_rem(&BigUint::from(2 * (k + 1)));
            assert!(r.is_zero(), "coefficient recurrence left a remainder at k = {k}");
            self.current = Some(q);
            self.k += 1;
        }
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = if self.current.is_some() {
            (self.m - self.k + 1) as usize
        } else {
            0
        };
        (left, Some(left))
    }
}

impl ExactSizeIterator for CoefficientRecurrence {}

pub fn bessel_like_coefficients(m: u64) -> BesselCoefficients {
    BesselCoefficients {
        degree: m,
        coeffs: CoefficientRecurrence::new(m).collect(),
    }
}

/// The degree-`m` Bessel polynomial at `x`.
pub fn bessel_eval(m: u64, x: &RingValue) -> RingValue {
    bessel_like_coefficients(m).eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ModularRingSpec, Ring};

    fn factorial(n: u64) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, i| acc * i)
    }

    fn by_factorials(m: u64) -> Vec<BigUint> {
        (0..=m)
            .map(|k| factorial(m + k) / (factorial(k) * factorial(m - k) * (BigUint::one() << k)))
            .collect()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(bessel_like_coefficients(0).coeffs(), big(&[1]).as_slice());
        assert_eq!(bessel_like_coefficients(2).coeffs(), big(&[1, 3, 3]).as_slice());
        assert_eq!(
            bessel_like_coefficients(3).coeffs(),
            big(&[1, 6, 15, 15]).as_slice()
        );
    }

    #[test]
    fn recurrence_matches_factorial_formula() {
        for m in 0..=40 {
            let c = bessel_like_coefficients(m);
            assert_eq!(c.coeffs(), by_factorials(m).as_slice(), "m = {m}");
            assert!(c.satisfies_recurrence());
        }
    }

    #[test]
    fn recurrence_is_exact_up_to_1000() {
        // The iterator asserts a zero remainder at every step.
        for m in (0..=1000).step_by(37).chain([1000]) {
            assert_eq!(CoefficientRecurrence::new(m).len(), m as usize + 1);
            assert_eq!(CoefficientRecurrence::new(m).count(), m as usize + 1);
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(bessel_eval(0, &RingValue::integer(9)), RingValue::integer(1));
        assert_eq!(bessel_eval(2, &RingValue::integer(1)), RingValue::integer(7));
        assert_eq!(bessel_eval(2, &RingValue::integer(0)), RingValue::integer(1));
        assert_eq!(bessel_eval(1, &RingValue::integer(0)), RingValue::integer(1));
        // y_3(x) = 1 + 6x + 15x^2 + 15x^3
        assert_eq!(bessel_eval(3, &RingValue::integer(-1)), RingValue::integer(-5));
    }

    #[test]
    fn eval_in_modular_ring() {
        let z5 = ModularRingSpec::new(5u32).unwrap();
        let x = RingValue::modular(1, &z5);
        assert_eq!(bessel_eval(2, &x), RingValue::modular(2, &z5));
        assert_eq!(
            bessel_eval(4, &RingValue::zero(&Ring::Modular(z5.clone()))),
            RingValue::modular(1, &z5)
        );
    }
}
