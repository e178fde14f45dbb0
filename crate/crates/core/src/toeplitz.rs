//! Hafnians of the Toeplitz family `T(a, b)`.
//!
//! `T(a, b)` has order `2m`, zero diagonal, `a` on the first sub- and
//! superdiagonal and `b` everywhere else. It splits as `J(b) + U(a - b)` where
//! `J(q)` is `q` off the diagonal and `U(q)` is `q` on the first off-diagonals
//! only, and its hafnian is
//!
//! ```text
//! Hf(T(a, b)) = Σ_{k=0}^{m} (a - b)^(m-k) · b^k · (m+k)! / (k! (m-k)! 2^k)
//! ```
//!
//! with `0^0 = 1`. [`hafnian_toeplitz`] evaluates this with `O(m)` ring
//! operations.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bessel::CoefficientRecurrence;
use crate::combinatorics::double_factorial_odd;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::ring::{ModularRingSpec, Ring, RingValue};

/// `(a, b, m)`: the order-`2m` matrix `T(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToeplitzSpec {
    a: RingValue,
    b: RingValue,
    m: u64,
}

impl ToeplitzSpec {
    pub fn new(a: RingValue, b: RingValue, m: u64) -> Result<Self> {
        if !a.same_ring(&b) {
            return Err(Error::RingMismatch {
                left: a.ring(),
                right: b.ring(),
            });
        }
        Ok(Self { a, b, m })
    }

    /// Integer entries.
    pub fn integer(a: i64, b: i64, m: u64) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            m,
        }
    }

    pub fn a(&self) -> &RingValue {
        &self.a
    }

    pub fn b(&self) -> &RingValue {
        &self.b
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m as usize
    }

    pub fn ring(&self) -> Ring {
        self.a.ring()
    }
}

pub fn build_t(spec: &ToeplitzSpec) -> SymmetricMatrix {
    SymmetricMatrix::from_upper(spec.ring(), spec.order(), |i, j| {
        if j - i == 1 {
            spec.a.clone()
        } else {
            spec.b.clone()
        }
    })
}

pub fn build_j(q: &RingValue, m: u64) -> SymmetricMatrix {
    SymmetricMatrix::from_upper(q.ring(), 2 * m as usize, |_, _| q.clone())
}

pub fn build_u(q: &RingValue, m: u64) -> SymmetricMatrix {
    let zero = RingValue::zero(&q.ring());
    SymmetricMatrix::from_upper(q.ring(), 2 * m as usize, |i, j| {
        if j - i == 1 {
            q.clone()
        } else {
            zero.clone()
        }
    })
}

/// `Hf(J(q)) = q^m (2m - 1)!!`.
pub fn hafnian_j(q: &RingValue, m: u64) -> RingValue {
    q.pow(m).scalar_mul(double_factorial_odd(m))
}

/// How the integer coefficients `c_k` enter the target ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientMode {
    /// Compute `c_k` as exact integers and map each one into the ring.
    Integer,
    /// Run the coefficient recurrence inside the ring, dividing by
    /// `2(k+1)` there. Modular rings need a prime modulus above `2m`.
    InRing,
}

/// `Hf(T(a, b))` by the closed form.
///
/// Modular rings with a prime modulus above `2m` use the in-ring recurrence;
/// every other case computes integer coefficients and maps them in.
pub fn hafnian_toeplitz(spec: &ToeplitzSpec) -> RingValue {
    let mode = match spec.ring() {
        Ring::Modular(ring) if in_ring_eligible(&ring, spec.m) => CoefficientMode::InRing,
        _ => CoefficientMode::Integer,
    };
    hafnian_toeplitz_with(spec, mode).expect("mode chosen to be valid")
}

/// `Hf(T(a, b))` with an explicit coefficient mode.
///
/// Fails with [`Error::ModulusTooSmall`] when `InRing` is requested over a
/// modulus that is composite or at most `2m`.
pub fn hafnian_toeplitz_with(spec: &ToeplitzSpec, mode: CoefficientMode) -> Result<RingValue> {
    match (mode, spec.ring()) {
        (CoefficientMode::Integer, _) => Ok(homogeneous_sum(spec, CoefficientRecurrence::new(spec.m).map(
            |c| RingValue::from_integer(c, &spec.ring()),
        ))),
        (CoefficientMode::InRing, Ring::Modular(ring)) => {
            if !in_ring_eligible(&ring, spec.m) {
                return Err(Error::ModulusTooSmall {
                    modulus: ring.modulus().to_string(),
                    bound: 2 * spec.m,
                });
            }
            match ring.modulus_u64() {
                Some(p) => Ok(RingValue::modular(word::hafnian(spec, p), &ring)),
                None => Ok(in_ring_generic(spec)),
            }
        }
        (CoefficientMode::InRing, _) => Ok(in_ring_generic(spec)),
    }
}

fn in_ring_eligible(ring: &ModularRingSpec, m: u64) -> bool {
    ring.modulus() > &BigUint::from(2 * m) && ring.is_prime()
}

/// `H_j = (a - b) H_{j-1} + c_j b^j`, `H_0 = c_0`, gives `H_m` equal to the
/// closed-form sum without ever dividing by `a - b` or `b`.
fn homogeneous_sum<I>(spec: &ToeplitzSpec, coeffs: I) -> RingValue
where
    I: IntoIterator<Item = RingValue>,
{
    let ring = spec.ring();
    let diff = &spec.a - &spec.b;
    let mut b_pow = RingValue::one(&ring);
    let mut acc = RingValue::zero(&ring);
    for (k, c) in coeffs.into_iter().enumerate() {
        if k > 0 {
            b_pow = b_pow * &spec.b;
            acc = acc * &diff;
        }
        acc = acc + c * &b_pow;
    }
    acc
}

/// The coefficient recurrence run on ring elements through
/// [`RingValue::exact_div_small`].
pub(crate) fn in_ring_generic(spec: &ToeplitzSpec) -> RingValue {
    let ring = spec.ring();
    let m = spec.m;
    let mut c = RingValue::one(&ring);
    let coeffs = (0..=m).map(move |k| {
        let out = c.clone();
        if k < m {
            let step = c.scalar_mul((m + k + 1) as u128 * (m - k) as u128);
            c = step
                .exact_div_small(2 * (k + 1))
                .expect("2(k+1) is invertible for the eligible moduli");
        }
        out
    });
    homogeneous_sum(spec, coeffs)
}

/// Word-sized modular evaluation for moduli below 2^64.
mod word {
    use super::*;

    #[inline]
    fn mul(x: u64, y: u64, p: u64) -> u64 {
        ((x as u128 * y as u128) % p as u128) as u64
    }

    #[inline]
    fn add(x: u64, y: u64, p: u64) -> u64 {
        let (s, overflow) = x.overflowing_add(y);
        if overflow || s >= p {
            s.wrapping_sub(p)
        } else {
            s
        }
    }

    fn residue(v: &RingValue) -> u64 {
        v.as_residue()
            .and_then(|r| r.to_u64())
            .expect("residue below a 64-bit modulus")
    }

    fn pow(mut x: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, x, p);
            }
            x = mul(x, x, p);
            e >>= 1;
        }
        acc
    }

    /// Runs the homogeneous sum scaled by `D_j = 2^j j!`, which clears the
    /// denominators of the coefficients:
    ///
    /// ```text
    /// N_j = N_{j-1} (m+j)(m-j+1)          (N_j = D_j c_j)
    /// G_j = 2j (a-b) G_{j-1} + N_j b^j    (G_j = D_j H_j)
    /// ```
    ///
    /// so the loop never inverts and the result is `G_m / D_m`. Needs the
    /// prime `p > 2m` for `D_m` to be a unit.
    pub(super) fn hafnian(spec: &ToeplitzSpec, p: u64) -> u64 {
        let m = spec.m;
        let (a, b) = (residue(&spec.a), residue(&spec.b));
        let diff = add(a, p - b, p);
        let mut numer = 1 % p;
        let mut denom = 1 % p;
        let mut b_pow = 1 % p;
        let mut acc = 1 % p;
        for j in 1..=m {
            let two_j = (2 * j) % p;
            numer = mul(numer, mul((m + j) % p, (m - j + 1) % p, p), p);
            denom = mul(denom, two_j, p);
            b_pow = mul(b_pow, b, p);
            acc = add(mul(mul(acc, diff, p), two_j, p), mul(numer, b_pow, p), p);
        }
        mul(acc, pow(denom, p - 2, p), p)
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn fermat_inverse() {
            let p = 1_000_003;
            for i in 1..=2000u64 {
                assert_eq!(mul(i, pow(i, p - 2, p), p), 1, "i = {i}");
            }
        }

        #[test]
        fn add_near_the_top_of_the_word() {
            let p = u64::MAX - 58; // largest prime below 2^64
            assert_eq!(add(p - 1, p - 1, p), p - 2);
            assert_eq!(add(p - 1, 1, p), 0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hafnian::hafnian_bruteforce;
    use crate::poly::BivariatePolynomial;

    fn int(n: i64) -> RingValue {
        RingValue::integer(n)
    }

    #[test]
    fn build_t_examples() {
        let t = build_t(&ToeplitzSpec::integer(4, 9, 1));
        assert_eq!(t, SymmetricMatrix::from_integers(&[[0, 4], [4, 0]]).unwrap());

        for m in 0..5 {
            assert_eq!(build_t(&ToeplitzSpec::integer(3, 3, m)), build_j(&int(3), m));
        }

        let t = build_t(&ToeplitzSpec::integer(0, 1, 3));
        for i in 0..6usize {
            for j in 0..6usize {
                let adjacent_or_equal = i.abs_diff(j) <= 1;
                assert_eq!(t.get(i, j).is_zero(), adjacent_or_equal, "({i}, {j})");
            }
        }
    }

    #[test]
    fn build_j_and_u_examples() {
        assert_eq!(build_j(&int(5), 0).order(), 0);
        assert_eq!(hafnian_bruteforce(&build_j(&int(1), 2)).unwrap(), int(3));
        assert_eq!(build_j(&int(7), 1), SymmetricMatrix::from_integers(&[[0, 7], [7, 0]]).unwrap());
        assert_eq!(build_u(&int(7), 1), build_j(&int(7), 1));
        assert_eq!(hafnian_bruteforce(&build_u(&int(5), 2)).unwrap(), int(25));
        assert_eq!(build_u(&int(0), 3), SymmetricMatrix::zero(Ring::Integer, 6));
    }

    #[test]
    fn t_is_j_plus_u() {
        for a in -2..=2 {
            for b in -2..=2 {
                for m in 0..=4 {
                    let t = build_t(&ToeplitzSpec::integer(a, b, m));
                    let sum = build_j(&int(b), m).add(&build_u(&int(a - b), m)).unwrap();
                    assert_eq!(t, sum);
                }
            }
        }
    }

    #[test]
    fn hafnian_j_examples() {
        assert_eq!(hafnian_j(&int(0), 0), int(1));
        assert_eq!(hafnian_j(&int(1), 3), int(15));
        assert_eq!(hafnian_j(&int(2), 2), int(12));
    }

    #[test]
    fn closed_form_examples() {
        let hf = |a, b, m| hafnian_toeplitz(&ToeplitzSpec::integer(a, b, m));
        assert_eq!(hf(2, 1, 1), int(2));
        assert_eq!(hf(2, 1, 4), int(266));
        assert_eq!(hf(0, 1, 3), int(5));
        assert_eq!(hf(1, 1, 3), int(15));
        assert_eq!(hf(3, 0, 4), int(81));
        assert_eq!(hf(0, 0, 0), int(1));
        assert_eq!(hf(0, 0, 2), int(0));
    }

    #[test]
    fn zero_b_leaves_only_adjacent_pairs() {
        for a in -4..=4 {
            for m in 0..=12u32 {
                assert_eq!(
                    hafnian_toeplitz(&ToeplitzSpec::integer(a, 0, m as u64)),
                    int(a.pow(m))
                );
            }
        }
    }

    #[test]
    fn in_ring_mode_over_integers_and_polynomials() {
        for (a, b, m) in [(2, 1, 6), (-3, 2, 5), (0, 1, 7)] {
            let spec = ToeplitzSpec::integer(a, b, m);
            assert_eq!(
                hafnian_toeplitz_with(&spec, CoefficientMode::InRing).unwrap(),
                hafnian_toeplitz(&spec)
            );
        }
        let spec = ToeplitzSpec::new(
            BivariatePolynomial::a().into(),
            BivariatePolynomial::b().into(),
            4,
        )
        .unwrap();
        assert_eq!(
            hafnian_toeplitz_with(&spec, CoefficientMode::InRing).unwrap(),
            hafnian_toeplitz_with(&spec, CoefficientMode::Integer).unwrap()
        );
    }

    #[test]
    fn in_ring_rejects_small_or_composite_modulus() {
        let z7 = ModularRingSpec::new(7u32).unwrap();
        let spec = ToeplitzSpec::new(RingValue::modular(2, &z7), RingValue::modular(1, &z7), 4).unwrap();
        assert!(matches!(
            hafnian_toeplitz_with(&spec, CoefficientMode::InRing),
            Err(Error::ModulusTooSmall { bound: 8, .. })
        ));
        // 266 mod 7 = 0 through the reduce-after route.
        assert_eq!(hafnian_toeplitz(&spec), RingValue::modular(0, &z7));

        let z91 = ModularRingSpec::new(91u32).unwrap();
        let spec = ToeplitzSpec::new(RingValue::modular(2, &z91), RingValue::modular(1, &z91), 2).unwrap();
        assert!(hafnian_toeplitz_with(&spec, CoefficientMode::InRing).is_err());
        assert_eq!(hafnian_toeplitz(&spec), RingValue::modular(7, &z91));
    }

    #[test]
    fn word_and_generic_in_ring_paths_agree() {
        let p = ModularRingSpec::new(2305843009213693951u64).unwrap();
        for (a, b, m) in [(2, 1, 300), (-5, 17, 211), (0, 1, 64), (9, 0, 33)] {
            let spec =
                ToeplitzSpec::new(RingValue::modular(a, &p), RingValue::modular(b, &p), m).unwrap();
            let word = hafnian_toeplitz_with(&spec, CoefficientMode::InRing).unwrap();
            assert_eq!(word, in_ring_generic(&spec));
        }
    }

    #[test]
    fn mixed_rings_rejected() {
        let z5 = ModularRingSpec::new(5u32).unwrap();
        assert!(ToeplitzSpec::new(int(1), RingValue::modular(1, &z5), 2).is_err());
    }
}
