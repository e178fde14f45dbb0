//! Exact commutative rings.
//!
//! A [`RingValue`] carries its ring with it. Values from different rings never
//! combine: the checked methods (`checked_add`, ...) report
//! [`Error::RingMismatch`], the operator impls panic. Code that has already
//! validated its inputs (every matrix holds values of a single ring) uses the
//! operators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;

/// The ring of integers modulo `modulus`.
///
/// The modulus need not be prime. Operations that need an inverse fail with
/// [`Error::NotInvertible`] when it does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularRingSpec {
    modulus: Arc<BigUint>,
}

impl ModularRingSpec {
    pub fn new(modulus: impl Into<BigUint>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigUint::from(2u32) {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        Ok(Self {
            modulus: Arc::new(modulus),
        })
    }

    /// Accepts a signed modulus, as read from text.
    pub fn from_bigint(modulus: &BigInt) -> Result<Self> {
        match modulus.to_biguint() {
            Some(m) => Self::new(m),
            None => Err(Error::InvalidModulus(modulus.to_string())),
        }
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// The modulus as a machine word, when it fits.
    pub fn modulus_u64(&self) -> Option<u64> {
        self.modulus.to_u64()
    }

    /// Primality of the modulus. Exact below 2^64; above that a strong
    /// probable-prime test.
    pub fn is_prime(&self) -> bool {
        match self.modulus_u64() {
            Some(m) => num_prime::nt_funcs::is_prime64(m),
            None => num_prime::nt_funcs::is_prime(self.modulus.as_ref(), None).probably(),
        }
    }

    fn reduce(&self, n: &BigInt) -> BigUint {
        let m = BigInt::from_biguint(Sign::Plus, (*self.modulus).clone());
        n.mod_floor(&m)
            .to_biguint()
            .expect("mod_floor by a positive modulus is nonnegative")
    }
}

impl fmt::Display for ModularRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "integers mod {}", self.modulus)
    }
}

/// Which ring a [`RingValue`] lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ring {
    Integer,
    Modular(ModularRingSpec),
    /// Integer polynomials in the indeterminates `a` and `b`.
    Polynomial,
}

impl Ring {
    pub fn modular(modulus: impl Into<BigUint>) -> Result<Self> {
        ModularRingSpec::new(modulus).map(Ring::Modular)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => write!(f, "integers"),
            Ring::Modular(spec) => spec.fmt(f),
            Ring::Polynomial => write!(f, "integer polynomials in a, b"),
        }
    }
}

/// An element of one of the supported rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingValue {
    Integer(BigInt),
    /// Canonical residue in `[0, modulus)`.
    Modular {
        residue: BigUint,
        ring: ModularRingSpec,
    },
    Polynomial(BivariatePolynomial),
}

impl RingValue {
    pub fn ring(&self) -> Ring {
        match self {
            RingValue::Integer(_) => Ring::Integer,
            RingValue::Modular { ring, .. } => Ring::Modular(ring.clone()),
            RingValue::Polynomial(_) => Ring::Polynomial,
        }
    }

    pub fn same_ring(&self, other: &RingValue) -> bool {
        match (self, other) {
            (RingValue::Integer(_), RingValue::Integer(_)) => true,
            (RingValue::Polynomial(_), RingValue::Polynomial(_)) => true,
            (RingValue::Modular { ring: r1, .. }, RingValue::Modular { ring: r2, .. }) => {
                Arc::ptr_eq(&r1.modulus, &r2.modulus) || r1 == r2
            }
            _ => false,
        }
    }

    fn check_same_ring(&self, other: &RingValue) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            })
        }
    }

    /// Image of `n` under the unital homomorphism from the integers.
    pub fn from_integer(n: impl Into<BigInt>, ring: &Ring) -> RingValue {
        let n = n.into();
        match ring {
            Ring::Integer => RingValue::Integer(n),
            Ring::Modular(spec) => RingValue::Modular {
                residue: spec.reduce(&n),
                ring: spec.clone(),
            },
            Ring::Polynomial => RingValue::Polynomial(BivariatePolynomial::constant(n)),
        }
    }

    pub fn zero(ring: &Ring) -> RingValue {
        Self::from_integer(0, ring)
    }

    pub fn one(ring: &Ring) -> RingValue {
        Self::from_integer(1, ring)
    }

    pub fn integer(n: impl Into<BigInt>) -> RingValue {
        RingValue::Integer(n.into())
    }

    pub fn modular(n: impl Into<BigInt>, ring: &ModularRingSpec) -> RingValue {
        RingValue::Modular {
            residue: ring.reduce(&n.into()),
            ring: ring.clone(),
        }
    }

    pub fn polynomial(p: BivariatePolynomial) -> RingValue {
        RingValue::Polynomial(p)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Integer(n) => n.is_zero(),
            RingValue::Modular { residue, .. } => residue.is_zero(),
            RingValue::Polynomial(p) => p.is_zero(),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingValue::Integer(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<&BigUint> {
        match self {
            RingValue::Modular { residue, .. } => Some(residue),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&BivariatePolynomial> {
        match self {
            RingValue::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &RingValue) -> Result<RingValue> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (RingValue::Integer(x), RingValue::Integer(y)) => RingValue::Integer(x + y),
            (RingValue::Modular { residue: x, ring }, RingValue::Modular { residue: y, .. }) => {
                let mut s = x + y;
                if &s >= ring.modulus() {
                    s -= ring.modulus();
                }
                RingValue::Modular {
                    residue: s,
                    ring: ring.clone(),
                }
            }
            (RingValue::Polynomial(x), RingValue::Polynomial(y)) => RingValue::Polynomial(x.add(y)),
            _ => unreachable!("ring tags checked above"),
        })
    }

    pub fn checked_sub(&self, other: &RingValue) -> Result<RingValue> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (RingValue::Integer(x), RingValue::Integer(y)) => RingValue::Integer(x - y),
            (RingValue::Modular { residue: x, ring }, RingValue::Modular { residue: y, .. }) => {
                let s = if x >= y {
                    x - y
                } else {
                    ring.modulus() - y + x
                };
                RingValue::Modular {
                    residue: s,
                    ring: ring.clone(),
                }
            }
            (RingValue::Polynomial(x), RingValue::Polynomial(y)) => RingValue::Polynomial(x.sub(y)),
            _ => unreachable!("ring tags checked above"),
        })
    }

    pub fn checked_mul(&self, other: &RingValue) -> Result<RingValue> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (RingValue::Integer(x), RingValue::Integer(y)) => RingValue::Integer(x * y),
            (RingValue::Modular { residue: x, ring }, RingValue::Modular { residue: y, .. }) => {
                RingValue::Modular {
                    residue: (x * y) % ring.modulus(),
                    ring: ring.clone(),
                }
            }
            (RingValue::Polynomial(x), RingValue::Polynomial(y)) => RingValue::Polynomial(x.mul(y)),
            _ => unreachable!("ring tags checked above"),
        })
    }

    /// `self^e` by square-and-multiply; `x^0` is one for every `x`, zero
    /// included.
    pub fn pow(&self, mut e: u64) -> RingValue {
        let mut base = self.clone();
        let mut acc = RingValue::one(&self.ring());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `n · self`, defined as `from_integer(n) · self`.
    pub fn scalar_mul(&self, n: impl Into<BigInt>) -> RingValue {
        let n = n.into();
        match self {
            RingValue::Polynomial(p) => RingValue::Polynomial(p.scalar_mul(&n)),
            _ => &RingValue::from_integer(n, &self.ring()) * self,
        }
    }

    /// Returns `y` with `d · y = self`.
    ///
    /// Integers and polynomials require `d` to divide exactly; residues
    /// require `d` to be a unit modulo the modulus.
    pub fn exact_div_small(&self, d: u64) -> Result<RingValue> {
        assert!(d > 0, "divisor must be positive");
        match self {
            RingValue::Integer(n) => {
                let (q, r) = n.div_rem(&BigInt::from(d));
                if r.is_zero() {
                    Ok(RingValue::Integer(q))
                } else {
                    Err(Error::NotDivisible {
                        value: n.to_string(),
                        divisor: d,
                    })
                }
            }
            RingValue::Modular { residue, ring } => {
                let inv = BigUint::from(d)
                    .modinv(ring.modulus())
                    .ok_or_else(|| Error::NotInvertible {
                        divisor: d,
                        modulus: ring.modulus().to_string(),
                    })?;
                Ok(RingValue::Modular {
                    residue: (residue * inv) % ring.modulus(),
                    ring: ring.clone(),
                })
            }
            RingValue::Polynomial(p) => p.exact_div_small(d).map(RingValue::Polynomial),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Integer(n) => n.fmt(f),
            RingValue::Modular { residue, .. } => residue.fmt(f),
            RingValue::Polynomial(p) => p.fmt(f),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingValue> for &RingValue {
            type Output = RingValue;

            fn $method(self, rhs: &RingValue) -> RingValue {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $trait<RingValue> for RingValue {
            type Output = RingValue;

            fn $method(self, rhs: RingValue) -> RingValue {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&RingValue> for RingValue {
            type Output = RingValue;

            fn $method(self, rhs: &RingValue) -> RingValue {
                (&self).$method(rhs)
            }
        }

        impl $trait<RingValue> for &RingValue {
            type Output = RingValue;

            fn $method(self, rhs: RingValue) -> RingValue {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &RingValue {
    type Output = RingValue;

    fn neg(self) -> RingValue {
        match self {
            RingValue::Integer(n) => RingValue::Integer(-n),
            RingValue::Modular { residue, ring } => RingValue::Modular {
                residue: if residue.is_zero() {
                    BigUint::zero()
                } else {
                    ring.modulus() - residue
                },
                ring: ring.clone(),
            },
            RingValue::Polynomial(p) => RingValue::Polynomial(p.neg()),
        }
    }
}

impl Neg for RingValue {
    type Output = RingValue;

    fn neg(self) -> RingValue {
        -&self
    }
}

impl From<i64> for RingValue {
    fn from(n: i64) -> Self {
        RingValue::Integer(BigInt::from(n))
    }
}

impl From<BigInt> for RingValue {
    fn from(n: BigInt) -> Self {
        RingValue::Integer(n)
    }
}

impl From<BivariatePolynomial> for RingValue {
    fn from(p: BivariatePolynomial) -> Self {
        RingValue::Polynomial(p)
    }
}
