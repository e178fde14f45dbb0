//! Polynomials in two commuting indeterminates `a` and `b` with integer
//! coefficients.
//!
//! Terms are kept in a map from the exponent pair `(i, j)` (meaning
//! `a^i b^j`) to a nonzero coefficient, so two polynomials are equal exactly
//! when their maps are equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::RingValue;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · a^i · b^j`.
    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// The indeterminate `a`.
    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The indeterminate `b`.
    pub fn b() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `((i, j), coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `i + j` over the stored terms, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    fn add_term(&mut self, exp: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&exp, c) in &other.terms {
            out.add_term(exp, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&exp, c) in &other.terms {
            out.add_term(exp, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn scalar_mul(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * n)).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing unless each one is a
    /// multiple of `d`.
    pub fn exact_div_small(&self, d: u64) -> Result<Self> {
        let d_big = BigInt::from(d);
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let (q, r) = c.div_rem(&d_big);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    value: self.to_string(),
                    divisor: d,
                });
            }
            terms.insert(e, q);
        }
        Ok(Self { terms })
    }

    /// Substitutes `a_val` for `a` and `b_val` for `b`, mapping each integer
    /// coefficient into the target ring with [`RingValue::from_integer`].
    pub fn eval(&self, a_val: &RingValue, b_val: &RingValue) -> Result<RingValue> {
        let ring = a_val.ring();
        if ring != b_val.ring() {
            return Err(Error::RingMismatch {
                left: ring,
                right: b_val.ring(),
            });
        }
        let mut acc = RingValue::zero(&ring);
        for (&(i, j), c) in &self.terms {
            let term = RingValue::from_integer(c.clone(), &ring)
                * a_val.pow(u64::from(i))
                * b_val.pow(u64::from(j));
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Renders terms by decreasing exponent of `a`, then of `b`, e.g.
    /// `a^2 - 2*a*b + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("a", i), ("b", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
