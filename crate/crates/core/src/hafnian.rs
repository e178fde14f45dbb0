//! The hafnian by its definition, plus the two general identities used to
//! derive closed forms: scaling and the subset sum expansion of `Hf(A + B)`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{IndexSubset, SymmetricMatrix};
use crate::ring::RingValue;

/// Orders at or above this split the top-level pairings across threads.
const PARALLEL_MIN_ORDER: usize = 12;

/// A split of `0..n` into unordered pairs, each pair stored as `(i, j)` with
/// `i < j`, sorted by first element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
}

impl PairPartition {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Product of the matrix entries picked out by the pairs.
    pub fn weight(&self, a: &SymmetricMatrix) -> RingValue {
        self.pairs
            .iter()
            .fold(RingValue::one(a.ring()), |acc, &(i, j)| acc * a.get(i, j))
    }
}

impl fmt::Display for PairPartition {
    /// One-based, e.g. `(1 2)(3 4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(i, j) in &self.pairs {
            write!(f, "({} {})", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// Iterator over all pair partitions of `0..n`.
///
/// Order is canonical: the smallest unused index is paired with each larger
/// unused index in increasing order, recursing on the rest.
#[derive(Debug, Clone)]
pub struct PairPartitions {
    n: usize,
    used: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl PairPartitions {
    fn next_unused(&self, from: usize) -> Option<usize> {
        (from..self.n).find(|&k| !self.used[k])
    }

    fn fill(&mut self) {
        while self.pairs.len() < self.n / 2 {
            let i = self.next_unused(0).expect("an unused index remains");
            self.used[i] = true;
            let j = self.next_unused(i + 1).expect("an unused partner remains");
            self.used[j] = true;
            self.pairs.push((i, j));
        }
    }

    fn current(&self) -> PairPartition {
        PairPartition {
            pairs: self.pairs.clone(),
        }
    }
}

impl Iterator for PairPartitions {
    type Item = PairPartition;

    fn next(&mut self) -> Option<PairPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.current());
        }
        while let Some((i, j)) = self.pairs.pop() {
            self.used[j] = false;
            if let Some(next) = self.next_unused(j + 1) {
                self.used[next] = true;
                self.pairs.push((i, next));
                self.fill();
                return Some(self.current());
            }
            self.used[i] = false;
        }
        self.done = true;
        None
    }
}

/// All `(n - 1)!!` pair partitions of `0..n`.
pub fn enumerate_pair_partitions(n: usize) -> Result<PairPartitions> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    Ok(PairPartitions {
        n,
        used: vec![false; n],
        pairs: Vec::with_capacity(n / 2),
        started: false,
        done: false,
    })
}

/// Hafnian by the definition: the sum over all pair partitions of the product
/// of the paired entries. The order-0 hafnian is one.
///
/// Expands along the smallest remaining index, so the work is `(n - 1)!!`
/// leaf products less the branches cut off by zero entries. Large orders
/// evaluate the top-level branches on the rayon pool and add them back in
/// index order.
///
/// # Panics
///
/// If the order exceeds 64; such a sum is far out of reach anyway.
pub fn hafnian_bruteforce(a: &SymmetricMatrix) -> Result<RingValue> {
    let n = a.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    assert!(n <= 64, "brute-force hafnian is limited to order 64");
    if n == 0 {
        return Ok(RingValue::one(a.ring()));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if n < PARALLEL_MIN_ORDER {
        return Ok(expand(a, full));
    }
    let rest = full & !1;
    let branches: Vec<Option<RingValue>> = (1..n)
        .into_par_iter()
        .map(|j| {
            let entry = a.get(0, j);
            (!entry.is_zero()).then(|| entry * &expand(a, rest & !(1u64 << j)))
        })
        .collect();
    Ok(branches
        .into_iter()
        .flatten()
        .fold(RingValue::zero(a.ring()), |acc, t| acc + t))
}

fn expand(a: &SymmetricMatrix, remaining: u64) -> RingValue {
    if remaining == 0 {
        return RingValue::one(a.ring());
    }
    let i = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1u64 << i);
    let mut acc = RingValue::zero(a.ring());
    let mut partners = rest;
    while partners != 0 {
        let j = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        let entry = a.get(i, j);
        if entry.is_zero() {
            continue;
        }
        acc = acc + entry * &expand(a, rest & !(1u64 << j));
    }
    acc
}

/// `c · A`, entrywise.
pub fn scale(a: &SymmetricMatrix, c: &RingValue) -> Result<SymmetricMatrix> {
    if &c.ring() != a.ring() {
        return Err(Error::RingMismatch {
            left: a.ring().clone(),
            right: c.ring(),
        });
    }
    Ok(a.map(a.ring().clone(), |x| c * x))
}

/// `Σ_k Σ_{|α| = 2k} Hf(A[α]) · Hf(B(α))`, which equals `Hf(A + B)`.
///
/// Every inner hafnian is taken by [`hafnian_bruteforce`].
pub fn sum_expansion(a: &SymmetricMatrix, b: &SymmetricMatrix) -> Result<RingValue> {
    a.check_compatible(b)?;
    let n = a.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let mut total = RingValue::zero(a.ring());
    for k in 0..=n / 2 {
        for alpha in IndexSubset::all_of_size(n, 2 * k) {
            let kept = hafnian_bruteforce(&a.submatrix_keep(&alpha)?)?;
            if kept.is_zero() {
                continue;
            }
            let dropped = hafnian_bruteforce(&b.submatrix_drop(&alpha)?)?;
            total = total + kept * dropped;
        }
    }
    Ok(total)
}
