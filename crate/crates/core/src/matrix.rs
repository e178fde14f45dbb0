//! Symmetric matrices with zero diagonal, and index subsets for taking
//! principal submatrices.
//!
//! Indices are zero-based throughout.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingValue};

/// A symmetric square matrix over one ring, with zero diagonal.
///
/// Diagonal entries passed to a constructor are replaced by zero; off-diagonal
/// asymmetry is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    ring: Ring,
    order: usize,
    entries: Vec<RingValue>,
}

impl SymmetricMatrix {
    pub fn new(ring: Ring, rows: Vec<Vec<RingValue>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: order,
                });
            }
            for v in row {
                if v.ring() != ring {
                    return Err(Error::RingMismatch {
                        left: ring.clone(),
                        right: v.ring(),
                    });
                }
                entries.push(v);
            }
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
            entries[i * order + i] = RingValue::zero(&ring);
        }
        Ok(Self {
            ring,
            order,
            entries,
        })
    }

    /// Integer matrix from machine integers.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| RingValue::from(x)).collect())
            .collect();
        Self::new(Ring::Integer, rows)
    }

    /// Builds the matrix whose entry at `i < j` (and `j > i`) is `f(i, j)`.
    ///
    /// # Panics
    ///
    /// If `f` returns a value outside `ring`.
    pub fn from_upper<F>(ring: Ring, order: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> RingValue,
    {
        let zero = RingValue::zero(&ring);
        let mut entries = vec![zero; order * order];
        for i in 0..order {
            for j in (i + 1)..order {
                let v = f(i, j);
                assert!(v.ring() == ring, "entry ({i}, {j}) is not in {ring}");
                entries[j * order + i] = v.clone();
                entries[i * order + j] = v;
            }
        }
        Self {
            ring,
            order,
            entries,
        }
    }

    pub fn zero(ring: Ring, order: usize) -> Self {
        let zero = RingValue::zero(&ring);
        Self::from_upper(ring, order, |_, _| zero.clone())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &RingValue {
        assert!(i < self.order && j < self.order, "index out of range");
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingValue]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &SymmetricMatrix) -> Result<SymmetricMatrix> {
        self.check_compatible(other)?;
        Ok(Self {
            ring: self.ring.clone(),
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    /// Entrywise image under `f`; the diagonal is reset to zero afterwards.
    pub fn map<F>(&self, ring: Ring, mut f: F) -> SymmetricMatrix
    where
        F: FnMut(&RingValue) -> RingValue,
    {
        Self::from_upper(ring, self.order, |i, j| f(self.get(i, j)))
    }

    pub(crate) fn check_compatible(&self, other: &SymmetricMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        Ok(())
    }

    /// Principal submatrix on the rows and columns in `subset`.
    pub fn submatrix_keep(&self, subset: &IndexSubset) -> Result<SymmetricMatrix> {
        if subset.universe() != self.order {
            return Err(Error::UniverseMismatch {
                subset: subset.universe(),
                order: self.order,
            });
        }
        Ok(self.principal(subset.members()))
    }

    /// Principal submatrix left after removing the rows and columns in
    /// `subset`.
    pub fn submatrix_drop(&self, subset: &IndexSubset) -> Result<SymmetricMatrix> {
        if subset.universe() != self.order {
            return Err(Error::UniverseMismatch {
                subset: subset.universe(),
                order: self.order,
            });
        }
        Ok(self.principal(subset.complement().members()))
    }

    fn principal(&self, idx: &[usize]) -> SymmetricMatrix {
        Self::from_upper(self.ring.clone(), idx.len(), |i, j| {
            self.get(idx[i], idx[j]).clone()
        })
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> SymmetricMatrix {
        assert_eq!(perm.len(), self.order, "permutation length");
        Self::from_upper(self.ring.clone(), self.order, |i, j| {
            self.get(perm[i], perm[j]).clone()
        })
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

/// A sorted set of distinct indices drawn from `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSubset {
    universe: usize,
    members: Vec<usize>,
}

impl IndexSubset {
    pub fn new(universe: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!(
                "repeated index in {members:?}"
            )));
        }
        if let Some(&last) = members.last() {
            if last >= universe {
                return Err(Error::InvalidSubset(format!(
                    "index {last} outside 0..{universe}"
                )));
            }
        }
        Ok(Self { universe, members })
    }

    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            universe,
            members: (0..universe).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn complement(&self) -> IndexSubset {
        let mut inside = vec![false; self.universe];
        for &i in &self.members {
            inside[i] = true;
        }
        IndexSubset {
            universe: self.universe,
            members: (0..self.universe).filter(|&i| !inside[i]).collect(),
        }
    }

    /// All `size`-element subsets of `0..universe`, in lexicographic order.
    pub fn all_of_size(universe: usize, size: usize) -> impl Iterator<Item = IndexSubset> {
        (0..universe)
            .combinations(size)
            .map(move |members| IndexSubset { universe, members })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(order: usize) -> SymmetricMatrix {
        SymmetricMatrix::from_upper(Ring::Integer, order, |_, _| RingValue::integer(1))
    }

    #[test]
    fn diagonal_is_zeroed() {
        let m = SymmetricMatrix::from_integers(&[[7, 1], [1, -4]]).unwrap();
        assert!(m.get(0, 0).is_zero());
        assert!(m.get(1, 1).is_zero());
        assert_eq!(m.get(0, 1), &RingValue::integer(1));
    }

    #[test]
    fn asymmetry_rejected() {
        let err = SymmetricMatrix::from_integers(&[[0, 1, 2], [1, 0, 3], [2, 4, 0]]).unwrap_err();
        assert_eq!(err, Error::Asymmetric { row: 1, col: 2 });
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows: Vec<Vec<i64>> = vec![vec![0, 1], vec![1]];
        assert!(matches!(
            SymmetricMatrix::from_integers(&rows),
            Err(Error::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn keep_examples() {
        let a = ones(4);
        assert_eq!(a.submatrix_keep(&IndexSubset::full(4)).unwrap(), a);
        assert_eq!(a.submatrix_keep(&IndexSubset::empty(4)).unwrap().order(), 0);
        let kept = a.submatrix_keep(&IndexSubset::new(4, vec![0, 2]).unwrap()).unwrap();
        assert_eq!(kept, ones(2));
    }

    #[test]
    fn drop_examples() {
        let a = SymmetricMatrix::from_upper(Ring::Integer, 4, |i, j| {
            RingValue::integer((10 * i + j) as i64)
        });
        assert_eq!(a.submatrix_drop(&IndexSubset::empty(4)).unwrap(), a);
        assert_eq!(a.submatrix_drop(&IndexSubset::full(4)).unwrap().order(), 0);
        let dropped = a.submatrix_drop(&IndexSubset::new(4, vec![1, 3]).unwrap()).unwrap();
        let kept = a.submatrix_keep(&IndexSubset::new(4, vec![0, 2]).unwrap()).unwrap();
        assert_eq!(dropped, kept);
        assert_eq!(dropped.get(0, 1), &RingValue::integer(2));
    }

    #[test]
    fn universe_mismatch() {
        let a = ones(4);
        assert_eq!(
            a.submatrix_keep(&IndexSubset::full(3)).unwrap_err(),
            Error::UniverseMismatch { subset: 3, order: 4 }
        );
    }

    #[test]
    fn subset_validation_and_enumeration() {
        assert!(IndexSubset::new(3, vec![0, 0]).is_err());
        assert!(IndexSubset::new(3, vec![3]).is_err());
        assert_eq!(IndexSubset::new(5, vec![3, 1]).unwrap().members(), &[1, 3]);
        assert_eq!(IndexSubset::all_of_size(6, 2).count(), 15);
        assert_eq!(IndexSubset::all_of_size(4, 0).count(), 1);
        let c = IndexSubset::new(5, vec![0, 4]).unwrap().complement();
        assert_eq!(c.members(), &[1, 2, 3]);
    }

    #[test]
    fn addition_checks_shape_and_ring() {
        let a = ones(2);
        assert_eq!(
            a.add(&ones(3)).unwrap_err(),
            Error::DimensionMismatch { left: 2, right: 3 }
        );
        let p = SymmetricMatrix::zero(Ring::Polynomial, 2);
        assert!(matches!(a.add(&p), Err(Error::RingMismatch { .. })));
        let doubled = a.add(&a).unwrap();
        assert_eq!(doubled.get(1, 0), &RingValue::integer(2));
    }
}
