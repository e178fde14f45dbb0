//! Multigraphs, perfect matchings and disjoint edge selections in path graphs.
//!
//! Vertices are numbered from zero. Parallel edges are kept as an integer
//! multiplicity per vertex pair, and a matching's weight is the product of the
//! multiplicities of its pairs, so the weighted matching count of a multigraph
//! is the hafnian of its multiplicity matrix.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hafnian::enumerate_pair_partitions;
use crate::matrix::SymmetricMatrix;
use crate::ring::{Ring, RingValue};

/// Undirected multigraph without loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    multiplicity: Vec<u64>,
}

impl Multigraph {
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            multiplicity: vec![0; vertex_count * vertex_count],
        }
    }

    /// Builds the graph with `f(i, j)` parallel edges between `i < j`.
    pub fn from_fn<F>(vertex_count: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> u64,
    {
        let mut g = Self::empty(vertex_count);
        for i in 0..vertex_count {
            for j in (i + 1)..vertex_count {
                g.set(i, j, f(i, j));
            }
        }
        g
    }

    pub fn complete(vertex_count: usize) -> Self {
        Self::from_fn(vertex_count, |_, _| 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.multiplicity[i * self.vertex_count + j]
    }

    /// Sets the number of edges between `i` and `j` (both directions).
    ///
    /// # Panics
    ///
    /// On a loop `i == j` with nonzero multiplicity.
    pub fn set(&mut self, i: usize, j: usize, count: u64) {
        assert!(i != j || count == 0, "loops are not allowed");
        let n = self.vertex_count;
        self.multiplicity[i * n + j] = count;
        self.multiplicity[j * n + i] = count;
    }

    /// Vertex pairs `(i, j)`, `i < j`, joined by at least one edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.vertex_count)
            .tuple_combinations()
            .map(|(i, j)| (i, j, self.multiplicity(i, j)))
            .filter(|&(_, _, c)| c > 0)
    }

    /// Simple-graph complement: pairs with no edge get one, all others none.
    pub fn complement(&self) -> Multigraph {
        Self::from_fn(self.vertex_count, |i, j| u64::from(self.multiplicity(i, j) == 0))
    }

    /// The multiplicity matrix over the integers.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_upper(Ring::Integer, self.vertex_count, |i, j| {
            RingValue::integer(self.multiplicity(i, j))
        })
    }
}

/// The path graph on `n` vertices: edges `(i, i + 1)`.
pub fn path_graph(n: usize) -> Multigraph {
    Multigraph::from_fn(n, |i, j| u64::from(j == i + 1))
}

/// The arc-diagram multigraph on `n` vertices: `a` edges between neighbours,
/// `b` between every other pair. Its multiplicity matrix is `T(a, b)`.
pub fn build_g(a: u64, b: u64, n: usize) -> Multigraph {
    Multigraph::from_fn(n, |i, j| if j == i + 1 { a } else { b })
}

/// A perfect matching together with its multiplicity product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: BigUint,
}

/// Weighted number of perfect matchings: zero for odd vertex counts, one for
/// the empty graph.
///
/// Memoized over the set of still-unmatched vertices, always matching the
/// lowest one first, so the cost is bounded by the number of reachable
/// vertex subsets rather than the number of matchings.
///
/// # Panics
///
/// For graphs with more than 64 vertices.
pub fn count_perfect_matchings(g: &Multigraph) -> BigUint {
    let n = g.vertex_count;
    if n % 2 == 1 {
        return BigUint::zero();
    }
    assert!(n <= 64, "matching count is limited to 64 vertices");
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    count_from(g, full, &mut memo)
}

fn count_from(g: &Multigraph, free: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if free == 0 {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&free) {
        return c.clone();
    }
    let i = free.trailing_zeros() as usize;
    let rest = free & !(1u64 << i);
    let mut total = BigUint::zero();
    let mut partners = rest;
    while partners != 0 {
        let j = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        let mult = g.multiplicity(i, j);
        if mult > 0 {
            total += count_from(g, rest & !(1u64 << j), memo) * mult;
        }
    }
    memo.insert(free, total.clone());
    total
}

/// Every perfect matching of nonzero weight, in the canonical pairing order
/// of [`enumerate_pair_partitions`].
pub fn enumerate_perfect_matchings(
    g: &Multigraph,
) -> Result<impl Iterator<Item = Matching> + '_> {
    let partitions = enumerate_pair_partitions(g.vertex_count)?;
    Ok(partitions.filter_map(move |p| {
        let weight = p
            .pairs()
            .iter()
            .fold(BigUint::one(), |w, &(i, j)| w * g.multiplicity(i, j));
        (!weight.is_zero()).then(|| Matching {
            pairs: p.pairs().to_vec(),
            weight,
        })
    }))
}

/// Pairwise vertex-disjoint edges of the path graph on `vertex_count`
/// vertices. Edge `e` joins vertices `e` and `e + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSelection {
    vertex_count: usize,
    edges: Vec<usize>,
}

impl EdgeSelection {
    pub fn new(vertex_count: usize, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        if let Some(&last) = edges.last() {
            if last + 1 >= vertex_count {
                return Err(Error::InvalidSubset(format!(
                    "edge {last} is not in the path on {vertex_count} vertices"
                )));
            }
        }
        if let Some(w) = edges.windows(2).find(|w| w[1] < w[0] + 2) {
            return Err(Error::InvalidSubset(format!(
                "edges {} and {} share a vertex",
                w[0], w[1]
            )));
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Undoes [`insert_separating_edges`]: the path length and the edge set
    /// it came from.
    pub fn remove_separating_edges(&self) -> (usize, Vec<usize>) {
        let k = self.edges.len();
        let n = self.vertex_count + 1 - k.max(1);
        (n, self.edges.iter().enumerate().map(|(i, &e)| e - i).collect())
    }
}

/// Maps any `k` edges of the path on `n` vertices to `k` disjoint edges of
/// the path on `n + k - 1` vertices by inserting a fresh edge after each of
/// the first `k - 1` selected edges.
///
/// # Panics
///
/// If `edges` is unsorted, repeats an edge or names an edge outside the path.
pub fn insert_separating_edges(n: usize, edges: &[usize]) -> EdgeSelection {
    assert!(edges.windows(2).all(|w| w[0] < w[1]), "edges must be strictly increasing");
    assert!(edges.iter().all(|&e| e + 1 < n), "edge outside the path");
    let k = edges.len();
    let shifted = edges.iter().enumerate().map(|(i, &e)| e + i).collect();
    EdgeSelection::new(n + k.max(1) - 1, shifted).expect("shifted edges are disjoint")
}

/// Number of ways to pick `k` pairwise vertex-disjoint edges of the path on
/// `n` vertices, by trying every `k`-subset of its edges.
pub fn count_disjoint_edge_selections_bruteforce(n: usize, k: usize) -> u64 {
    let edge_count = n.saturating_sub(1);
    (0..edge_count)
        .combinations(k)
        .filter(|c| c.windows(2).all(|w| w[1] >= w[0] + 2))
        .count() as u64
}

/// `C(n - k, k)`.
pub fn count_disjoint_edge_selections_closed(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial((n - k) as u64, k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hafnian::hafnian_bruteforce;

    #[test]
    fn path_graph_examples() {
        assert_eq!(path_graph(2).edges().collect_vec(), [(0, 1, 1)]);
        assert_eq!(
            path_graph(5).edges().map(|(i, j, _)| (i, j)).collect_vec(),
            [(0, 1), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(path_graph(1).edges().count(), 0);
    }

    #[test]
    fn build_g_examples() {
        assert_eq!(build_g(0, 1, 6), path_graph(6).complement());
        assert_eq!(build_g(1, 1, 6), Multigraph::complete(6));
        let g = build_g(2, 1, 4);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(0, 2), 1);
        assert_eq!(g.multiplicity(3, 2), 2);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_perfect_matchings(&Multigraph::complete(4)), BigUint::from(3u32));
        assert_eq!(count_perfect_matchings(&build_g(2, 1, 4)), BigUint::from(7u32));
        assert_eq!(count_perfect_matchings(&build_g(0, 1, 6)), BigUint::from(5u32));
        assert_eq!(count_perfect_matchings(&Multigraph::empty(0)), BigUint::one());
        assert_eq!(count_perfect_matchings(&Multigraph::complete(5)), BigUint::zero());
    }

    #[test]
    fn enumeration_of_fig_graphs() {
        let g = build_g(2, 1, 4);
        let ms = enumerate_perfect_matchings(&g).unwrap().collect_vec();
        let weights = ms.iter().map(|m| m.weight.clone()).collect_vec();
        assert_eq!(weights, [4u32, 1, 2].map(BigUint::from));
        assert_eq!(ms[0].pairs, [(0, 1), (2, 3)]);

        let g = build_g(0, 1, 6);
        let ms = enumerate_perfect_matchings(&g).unwrap().collect_vec();
        assert_eq!(ms.len(), 5);
        assert!(ms.iter().all(|m| m.weight.is_one()));
        assert!(ms
            .iter()
            .all(|m| m.pairs.iter().all(|&(i, j)| j > i + 1)));

        let ms = enumerate_perfect_matchings(&path_graph(4)).unwrap().collect_vec();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].pairs, [(0, 1), (2, 3)]);
    }

    #[test]
    fn enumeration_rejects_odd_order() {
        assert_eq!(
            enumerate_perfect_matchings(&path_graph(3)).err(),
            Some(Error::OddOrder(3))
        );
    }

    #[test]
    fn count_matches_hafnian_of_k6() {
        let g = Multigraph::complete(6);
        assert_eq!(
            RingValue::integer(count_perfect_matchings(&g)),
            hafnian_bruteforce(&g.adjacency_matrix()).unwrap()
        );
    }

    #[test]
    fn edge_selection_examples() {
        assert_eq!(count_disjoint_edge_selections_bruteforce(5, 0), 1);
        assert_eq!(count_disjoint_edge_selections_bruteforce(4, 2), 1);
        assert_eq!(count_disjoint_edge_selections_bruteforce(7, 3), 4);
        assert_eq!(count_disjoint_edge_selections_bruteforce(6, 4), 0);
        assert_eq!(count_disjoint_edge_selections_closed(7, 3), BigUint::from(4u32));
        assert_eq!(count_disjoint_edge_selections_closed(9, 0), BigUint::one());
        assert_eq!(count_disjoint_edge_selections_closed(8, 4), BigUint::one());
        assert_eq!(count_disjoint_edge_selections_closed(3, 5), BigUint::zero());
    }

    #[test]
    fn edge_selection_validation() {
        assert!(EdgeSelection::new(5, vec![0, 1]).is_err());
        assert!(EdgeSelection::new(5, vec![4]).is_err());
        assert_eq!(EdgeSelection::new(5, vec![3, 0]).unwrap().edges(), &[0, 3]);
    }

    #[test]
    fn insertion_example_p5_to_p7() {
        // Three of the four edges of P5 become three disjoint edges of P7.
        let sel = insert_separating_edges(5, &[0, 1, 2]);
        assert_eq!(sel.vertex_count(), 7);
        assert_eq!(sel.edges(), &[0, 2, 4]);
        assert_eq!(sel.remove_separating_edges(), (5, vec![0, 1, 2]));
    }
}
