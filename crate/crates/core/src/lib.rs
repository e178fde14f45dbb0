//! Exact hafnians of symmetric matrices over commutative rings.
//!
//! The general hafnian is computed by its definition ([`hafnian_bruteforce`]).
//! For the Toeplitz family `T(a, b)` (zero diagonal, `a` next to the diagonal,
//! `b` everywhere else) [`hafnian_toeplitz`] evaluates a closed form in `O(m)`
//! ring operations, which also ties these hafnians to Bessel polynomials and
//! to perfect-matching counts of arc-diagram multigraphs.

pub mod bessel;
pub mod combinatorics;
pub mod commands;
pub mod error;
pub mod hafnian;
pub mod matchings;
pub mod matrix;
pub mod matrix_file;
pub mod poly;
pub mod ring;
pub mod sequences;
pub mod toeplitz;

pub use bessel::{bessel_eval, bessel_like_coefficients, BesselCoefficients};
pub use combinatorics::{binomial, double_factorial_odd};
pub use error::{Error, Result};
pub use hafnian::{
    enumerate_pair_partitions, hafnian_bruteforce, scale, sum_expansion, PairPartition,
};
pub use matchings::{
    build_g, count_disjoint_edge_selections_bruteforce, count_disjoint_edge_selections_closed,
    count_perfect_matchings, enumerate_perfect_matchings, path_graph, EdgeSelection, Matching,
    Multigraph,
};
pub use matrix::{IndexSubset, SymmetricMatrix};
pub use poly::BivariatePolynomial;
pub use ring::{ModularRingSpec, Ring, RingValue};
pub use sequences::{sequence_a001515, sequence_a278990};
pub use toeplitz::{
    build_j, build_t, build_u, hafnian_j, hafnian_toeplitz, hafnian_toeplitz_with,
    CoefficientMode, ToeplitzSpec,
};
