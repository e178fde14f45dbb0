// Perfect matchings of the arc-diagram multigraphs G(a, b), whose
// multiplicity matrix is T(a, b).

use std::error::Error;

use hafnian::{
    build_g, count_perfect_matchings, enumerate_perfect_matchings, hafnian_toeplitz, path_graph,
    RingValue, ToeplitzSpec,
};

fn one_based(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = build_g(2, 1, 4);
    println!("G(2, 1) on four vertices:");
    for m in enumerate_perfect_matchings(&g)? {
        println!("  {}  weight {}", one_based(&m.pairs), m.weight);
    }
    let count = count_perfect_matchings(&g);
    println!("  total {count}");
    assert_eq!(count, 7u32.into());

    let g = build_g(0, 1, 6);
    assert_eq!(g, path_graph(6).complement());
    println!("G(0, 1) on six vertices (complement of the path):");
    for m in enumerate_perfect_matchings(&g)? {
        println!("  {}", one_based(&m.pairs));
    }
    let count = count_perfect_matchings(&g);
    assert_eq!(
        RingValue::integer(count.clone()),
        hafnian_toeplitz(&ToeplitzSpec::integer(0, 1, 3))
    );
    println!("  total {count}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
