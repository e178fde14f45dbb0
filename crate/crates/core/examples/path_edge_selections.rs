// Choosing k pairwise disjoint edges of a path on n vertices: C(n - k, k)
// ways, via the edge-insertion bijection.

use std::error::Error;

use hafnian::matchings::insert_separating_edges;
use hafnian::{count_disjoint_edge_selections_bruteforce, count_disjoint_edge_selections_closed};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [5usize, 7, 10] {
        let row: Vec<String> = (0..=n / 2)
            .map(|k| {
                let brute = count_disjoint_edge_selections_bruteforce(n, k);
                assert_eq!(count_disjoint_edge_selections_closed(n, k), brute.into());
                brute.to_string()
            })
            .collect();
        println!("n = {n:2}: {}", row.join(" "));
    }

    // Edges 1-2, 2-3, 3-4 of P5 spread out to 1-2, 3-4, 5-6 of P7.
    let sel = insert_separating_edges(5, &[0, 1, 2]);
    println!(
        "P5 edges [0, 1, 2] -> P{} edges {:?}",
        sel.vertex_count(),
        sel.edges()
    );
    assert_eq!(sel.edges(), &[0, 2, 4]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
