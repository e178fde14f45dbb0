// The hafnian straight from its definition: every way of splitting the
// indices into pairs contributes the product of the paired entries.

use std::error::Error;

use hafnian::{enumerate_pair_partitions, hafnian_bruteforce, SymmetricMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = SymmetricMatrix::from_integers(&[
        [0, 1, 2, 3],
        [1, 0, 4, 5],
        [2, 4, 0, 6],
        [3, 5, 6, 0],
    ])?;

    let mut total = 0i64;
    for p in enumerate_pair_partitions(a.order())? {
        let w = p.weight(&a);
        println!("{p}  weight {w}");
        total += i64::try_from(w.as_integer().expect("integer matrix"))?;
    }
    let hf = hafnian_bruteforce(&a)?;
    println!("sum of weights {total}, hafnian {hf}");
    assert_eq!(hf.to_string(), total.to_string());

    // 1*6 + 2*5 + 3*4
    assert_eq!(total, 28);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
