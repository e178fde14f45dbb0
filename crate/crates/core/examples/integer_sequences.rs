// Two OEIS sequences produced by the closed form: A001515 from T(2, 1) and
// the loopless linear chord diagram counts A278990 from T(0, 1).

use std::error::Error;

use hafnian::{sequence_a001515, sequence_a278990};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = sequence_a001515(10);
    let b = sequence_a278990(10);
    for (m, (x, y)) in a.iter().zip(&b).enumerate() {
        println!("m = {:2}: A001515 {x:>14}  A278990 {y:>12}", m + 1);
    }
    assert_eq!(a[5], 27007.into());
    assert_eq!(b[4], 329.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
