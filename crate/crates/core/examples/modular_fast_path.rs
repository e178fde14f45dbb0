// The closed form modulo a 61-bit prime in O(m) word operations, checked
// against exact integer evaluation reduced afterwards.

use std::error::Error;
use std::time::Instant;

use hafnian::{
    hafnian_toeplitz, hafnian_toeplitz_with, CoefficientMode, ModularRingSpec, Ring, RingValue,
    ToeplitzSpec,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = ModularRingSpec::new(2305843009213693951u64)?;
    let spec = |m| {
        ToeplitzSpec::new(RingValue::modular(2, &ring), RingValue::modular(1, &ring), m)
    };

    let exact = hafnian_toeplitz(&ToeplitzSpec::integer(2, 1, 1000));
    let digits = exact.to_string().len();
    let reduced = RingValue::from_integer(exact.as_integer().cloned().unwrap_or_default(), &Ring::Modular(ring.clone()));
    let in_ring = hafnian_toeplitz_with(&spec(1000)?, CoefficientMode::InRing)?;
    println!("m = 1000: exact value has {digits} digits, residue {in_ring}");
    assert_eq!(reduced, in_ring);

    for m in [100_000u64, 200_000, 400_000] {
        let t = Instant::now();
        let r = hafnian_toeplitz_with(&spec(m)?, CoefficientMode::InRing)?;
        println!("m = {m}: residue {r} in {:.1} ms", t.elapsed().as_secs_f64() * 1e3);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
