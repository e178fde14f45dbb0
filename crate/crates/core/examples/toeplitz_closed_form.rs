// The closed form for T(a, b) against the brute-force oracle, over the
// integers and symbolically over Z[a, b].

use std::error::Error;

use hafnian::{
    build_t, hafnian_bruteforce, hafnian_toeplitz, BivariatePolynomial, RingValue, ToeplitzSpec,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = ToeplitzSpec::integer(3, -2, 5);
    println!("T(3, -2), order {}:\n{}", spec.order(), build_t(&spec));
    let closed = hafnian_toeplitz(&spec);
    let brute = hafnian_bruteforce(&build_t(&spec))?;
    println!("closed form {closed}, brute force {brute}");
    assert_eq!(closed, brute);

    for m in 0..=4 {
        let symbolic = ToeplitzSpec::new(
            RingValue::Polynomial(BivariatePolynomial::a()),
            RingValue::Polynomial(BivariatePolynomial::b()),
            m,
        )?;
        let p = hafnian_toeplitz(&symbolic);
        assert_eq!(p, hafnian_bruteforce(&build_t(&symbolic))?);
        println!("m = {m}: Hf(T(a, b)) = {p}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
