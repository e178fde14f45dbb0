// Hf(T(b + 1, b)) equals the Bessel polynomial y_m at b.

use std::error::Error;

use hafnian::{bessel_eval, bessel_like_coefficients, hafnian_toeplitz, RingValue, ToeplitzSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for m in 0..=5 {
        let c = bessel_like_coefficients(m);
        let coeffs: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
        println!("y_{m}: [{}]", coeffs.join(", "));
    }
    for b in 0..=4 {
        let m = 8;
        let y = bessel_eval(m, &RingValue::integer(b));
        let hf = hafnian_toeplitz(&ToeplitzSpec::integer(b + 1, b, m));
        println!("b = {b}: y_{m}(b) = {y}, Hf(T(b+1, b)) = {hf}");
        assert_eq!(y, hf);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
