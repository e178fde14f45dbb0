// Scaling, the subset expansion of Hf(A + B), and T(a, b) = J(b) + U(a - b).

use std::error::Error;

use hafnian::{
    build_j, build_t, build_u, hafnian_bruteforce, hafnian_j, hafnian_toeplitz, scale,
    sum_expansion, RingValue, SymmetricMatrix, ToeplitzSpec,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = SymmetricMatrix::from_integers(&[
        [0, 2, -1, 4, 0, 1],
        [2, 0, 3, 1, 1, 0],
        [-1, 3, 0, 2, 5, 1],
        [4, 1, 2, 0, -2, 3],
        [0, 1, 5, -2, 0, 1],
        [1, 0, 1, 3, 1, 0],
    ])?;
    let c = RingValue::integer(-3);
    let lhs = hafnian_bruteforce(&scale(&a, &c)?)?;
    let rhs = c.pow(3) * hafnian_bruteforce(&a)?;
    println!("Hf(cA) = {lhs}, c^3 Hf(A) = {rhs}");
    assert_eq!(lhs, rhs);

    let (av, bv, m) = (5, 2, 3);
    let j = build_j(&RingValue::integer(bv), m);
    let u = build_u(&RingValue::integer(av - bv), m);
    assert_eq!(j.add(&u)?, build_t(&ToeplitzSpec::integer(av, bv, m)));
    let expanded = sum_expansion(&j, &u)?;
    let closed = hafnian_toeplitz(&ToeplitzSpec::integer(av, bv, m));
    println!("subset expansion {expanded}, closed form {closed}");
    assert_eq!(expanded, closed);

    let hj = hafnian_j(&RingValue::integer(2), 4);
    assert_eq!(hj, hafnian_bruteforce(&build_j(&RingValue::integer(2), 4))?);
    println!("Hf(J(2)) at order 8 = {hj}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
