use hafnian::{
    hafnian_bruteforce, scale, sum_expansion, ModularRingSpec, Ring, RingValue, SymmetricMatrix,
};
use itertools::Itertools;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Random symmetric integer matrix of even order `<= max_order`, entries in
/// `-5..=5`.
fn arb_matrix(max_order: usize) -> impl Strategy<Value = SymmetricMatrix> {
    (0..=max_order / 2).prop_flat_map(|half| {
        let n = 2 * half;
        prop::collection::vec(-5i64..=5, n * n).prop_map(move |raw| {
            SymmetricMatrix::from_upper(Ring::Integer, n, |i, j| RingValue::integer(raw[i * n + j]))
        })
    })
}

fn to_i64_rows(a: &SymmetricMatrix) -> Vec<Vec<i64>> {
    a.rows()
        .map(|r| r.iter().map(|v| i64::try_from(v.as_integer().unwrap()).unwrap()).collect())
        .collect()
}

/// `(1 / (m! 2^m)) Σ_σ a_{σ1 σ2} ... a_{σ(n-1) σn}`, exact in `i128`.
fn hafnian_by_permutations(a: &SymmetricMatrix) -> BigInt {
    let n = a.order();
    let rows = to_i64_rows(a);
    let total: i128 = (0..n)
        .permutations(n)
        .map(|s| {
            s.chunks(2)
                .map(|p| rows[p[0]][p[1]] as i128)
                .product::<i128>()
        })
        .sum();
    let m = (n / 2) as u32;
    let norm: i128 = (1..=m as i128).product::<i128>() * 2i128.pow(m);
    assert_eq!(total % norm, 0, "permutation sum must be divisible by m! 2^m");
    BigInt::from(total / norm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn permutation_definition_agrees(a in arb_matrix(8)) {
        prop_assert_eq!(
            hafnian_bruteforce(&a).unwrap(),
            RingValue::Integer(hafnian_by_permutations(&a))
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scaling_law_integers(a in arb_matrix(8), c in -6i64..=6) {
        let m = (a.order() / 2) as u64;
        let c = RingValue::integer(c);
        prop_assert_eq!(
            hafnian_bruteforce(&scale(&a, &c).unwrap()).unwrap(),
            c.pow(m) * hafnian_bruteforce(&a).unwrap()
        );
    }

    #[test]
    fn scaling_law_modular(a in arb_matrix(8), c in any::<i64>(), p in prop::sample::select(vec![7u64, 12, 1_000_003])) {
        let ring = ModularRingSpec::new(p).unwrap();
        let modular = a.map(Ring::Modular(ring.clone()), |x| {
            RingValue::modular(x.as_integer().unwrap().clone(), &ring)
        });
        let m = (a.order() / 2) as u64;
        let c = RingValue::modular(c, &ring);
        prop_assert_eq!(
            hafnian_bruteforce(&scale(&modular, &c).unwrap()).unwrap(),
            c.pow(m) * hafnian_bruteforce(&modular).unwrap()
        );
    }

    #[test]
    fn sum_expansion_is_hafnian_of_sum(a in arb_matrix(6), seed in any::<u64>()) {
        let n = a.order();
        let b = SymmetricMatrix::from_upper(Ring::Integer, n, |i, j| {
            RingValue::integer(((seed >> ((i * 7 + j) % 60)) % 7) as i64 - 3)
        });
        prop_assert_eq!(
            sum_expansion(&a, &b).unwrap(),
            hafnian_bruteforce(&a.add(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn relabeling_invariance(a in arb_matrix(8), perm_seed in any::<u64>()) {
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(
            hafnian_bruteforce(&a.permuted(&perm)).unwrap(),
            hafnian_bruteforce(&a).unwrap()
        );
    }

    #[test]
    fn diagonal_entries_are_ignored(a in arb_matrix(8), diag in prop::collection::vec(-9i64..9, 8)) {
        let mut rows = to_i64_rows(&a);
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = diag[i];
        }
        let with_diagonal = SymmetricMatrix::from_integers(&rows).unwrap();
        prop_assert_eq!(
            hafnian_bruteforce(&with_diagonal).unwrap(),
            hafnian_bruteforce(&a).unwrap()
        );
    }
}

#[test]
fn parallel_and_sequential_orders_agree_on_j() {
    // Order 14 takes the threaded branch; (13)!! = 135135.
    let j = SymmetricMatrix::from_upper(Ring::Integer, 14, |_, _| RingValue::integer(1));
    assert_eq!(hafnian_bruteforce(&j).unwrap(), RingValue::integer(135135));
}
