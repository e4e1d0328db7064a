mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pencil_cert::exactmath::{
    isolate_real_roots, poly_discriminant, sturm_count, Endpoint, ExactMatrix, PrimeField, UniPoly,
};

fn matrix(n: usize) -> impl Strategy<Value = ExactMatrix<BigInt>> {
    prop::collection::vec(-30i64..=30, n * n)
        .prop_map(move |v| ExactMatrix::from_vec(n, n, v.into_iter().map(BigInt::from).collect()).unwrap())
}

fn any_matrix() -> impl Strategy<Value = ExactMatrix<BigInt>> {
    (1usize..=6).prop_flat_map(matrix)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_matches_cofactor(m in any_matrix()) {
        prop_assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(4), b in matrix(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(
            ab.det_bareiss().unwrap(),
            a.det_bareiss().unwrap() * b.det_bareiss().unwrap()
        );
    }

    #[test]
    fn rational_bareiss_matches_cofactor(m in matrix(4), d in 1i64..=7) {
        let q = m.map(|x| BigRational::new(x.clone(), BigInt::from(d)));
        prop_assert_eq!(q.det_bareiss().unwrap(), q.det_cofactor().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sturm_count_matches_construction(seed in any::<u64>(), half in 0usize..=3) {
        let mut rng = common::rng(seed);
        let f = common::sextic_with_real_roots(&mut rng, 2 * half);
        let total = sturm_count(&f, &Endpoint::NegInfinity, &Endpoint::PosInfinity).unwrap();
        prop_assert_eq!(total, 2 * half);
        let roots = isolate_real_roots(&f).unwrap();
        prop_assert_eq!(roots.len(), total);
        for w in roots.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
        for iv in &roots {
            let lo = Endpoint::Finite(iv.lo.clone());
            let hi = Endpoint::Finite(iv.hi.clone());
            prop_assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 1);
        }
    }

    #[test]
    fn discriminant_matches_euclidean_resultant(c in prop::collection::vec(-9i64..=9, 4..=7)) {
        let f = UniPoly::from_i64s(&c);
        prop_assume!(f.degree().is_some_and(|d| d >= 2));
        let d = poly_discriminant(&f).unwrap();
        prop_assert_eq!(BigRational::from_integer(d), common::discriminant_euclid(&f.to_rational()));
    }

    #[test]
    fn field_inverse_and_distributivity(a in 0u64..1_000_000, b in 0u64..1_000_000, c in 0u64..1_000_000) {
        let f = PrimeField::new(149_743_897).unwrap();
        let lhs = f.mul(a, f.add(b, c));
        prop_assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
        if a % 149_743_897 != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        let big = (a as u128 * b as u128 % 149_743_897) as u64;
        prop_assert_eq!(f.mul(a, b), big);
    }
}
