mod common;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use common::suites::{compare_loci, LocusComparison};
use pencil_cert::exactmath::{ExactMatrix, PrimeField};
use pencil_cert::fano::{fano_system, verify_fano_point, GrassmannChart};
use pencil_cert::fixtures;
use pencil_cert::localcert::{newton_lift, search_smooth_points, SearchConfig, SmoothPoint};
use pencil_cert::pencil::PencilOfQuadrics;
use pencil_cert::quadric::{GramMatrix, QuadraticForm};
use pencil_cert::reduction::{cone_check, normalize_projective, singular_locus};
use pencil_cert::Execution;

/// Every smooth point of the reference pencil mod 3 and mod 5.
fn smooth_points() -> &'static [Vec<SmoothPoint>; 2] {
    static POINTS: OnceLock<[Vec<SmoothPoint>; 2]> = OnceLock::new();
    POINTS.get_or_init(|| {
        let p = fixtures::reference_pencil();
        [3u64, 5].map(|q| {
            let field = PrimeField::new(q).unwrap();
            search_smooth_points(&p, &field, &SearchConfig::default()).unwrap().points
        })
    })
}

fn chart() -> impl Strategy<Value = GrassmannChart> {
    (0usize..15).prop_map(|k| GrassmannChart::all()[k])
}

fn pencil() -> impl Strategy<Value = PencilOfQuadrics> {
    any::<u64>().prop_filter_map("integral pencil", |seed| common::random_pencil(&mut common::rng(seed)))
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

/// Every F_p-point of the line through the rows, up to scaling.
fn line_points(a: &[BigInt; 6], b: &[BigInt; 6], p: u64) -> Vec<[BigInt; 6]> {
    let mut pts = vec![b.clone()];
    for r in 0..p {
        pts.push(std::array::from_fn(|k| &a[k] + BigInt::from(r) * &b[k]));
    }
    pts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fano_check_matches_integer_oracle(
        p in pencil(),
        c in chart(),
        prime in small_prime(),
        raw in prop::array::uniform8(0u64..7),
    ) {
        let pt = raw.map(|x| x % prime);
        let check = verify_fano_point(&fano_system(&p, &c), &pt, &PrimeField::new(prime).unwrap());
        let oracle = common::oracle_fano_check(&p, c.pivots(), &pt.map(|x| x as i64), prime);
        prop_assert_eq!((check.on_fano, check.jacobian_rank), oracle);
    }

    #[test]
    fn on_fano_iff_line_lies_on_both_quadrics(
        p in pencil(),
        c in chart(),
        prime in prop::sample::select(vec![3u64, 5]),
        raw in prop::array::uniform8(0u64..5),
    ) {
        let pt = raw.map(|x| x % prime);
        let on = verify_fano_point(&fano_system(&p, &c), &pt, &PrimeField::new(prime).unwrap()).on_fano;
        let t: Vec<BigInt> = pt.iter().map(|&x| BigInt::from(x)).collect();
        let (a, b) = common::chart_rows(c.pivots(), &t);
        let m = BigInt::from(prime);
        // a binary quadratic form vanishing at p + 1 >= 3 points is zero
        let covered = line_points(&a, &b, prime)
            .iter()
            .all(|v| p.forms().iter().all(|q| (q.evaluate(v) % &m).is_zero()));
        prop_assert_eq!(on, covered);
    }

    #[test]
    fn normalization_is_idempotent_and_scale_free(
        v in prop::array::uniform6(0u64..13),
        s in 1u64..13,
    ) {
        let f = PrimeField::new(13).unwrap();
        match normalize_projective(&f, &v) {
            None => prop_assert!(v.iter().all(|&x| x == 0)),
            Some(n) => {
                prop_assert_eq!(normalize_projective(&f, &n), Some(n));
                prop_assert_eq!(normalize_projective(&f, &v.map(|x| f.mul(x, s))), Some(n));
                prop_assert_eq!(n.iter().find(|&&x| x != 0), Some(&1));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn characteristic_form_is_unimodular_invariant(
        p in pencil(),
        ops in prop::collection::vec((0usize..6, 0usize..6, -2i64..=2), 1..8),
    ) {
        let mut u = ExactMatrix::<BigRational>::identity(6);
        for (i, j, k) in ops {
            if i == j {
                continue;
            }
            // row_i += k * row_j keeps det = 1
            for c in 0..6 {
                let v = u.get(i, c) + u.get(j, c) * BigRational::from_integer(BigInt::from(k));
                u.set(i, c, v);
            }
        }
        let transform = |q: &QuadraticForm| {
            let m = q.gram_matrix().matrix().clone();
            let g = u.transpose().mul(&m).unwrap().mul(&u).unwrap();
            QuadraticForm::from_gram(&GramMatrix::new(g).unwrap()).unwrap()
        };
        let moved = PencilOfQuadrics::new(transform(p.q1()), transform(p.q2())).unwrap();
        prop_assert_eq!(moved.characteristic_form(), p.characteristic_form());
        prop_assert_eq!(moved.smoothness_check(), p.smoothness_check());
    }

    #[test]
    fn smooth_points_lift_to_higher_precision(
        prime in prop::sample::select(vec![3u64, 5]),
        precision in 2u32..=5,
        pick in any::<prop::sample::Index>(),
    ) {
        let p = fixtures::reference_pencil();
        let field = PrimeField::new(prime).unwrap();
        let found = &smooth_points()[usize::from(prime == 5)];
        let pt = found[pick.index(found.len())];
        let lift = newton_lift(&fano_system(&p, &pt.chart), &pt.coords, &field, precision).unwrap();
        let m = BigInt::from(prime).pow(precision);
        prop_assert_eq!(&lift.modulus, &m);
        for r in common::line_equations_big(&p, pt.chart.pivots(), &lift.coordinates) {
            prop_assert!((r % &m).is_zero());
        }
        for (x, &x0) in lift.coordinates.iter().zip(&pt.coords) {
            prop_assert_eq!(field.reduce(x), x0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn kernel_guided_locus_matches_exhaustive(p in pencil()) {
        let Ok(cd) = p.curve_data() else { return Ok(()) };
        for prime in [3u64, 5, 7, 11, 13] {
            if cd.is_bad_prime(prime) {
                prop_assert!(!matches!(compare_loci(&p, prime), LocusComparison::Disagree), "p = {}", prime);
            }
        }
    }
}

#[test]
fn seeded_kernel_guided_suite() {
    let r = common::suites::kernel_vs_exhaustive(7, 5);
    assert_eq!(r.mismatches, 0);
    assert!(r.cases >= 5);
}

#[test]
fn cone_check_is_monotone() {
    let p = fixtures::reference_pencil();
    let field = PrimeField::new(fixtures::LARGE_BAD_PRIME).unwrap();
    let r = singular_locus(&p, &field).unwrap();
    assert!(cone_check(&r));
    let more = r.with_point([0, 0, 1, 0, 0, 0], 1);
    assert!(cone_check(&more));
    let vertex = more.with_point([0, 0, 0, 0, 1, 0], 0);
    assert!(!cone_check(&vertex));
    assert!(!cone_check(&vertex.with_point([0, 1, 0, 0, 0, 0], 2)));
}

#[test]
fn good_primes_below_50_are_smooth() {
    let p = fixtures::reference_pencil();
    let cd = p.curve_data().unwrap();
    for q in (3u64..50).filter(|&q| pencil_cert::exactmath::is_prime_u64(q)) {
        assert!(!cd.is_bad_prime(q));
        let r = singular_locus(&p, &PrimeField::new(q).unwrap()).unwrap();
        assert!(r.points.is_empty(), "p = {q}");
    }
}

#[test]
fn search_agrees_across_execution_modes() {
    let p = fixtures::reference_pencil();
    let field = PrimeField::new(7).unwrap();
    let par = SearchConfig { budget: 50_000, seed: 9, ..SearchConfig::default() };
    let seq = SearchConfig { execution: Execution::Sequential, ..par.clone() };
    let a = search_smooth_points(&p, &field, &par).unwrap();
    assert!(!a.points.is_empty());
    assert_eq!(a, search_smooth_points(&p, &field, &seq).unwrap());
}
