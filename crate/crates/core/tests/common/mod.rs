//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod suites;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pencil_cert::exactmath::{ExactMatrix, UniPoly};
use pencil_cert::pencil::PencilOfQuadrics;
use pencil_cert::quadric::QuadraticForm;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(int(n))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> ExactMatrix<BigInt> {
    ExactMatrix::from_fn(n, n, |_, _| int(rng.random_range(-bound..=bound)))
}

/// Integral Gram matrices: cross-term coefficients are even.
pub fn random_form(rng: &mut ChaCha8Rng, density: f64, bound: i64) -> Option<QuadraticForm> {
    let mut terms = Vec::new();
    for i in 0..6 {
        for j in i..6 {
            if rng.random_bool(density) {
                let c = rng.random_range(-bound..=bound);
                terms.push(((i, j), if i == j { c } else { 2 * c }));
            }
        }
    }
    QuadraticForm::from_i64_terms(&terms).ok()
}

pub fn random_pencil(rng: &mut ChaCha8Rng) -> Option<PencilOfQuadrics> {
    let q1 = random_form(rng, 0.4, 3)?;
    let q2 = random_form(rng, 0.4, 3)?;
    PencilOfQuadrics::new(q1, q2).ok()
}

/// A squarefree sextic with exactly `real` real roots, built from distinct
/// integer roots and irreducible quadratics t^2 + c (c > 0) with distinct c.
pub fn sextic_with_real_roots(rng: &mut ChaCha8Rng, real: usize) -> UniPoly<BigRational> {
    assert!(real <= 6 && real.is_multiple_of(2));
    let mut roots: Vec<i64> = Vec::new();
    while roots.len() < real {
        let r = rng.random_range(-20..=20);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    let mut cs: Vec<i64> = Vec::new();
    while cs.len() < (6 - real) / 2 {
        let c = rng.random_range(1..=30);
        if !cs.contains(&c) {
            cs.push(c);
        }
    }
    let mut f = UniPoly::constant(rat(rng.random_range(1..=5)));
    for r in roots {
        f = f * UniPoly::new(vec![rat(-r), rat(1)]);
    }
    for c in cs {
        f = f * UniPoly::new(vec![rat(c), rat(0), rat(1)]);
    }
    f
}

/// Rows of the 2x6 chart matrix at integer parameters: the pivot columns
/// carry the identity, free columns are filled left to right with
/// (t1 over t2), (t3 over t4), ...
pub fn chart_rows(pivots: (usize, usize), t: &[BigInt]) -> ([BigInt; 6], [BigInt; 6]) {
    let mut a: [BigInt; 6] = Default::default();
    let mut b: [BigInt; 6] = Default::default();
    a[pivots.0] = int(1);
    b[pivots.1] = int(1);
    let free = (0..6).filter(|&c| c != pivots.0 && c != pivots.1);
    for (k, c) in free.enumerate() {
        a[c] = t[2 * k].clone();
        b[c] = t[2 * k + 1].clone();
    }
    (a, b)
}

fn eval_form(q: &QuadraticForm, v: &[BigInt; 6]) -> BigInt {
    q.terms().map(|((i, j), c)| c * &v[i] * &v[j]).sum()
}

/// Coefficients of r^2, rs, s^2 in q(r a + s b) for both forms, over Z.
pub fn line_equations_big(p: &PencilOfQuadrics, pivots: (usize, usize), t: &[BigInt]) -> Vec<BigInt> {
    let (a, b) = chart_rows(pivots, t);
    let ab: [BigInt; 6] = std::array::from_fn(|k| &a[k] + &b[k]);
    p.forms()
        .iter()
        .flat_map(|q| {
            let qa = eval_form(q, &a);
            let qb = eval_form(q, &b);
            let mixed = eval_form(q, &ab) - &qa - &qb;
            [qa, mixed, qb]
        })
        .collect()
}

pub fn line_equations(p: &PencilOfQuadrics, pivots: (usize, usize), t: &[i64; 8]) -> Vec<BigInt> {
    line_equations_big(p, pivots, &t.map(int))
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let m = int(p as i64);
    let r = ((x % &m) + &m) % &m;
    u64::try_from(r).unwrap()
}

/// Rank mod p by elimination on residues.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let inv = |a: u64| (1..p).find(|&b| (a * b) % p == 1).unwrap();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(r) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else { continue };
        rows.swap(rank, r);
        let k = inv(rows[rank][c] % p);
        let pivot: Vec<u64> = rows[rank].iter().map(|x| x * k % p).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank {
                let f = row[c] % p;
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// (on surface mod p, Jacobian rank mod p) from integer evaluations only.
/// The equations are quadratic in t, so central differences give exact
/// partial derivatives over Z. Meant for small primes.
pub fn oracle_fano_check(p: &PencilOfQuadrics, pivots: (usize, usize), t: &[i64; 8], prime: u64) -> (bool, usize) {
    let f0 = line_equations(p, pivots, t);
    let on = f0.iter().all(|v| reduce(v, prime) == 0);
    let mut jac = vec![vec![0u64; 8]; 6];
    for k in 0..8 {
        let mut up = *t;
        let mut down = *t;
        up[k] += 1;
        down[k] -= 1;
        let fu = line_equations(p, pivots, &up);
        let fd = line_equations(p, pivots, &down);
        for i in 0..6 {
            let diff = &fu[i] - &fd[i];
            assert!((&diff % int(2)).is_zero());
            jac[i][k] = reduce(&(diff / int(2)), prime);
        }
    }
    (on, rank_mod(jac, prime))
}

/// All projective points of P^5(F_p), first nonzero coordinate 1.
pub fn projective_points(p: u64) -> Vec<[u64; 6]> {
    let mut out = Vec::new();
    for lead in 0..6 {
        let n = p.pow((5 - lead) as u32);
        for mut idx in 0..n {
            let mut v = [0u64; 6];
            v[lead] = 1;
            for k in (lead + 1..6).rev() {
                v[k] = idx % p;
                idx /= p;
            }
            out.push(v);
        }
    }
    out
}

/// Res(f, g) by the Euclidean remainder sequence over Q.
pub fn resultant_euclid(f: &UniPoly<BigRational>, g: &UniPoly<BigRational>) -> BigRational {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigRational::zero();
    };
    if n == 0 {
        return g.coeff(0).pow(m as i32);
    }
    let r = f.rem(g);
    let Some(k) = r.degree() else {
        return BigRational::zero();
    };
    let sign = if (m * n) % 2 == 1 { -rat(1) } else { rat(1) };
    sign * g.leading_coeff().unwrap().pow((m - k) as i32) * resultant_euclid(g, &r)
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant_euclid(f: &UniPoly<BigRational>) -> BigRational {
    let n = f.degree().unwrap();
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -rat(1) } else { rat(1) };
    sign * resultant_euclid(f, &f.derivative()) / f.leading_coeff().unwrap()
}
