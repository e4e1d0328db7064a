//! Univariate polynomials over F_p and root finding.

use num_bigint::BigInt;

use super::prime_field::{PrimeField, PrimeFieldElement};
use super::unipoly::UniPoly;
use super::MathError;

/// Below this modulus roots are found by evaluating at every residue.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 1 << 16;

/// Dense polynomial over F_p, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(field: &PrimeField, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % field.modulus()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integer_poly(field: &PrimeField, f: &UniPoly<BigInt>) -> Self {
        Self::new(field, f.coeffs().iter().map(|c| field.reduce(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, field: &PrimeField, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn derivative(&self, field: &PrimeField) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| field.mul(c, k as u64 % field.modulus()))
            .collect();
        Self::new(field, coeffs)
    }

    pub fn sub(&self, field: &PrimeField, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[u64], k: usize| v.get(k).copied().unwrap_or(0);
        Self::new(
            field,
            (0..n)
                .map(|k| field.sub(get(&self.coeffs, k), get(&rhs.coeffs, k)))
                .collect(),
        )
    }

    pub fn mul(&self, field: &PrimeField, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::new(field, out)
    }

    /// Remainder modulo a nonzero divisor.
    pub fn rem(&self, field: &PrimeField, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lc = field.inv(divisor.coeffs[dd]).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1;
            let q = field.mul(r[k], inv_lc);
            if q != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    r[k - dd + i] = field.sub(r[k - dd + i], field.mul(q, c));
                }
            }
            r.pop();
        }
        Self::new(field, r)
    }

    pub fn monic(&self, field: &PrimeField) -> Self {
        match self.coeffs.last() {
            Some(&lc) => {
                let inv = field.inv(lc).unwrap();
                Self::new(field, self.coeffs.iter().map(|&c| field.mul(c, inv)).collect())
            }
            None => Self::zero(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, field: &PrimeField, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, field: &PrimeField, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(field, modulus);
        let mut acc = Self::new(field, vec![1]).rem(field, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            base = base.mul(field, &base).rem(field, modulus);
            e >>= 1;
        }
        acc
    }
}

/// All distinct roots of `f` in F_p, sorted ascending.
pub fn roots_in_field(field: &PrimeField, f: &FpPoly) -> Vec<u64> {
    match f.degree() {
        None | Some(0) => return Vec::new(),
        _ => {}
    }
    let p = field.modulus();
    if p < EXHAUSTIVE_ROOT_LIMIT {
        return (0..p).filter(|&x| f.eval(field, x) == 0).collect();
    }
    // gcd with t^p - t keeps exactly the product of the distinct linear factors.
    let f = f.monic(field);
    let t = FpPoly::new(field, vec![0, 1]);
    let tp = t.pow_mod(field, p, &f);
    let split = f.gcd(field, &tp.sub(field, &t));
    let mut roots = Vec::new();
    split_linear_factors(field, &split, &mut roots);
    roots.sort_unstable();
    roots
}

/// Splits a monic product of distinct linear factors (p odd) using
/// `gcd(h, (t + a)^((p-1)/2) - 1)` for a = 0, 1, 2, ...
fn split_linear_factors(field: &PrimeField, h: &FpPoly, out: &mut Vec<u64>) {
    match h.degree() {
        None | Some(0) => return,
        Some(1) => {
            out.push(field.neg(h.coeffs[0]));
            return;
        }
        _ => {}
    }
    let p = field.modulus();
    let one = FpPoly::new(field, vec![1]);
    for a in 0..p {
        let shifted = FpPoly::new(field, vec![a, 1]);
        let w = shifted.pow_mod(field, (p - 1) / 2, h).sub(field, &one);
        let g = h.gcd(field, &w);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && Some(dg) < h.degree() {
            let other = quotient(field, h, &g);
            split_linear_factors(field, &g, out);
            split_linear_factors(field, &other, out);
            return;
        }
    }
    unreachable!("no splitting shift found for a split separable polynomial");
}

fn quotient(field: &PrimeField, f: &FpPoly, g: &FpPoly) -> FpPoly {
    let dg = g.degree().unwrap();
    let inv_lc = field.inv(g.coeffs[dg]).unwrap();
    let mut r = f.coeffs.clone();
    let mut q = vec![0u64; r.len() - dg];
    while r.len() > dg {
        let k = r.len() - 1;
        let c = field.mul(r[k], inv_lc);
        q[k - dg] = c;
        for (i, &gc) in g.coeffs.iter().enumerate() {
            r[k - dg + i] = field.sub(r[k - dg + i], field.mul(c, gc));
        }
        r.pop();
    }
    FpPoly::new(field, q)
}

/// Roots in F_p of `gcd(f mod p, f' mod p)`, i.e. the repeated roots of `f`
/// that are defined over F_p.
pub fn repeated_roots_mod_p(
    f: &UniPoly<BigInt>,
    field: &PrimeField,
) -> Result<Vec<PrimeFieldElement>, MathError> {
    let fp = FpPoly::from_integer_poly(field, f);
    if fp.is_zero() {
        return Err(MathError::VanishesModP(field.modulus()));
    }
    let g = fp.gcd(field, &fp.derivative(field));
    Ok(roots_in_field(field, &g)
        .into_iter()
        .map(|r| field.element(r))
        .collect())
}
