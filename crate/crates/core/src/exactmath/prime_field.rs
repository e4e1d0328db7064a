//! Arithmetic in F_p for word-sized primes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::ring::Scalar;
use super::MathError;

/// Largest modulus accepted: products are formed in `u128`, residues in `u64`.
pub const MAX_PRIME: u64 = (1 << 62) - 1;

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field F_p. Cheap to copy; all element arithmetic goes through it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, MathError> {
        if p > MAX_PRIME || !is_prime_u64(p) {
            return Err(MathError::NotPrime(p.to_string()));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.p as i128) as u64)
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((n % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }

    /// Reduces a rational whose denominator is a unit mod p.
    pub fn reduce_rational(&self, q: &BigRational) -> Option<u64> {
        let den = self.reduce(q.denom());
        let inv = self.inv(den)?;
        Some(self.mul(self.reduce(q.numer()), inv))
    }

    pub fn element(&self, n: u64) -> PrimeFieldElement {
        PrimeFieldElement { residue: n % self.p, modulus: self.p }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue class modulo a prime, carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in F_p arithmetic");
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        let residue = self.field().add(self.residue, rhs.residue);
        Self { residue, ..self }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        let residue = self.field().sub(self.residue, rhs.residue);
        Self { residue, ..self }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        let residue = self.field().mul(self.residue, rhs.residue);
        Self { residue, ..self }
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        let residue = self.field().neg(self.residue);
        Self { residue, ..self }
    }
}

impl Scalar for PrimeFieldElement {
    fn from_integer(n: &BigInt, like: &Self) -> Self {
        let residue = match n.sign() {
            Sign::Minus => like.field().neg(like.field().reduce(&-n)),
            _ => like.field().reduce(n),
        };
        Self { residue, modulus: like.modulus }
    }

    fn is_zero_scalar(&self) -> bool {
        self.residue == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime_u64(149_743_897));
        assert!(!is_prime_u64(149_743_897 * 3));
        // Carmichael number
        assert!(!is_prime_u64(561));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn field_rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverse_and_pow() {
        let f = PrimeField::new(149_743_897).unwrap();
        for a in [1u64, 2, 12345, 149_743_896] {
            let i = f.inv(a).unwrap();
            assert_eq!(f.mul(a, i), 1);
            assert_eq!(f.pow(a, f.modulus() - 1), 1);
        }
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn reduction_of_negatives_and_rationals() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.reduce(&BigInt::from(-1)), 6);
        assert_eq!(f.reduce_i64(-15), 6);
        let half = super::super::ring::rational(1, 2);
        assert_eq!(f.reduce_rational(&half), Some(4));
        let e = f.element(3);
        let m = PrimeFieldElement::from_integer(&BigInt::from(-4), &e);
        assert_eq!(m.residue(), 3);
        assert_eq!((e * m).residue(), 2);
    }
}
