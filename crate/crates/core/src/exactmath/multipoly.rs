//! Sparse multivariate polynomials with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::prime_field::PrimeField;
use super::ring::Scalar;

/// Exponent vectors map to nonzero coefficients; every key has length `arity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    /// The variable with index `i` (0-based).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut e = vec![0; arity];
        e[i] = 1;
        let mut p = Self::zero(arity);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(self.arity, other.arity, "mixed arities in MultiPoly arithmetic");
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c * BigInt::from(e[i]));
        }
        out
    }

    pub fn eval(&self, pt: &[BigInt]) -> BigInt {
        assert_eq!(pt.len(), self.arity);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(pt)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }

    /// Evaluation reduced modulo an arbitrary positive modulus (result in `[0, m)`).
    pub fn eval_mod_big(&self, pt: &[BigInt], m: &BigInt) -> BigInt {
        assert_eq!(pt.len(), self.arity);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c % m;
            for (&k, x) in e.iter().zip(pt) {
                if k > 0 {
                    t = (t * x.modpow(&BigInt::from(k), m)) % m;
                }
            }
            acc = (acc + t) % m;
        }
        ((acc % m) + m) % m
    }

    pub fn eval_mod(&self, field: &PrimeField, pt: &[u64]) -> u64 {
        CompiledPoly::new(self, field).eval(field, pt)
    }
}

impl Add for MultiPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.check_arity(&rhs);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = Self;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        self.check_arity(&rhs);
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Scalar for MultiPoly {
    fn from_integer(n: &BigInt, like: &Self) -> Self {
        Self::constant(like.arity, n.clone())
    }
    fn is_zero_scalar(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for MultiPoly {
    /// Variables print as `t1..tn`, terms in descending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            let mut first = is_const || !mag.is_one();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if first {
                    write!(f, "*")?;
                }
                first = true;
                write!(f, "t{}", i + 1)?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

/// A polynomial reduced mod p and flattened for repeated evaluation:
/// each term is a coefficient and the list of variable indices in its monomial.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(u64, Vec<u8>)>,
}

impl CompiledPoly {
    pub fn new(poly: &MultiPoly, field: &PrimeField) -> Self {
        let terms = poly
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let c = field.reduce(c);
                (c != 0).then(|| {
                    let vars = e
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &k)| std::iter::repeat_n(i as u8, k as usize))
                        .collect();
                    (c, vars)
                })
            })
            .collect();
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn eval(&self, field: &PrimeField, pt: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &v in vars {
                t = field.mul(t, pt[v as usize]);
            }
            acc = field.add(acc, t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize) -> MultiPoly {
        MultiPoly::var(3, i)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = t(0) * t(1) + t(2);
        let q = p.clone() - t(2);
        assert_eq!(q, t(0) * t(1));
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn derivative_of_square() {
        let p = t(0) * t(0);
        assert_eq!(p.derivative(0), t(0).scale(&BigInt::from(2)));
        assert!(p.derivative(1).is_zero());
    }

    #[test]
    fn evaluation_routes_agree() {
        let p = (t(0) * t(0)).scale(&BigInt::from(-3)) + t(1) * t(2) + MultiPoly::constant(3, BigInt::from(7));
        let pt = [BigInt::from(2), BigInt::from(-5), BigInt::from(4)];
        let exact = p.eval(&pt);
        assert_eq!(exact, BigInt::from(-12 - 20 + 7));
        let m = BigInt::from(11);
        assert_eq!(p.eval_mod_big(&pt, &m), ((exact.clone() % &m) + &m) % &m);
        let f = PrimeField::new(11).unwrap();
        let small: Vec<u64> = pt.iter().map(|x| f.reduce(x)).collect();
        assert_eq!(BigInt::from(p.eval_mod(&f, &small)), ((exact % &m) + &m) % &m);
    }

    #[test]
    fn display() {
        let p = t(0) * t(0) - t(1).scale(&BigInt::from(2)) + MultiPoly::constant(3, BigInt::one());
        assert_eq!(p.to_string(), "t1^2 - 2*t2 + 1");
    }
}
