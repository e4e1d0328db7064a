use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with unit, as used by the matrix and polynomial code.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Division that is only defined when the quotient is exact.
pub trait ExactDiv: Sized {
    /// Returns `None` if `divisor` is zero or does not divide `self`.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl ExactDiv for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, divisor);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

/// Scalars a quadratic form can be evaluated over.
///
/// Unlike [`Ring`] this has no context-free zero: prime field elements carry
/// their modulus and multivariate polynomials their arity, so integer
/// constants are embedded relative to an existing value.
pub trait Scalar:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_integer(n: &BigInt, like: &Self) -> Self;
    fn is_zero_scalar(&self) -> bool;
}

impl Scalar for BigInt {
    fn from_integer(n: &BigInt, _like: &Self) -> Self {
        n.clone()
    }
    fn is_zero_scalar(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for BigRational {
    fn from_integer(n: &BigInt, _like: &Self) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_zero_scalar(&self) -> bool {
        self.is_zero()
    }
}

/// Builds a canonical rational `num / den`.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
