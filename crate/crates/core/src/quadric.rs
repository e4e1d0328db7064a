//! Integral quadratic forms in the six variables u, v, w, x, y, z.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{ExactMatrix, MultiPoly, PrimeField, Scalar};

/// Variable names, in coordinate order.
pub const VARIABLES: [char; 6] = ['u', 'v', 'w', 'x', 'y', 'z'];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("quadratic form has no nonzero coefficient")]
    ZeroForm,
    #[error("variable index {0} out of range")]
    BadIndex(usize),
    #[error("Gram matrix is not symmetric with integral diagonal and half-integral entries")]
    NonIntegralGram,
}

/// `sum_{i <= j} c_ij x_i x_j` with integer coefficients; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl QuadraticForm {
    /// Terms are keyed by unordered index pairs; `(j, i)` is folded into `(i, j)`.
    pub fn new(terms: impl IntoIterator<Item = ((usize, usize), BigInt)>) -> Result<Self, FormError> {
        let mut coeffs: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for ((i, j), c) in terms {
            if i > 5 || j > 5 {
                return Err(FormError::BadIndex(i.max(j)));
            }
            let key = (i.min(j), i.max(j));
            *coeffs.entry(key).or_insert_with(BigInt::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        if coeffs.is_empty() {
            return Err(FormError::ZeroForm);
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64_terms(terms: &[((usize, usize), i64)]) -> Result<Self, FormError> {
        Self::new(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    /// Sum of the squares of all six variables.
    pub fn sum_of_squares() -> Self {
        Self::from_i64_terms(&(0..6).map(|i| ((i, i), 1)).collect::<Vec<_>>()).unwrap()
    }

    /// Inverse of [`QuadraticForm::gram_matrix`].
    pub fn from_gram(m: &GramMatrix) -> Result<Self, FormError> {
        let m = m.matrix();
        if !m.is_symmetric() {
            return Err(FormError::NonIntegralGram);
        }
        let mut terms = Vec::new();
        let two = BigRational::from_integer(BigInt::from(2));
        for i in 0..6 {
            for j in i..6 {
                let c = if i == j { m.get(i, i).clone() } else { m.get(i, j) * &two };
                if !c.is_integer() {
                    return Err(FormError::NonIntegralGram);
                }
                terms.push(((i, j), c.to_integer()));
            }
        }
        Self::new(terms)
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Symmetric M with M_ii = c_ii and M_ij = M_ji = c_ij / 2, so that
    /// v^T M v = q(v).
    pub fn gram_matrix(&self) -> GramMatrix {
        let m = ExactMatrix::from_fn(6, 6, |i, j| {
            let c = BigRational::from_integer(self.coeff(i, j));
            if i == j {
                c
            } else {
                c / BigRational::from_integer(BigInt::from(2))
            }
        });
        GramMatrix(m)
    }

    /// q(v), straight from the integer coefficients (valid in every characteristic).
    pub fn evaluate<T: Scalar>(&self, v: &[T; 6]) -> T {
        let zero = T::from_integer(&BigInt::zero(), &v[0]);
        self.coeffs.iter().fold(zero, |acc, (&(i, j), c)| {
            acc + T::from_integer(c, &v[0]) * v[i].clone() * v[j].clone()
        })
    }

    /// The bilinear form B(a, b) = q(a + b) - q(a) - q(b).
    pub fn polar<T: Scalar>(&self, a: &[T; 6], b: &[T; 6]) -> T {
        let zero = T::from_integer(&BigInt::zero(), &a[0]);
        self.coeffs.iter().fold(zero, |acc, (&(i, j), c)| {
            let c = T::from_integer(c, &a[0]);
            let cross = if i == j {
                T::from_integer(&BigInt::from(2), &a[0]) * a[i].clone() * b[i].clone()
            } else {
                a[i].clone() * b[j].clone() + a[j].clone() * b[i].clone()
            };
            acc + c * cross
        })
    }

    /// The six partial derivatives of q at v.
    pub fn gradient<T: Scalar>(&self, v: &[T; 6]) -> [T; 6] {
        let zero = T::from_integer(&BigInt::zero(), &v[0]);
        let mut g: [T; 6] = std::array::from_fn(|_| zero.clone());
        for (&(i, j), c) in &self.coeffs {
            let c = T::from_integer(c, &v[0]);
            if i == j {
                let two = T::from_integer(&BigInt::from(2), &v[0]);
                g[i] = g[i].clone() + two * c * v[i].clone();
            } else {
                g[i] = g[i].clone() + c.clone() * v[j].clone();
                g[j] = g[j].clone() + c * v[i].clone();
            }
        }
        g
    }

    /// Coefficients of r^2, rs and s^2 in q(r*row_a + s*row_b).
    pub fn restrict_to_line(
        &self,
        row_a: &[MultiPoly; 6],
        row_b: &[MultiPoly; 6],
    ) -> (MultiPoly, MultiPoly, MultiPoly) {
        assert!(
            row_a.iter().chain(row_b).all(|p| p.arity() == row_a[0].arity()),
            "line rows must share one parameter arity"
        );
        (self.evaluate(row_a), self.polar(row_a, row_b), self.evaluate(row_b))
    }

    pub fn reduce_mod(&self, field: &PrimeField) -> FpForm {
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(&k, c)| {
                let r = field.reduce(c);
                (r != 0).then_some((k, r))
            })
            .collect();
        FpForm { field: *field, coeffs }
    }
}

fn write_terms<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = ((usize, usize), bool, C, bool)>,
) -> fmt::Result {
    let mut first = true;
    for ((i, j), negative, mag, unit) in terms {
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        if !unit {
            write!(f, "{mag}")?;
        }
        if i == j {
            write!(f, "{}^2", VARIABLES[i])?;
        } else {
            write!(f, "{}{}", VARIABLES[i], VARIABLES[j])?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for QuadraticForm {
    /// Canonical text: terms in (i, j) order, unit coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .map(|(&k, c)| (k, c.is_negative(), c.abs(), c.abs().is_one())),
        )
    }
}

/// A symmetric 6x6 rational matrix with integral diagonal and half-integral
/// off-diagonal entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix(ExactMatrix<BigRational>);

impl GramMatrix {
    pub fn new(m: ExactMatrix<BigRational>) -> Result<Self, FormError> {
        let two = BigRational::from_integer(BigInt::from(2));
        let ok = m.rows() == 6
            && m.is_symmetric()
            && (0..6).all(|i| {
                m.get(i, i).is_integer() && (0..6).all(|j| (m.get(i, j) * &two).is_integer())
            });
        if ok {
            Ok(Self(m))
        } else {
            Err(FormError::NonIntegralGram)
        }
    }

    pub fn matrix(&self) -> &ExactMatrix<BigRational> {
        &self.0
    }

    /// Entries mod an odd prime (1/2 exists).
    pub fn reduce_mod(&self, field: &PrimeField) -> Option<ExactMatrix<u64>> {
        let entries: Option<Vec<u64>> = self
            .0
            .entries()
            .iter()
            .map(|q| field.reduce_rational(q))
            .collect();
        ExactMatrix::from_vec(6, 6, entries?).ok()
    }
}

/// A quadratic form with coefficients reduced mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpForm {
    field: PrimeField,
    coeffs: Vec<((usize, usize), u64)>,
}

impl FpForm {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        let key = (i.min(j), i.max(j));
        self.coeffs
            .iter()
            .find(|(k, _)| *k == key)
            .map_or(0, |&(_, c)| c)
    }

    pub fn terms(&self) -> &[((usize, usize), u64)] {
        &self.coeffs
    }

    #[inline]
    pub fn eval(&self, v: &[u64; 6]) -> u64 {
        let f = &self.field;
        self.coeffs.iter().fold(0, |acc, &((i, j), c)| {
            f.add(acc, f.mul(c, f.mul(v[i], v[j])))
        })
    }

    pub fn gradient(&self, v: &[u64; 6]) -> [u64; 6] {
        let f = &self.field;
        let mut g = [0u64; 6];
        for &((i, j), c) in &self.coeffs {
            if i == j {
                g[i] = f.add(g[i], f.mul(f.mul(2 % f.modulus(), c), v[i]));
            } else {
                g[i] = f.add(g[i], f.mul(c, v[j]));
                g[j] = f.add(g[j], f.mul(c, v[i]));
            }
        }
        g
    }

    /// Whether the two forms are scalar multiples of each other.
    pub fn proportional_to(&self, other: &FpForm) -> bool {
        let keys = |f: &FpForm| f.coeffs.iter().map(|(k, _)| *k).collect::<Vec<_>>();
        if keys(self) != keys(other) || self.is_zero() {
            return false;
        }
        let f = &self.field;
        let ratio = f.mul(other.coeffs[0].1, f.inv(self.coeffs[0].1).unwrap());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(&(_, a), &(_, b))| f.mul(a, ratio) == b)
    }
}

impl fmt::Display for FpForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().map(|&(k, c)| (k, false, c, c == 1)),
        )
    }
}
