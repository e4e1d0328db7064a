//! The pencil spanned by two quadrics: characteristic sextic, smoothness,
//! and the data of the associated genus-2 curve z^2 = f(t).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::{
    det_poly_matrix, factor_with_hints, isolate_real_roots, poly_discriminant, squarefree_degree6,
    ExactMatrix, Factorization, FpPoly, MathError, PrimeField, RootInterval, UniPoly,
};
use crate::quadric::{GramMatrix, QuadraticForm};

/// For a model z^2 = f(t) with deg f = 6 the curve discriminant is
/// 2^8 disc(f); only its prime support is used.
pub const CURVE_DISC_TWO_POWER: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PencilError {
    #[error("non-integral characteristic form")]
    NonIntegral,
    #[error("pencil is {0}, expected smooth")]
    NotSmooth(Smoothness),
    #[error(transparent)]
    Math(#[from] MathError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothness {
    Smooth,
    Singular,
    Degenerate,
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Smoothness::Smooth => "smooth",
            Smoothness::Singular => "singular",
            Smoothness::Degenerate => "degenerate",
        })
    }
}

/// -det(M1 - t M2) as an integer polynomial.
pub fn characteristic_form(m1: &GramMatrix, m2: &GramMatrix) -> Result<UniPoly<BigInt>, PencilError> {
    let m = ExactMatrix::from_fn(6, 6, |i, j| {
        UniPoly::new(vec![m1.matrix().get(i, j).clone(), -m2.matrix().get(i, j).clone()])
    });
    let det = det_poly_matrix(&m)?;
    (-det).to_integer_poly().ok_or(PencilError::NonIntegral)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilOfQuadrics {
    q1: QuadraticForm,
    q2: QuadraticForm,
    m1: GramMatrix,
    m2: GramMatrix,
    char_form: UniPoly<BigInt>,
}

impl PencilOfQuadrics {
    pub fn new(q1: QuadraticForm, q2: QuadraticForm) -> Result<Self, PencilError> {
        let m1 = q1.gram_matrix();
        let m2 = q2.gram_matrix();
        let char_form = characteristic_form(&m1, &m2)?;
        Ok(Self { q1, q2, m1, m2, char_form })
    }

    pub fn q1(&self) -> &QuadraticForm {
        &self.q1
    }

    pub fn q2(&self) -> &QuadraticForm {
        &self.q2
    }

    pub fn forms(&self) -> [&QuadraticForm; 2] {
        [&self.q1, &self.q2]
    }

    pub fn m1(&self) -> &GramMatrix {
        &self.m1
    }

    pub fn m2(&self) -> &GramMatrix {
        &self.m2
    }

    pub fn characteristic_form(&self) -> &UniPoly<BigInt> {
        &self.char_form
    }

    pub fn smoothness_check(&self) -> Smoothness {
        if self.char_form.is_zero() {
            Smoothness::Degenerate
        } else if squarefree_degree6(&self.char_form.to_rational()) {
            Smoothness::Smooth
        } else {
            Smoothness::Singular
        }
    }

    /// Smoothness of the reduction mod an odd prime: f mod p must keep
    /// degree 6 and stay squarefree over F_p.
    pub fn smoothness_mod_p(&self, field: &PrimeField) -> Result<Smoothness, PencilError> {
        if field.modulus() == 2 {
            return Err(MathError::CharacteristicTwo.into());
        }
        let f = FpPoly::from_integer_poly(field, &self.char_form);
        if f.is_zero() {
            return Ok(Smoothness::Degenerate);
        }
        let g = f.gcd(field, &f.derivative(field));
        Ok(if f.degree() == Some(6) && g.degree() == Some(0) {
            Smoothness::Smooth
        } else {
            Smoothness::Singular
        })
    }

    pub fn curve_data(&self) -> Result<CurveData, PencilError> {
        match self.smoothness_check() {
            Smoothness::Smooth => {}
            other => return Err(PencilError::NotSmooth(other)),
        }
        CurveData::from_sextic(self.char_form.clone())
    }
}

/// Arithmetic data of the genus-2 curve z^2 = f(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    pub f: UniPoly<BigInt>,
    /// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)
    pub poly_disc: BigInt,
    /// 2^8 disc(f)
    pub curve_disc: BigInt,
    pub factorization: Factorization,
    /// Primes dividing curve_disc * lc(f), ascending.
    pub bad_primes: Vec<BigUint>,
    pub real_weierstrass_count: usize,
    pub real_roots: Vec<RootInterval>,
}

impl CurveData {
    /// Requires a squarefree sextic.
    pub fn from_sextic(f: UniPoly<BigInt>) -> Result<Self, PencilError> {
        let fq: UniPoly<BigRational> = f.to_rational();
        if !squarefree_degree6(&fq) {
            return Err(PencilError::NotSmooth(Smoothness::Singular));
        }
        let poly_disc = poly_discriminant(&f)?;
        let curve_disc = &poly_disc * (BigInt::one() << CURVE_DISC_TWO_POWER);
        let lc = f.leading_coeff().expect("degree 6").clone();
        let factorization = factor_with_hints(&curve_disc, &[])?;
        let mut bad: Vec<BigUint> = factorization.support();
        if !lc.magnitude().is_one() {
            for p in factor_with_hints(&lc, &[])?.support() {
                if !bad.contains(&p) {
                    bad.push(p);
                }
            }
            bad.sort();
        }
        let real_roots = isolate_real_roots(&fq)?;
        Ok(Self {
            f,
            poly_disc,
            curve_disc,
            factorization,
            bad_primes: bad,
            real_weierstrass_count: real_roots.len(),
            real_roots,
        })
    }

    pub fn is_bad_prime(&self, p: u64) -> bool {
        self.bad_primes.iter().any(|b| *b == BigUint::from(p))
    }
}

impl PencilOfQuadrics {
    /// Characteristic form reduced mod p, for callers that only need F_p data.
    pub fn char_form_mod(&self, field: &PrimeField) -> FpPoly {
        FpPoly::from_integer_poly(field, &self.char_form)
    }

    /// Whether f vanishes identically (the pencil is degenerate over Q).
    pub fn is_degenerate(&self) -> bool {
        self.char_form.coeffs().iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sum_of_squares_pencil() {
        let s = QuadraticForm::sum_of_squares();
        let p = PencilOfQuadrics::new(s.clone(), s).unwrap();
        let mut expected = UniPoly::<BigInt>::from_i64s(&[-1]);
        for _ in 0..6 {
            expected = expected * UniPoly::from_i64s(&[1, -1]);
        }
        assert_eq!(p.characteristic_form(), &expected);
        assert_eq!(p.smoothness_check(), Smoothness::Singular);
    }

    #[test]
    fn reference_sextic() {
        let p = fixtures::reference_pencil();
        assert_eq!(
            p.characteristic_form(),
            &UniPoly::from_i64s(&[-2, -3, -3, 3, 2, -3, -1])
        );
        assert_eq!(p.smoothness_check(), Smoothness::Smooth);
    }

    #[test]
    fn degenerate_pencil() {
        // both forms only involve u and v, so every member is singular
        let q1 = QuadraticForm::from_i64_terms(&[((0, 1), 1)]).unwrap();
        let q2 = QuadraticForm::from_i64_terms(&[((0, 0), 1)]).unwrap();
        let p = PencilOfQuadrics::new(q1, q2).unwrap();
        assert_eq!(p.smoothness_check(), Smoothness::Degenerate);
        assert!(matches!(
            p.curve_data(),
            Err(PencilError::NotSmooth(Smoothness::Degenerate))
        ));
    }

    #[test]
    fn curve_data_of_reference_pencil() {
        let cd = fixtures::reference_pencil().curve_data().unwrap();
        assert_eq!(cd.poly_disc, BigInt::from(149_743_897));
        assert_eq!(
            cd.bad_primes,
            vec![BigUint::from(2u32), BigUint::from(149_743_897u32)]
        );
        assert_eq!(cd.real_weierstrass_count, 2);
    }

    #[test]
    fn synthetic_sextic_t6_minus_1() {
        let cd = CurveData::from_sextic(UniPoly::from_i64s(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(cd.real_weierstrass_count, 2);
        assert!(cd.bad_primes.contains(&BigUint::from(2u32)));
        assert!(cd.bad_primes.contains(&BigUint::from(3u32)));
    }

    #[test]
    fn mod_two_smoothness_is_rejected() {
        let p = fixtures::reference_pencil();
        assert!(p.smoothness_mod_p(&PrimeField::new(2).unwrap()).is_err());
    }
}
