//! Resultants and discriminants of integer polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::ExactMatrix;
use super::ring::ExactDiv;
use super::unipoly::UniPoly;
use super::MathError;

/// Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows of
/// f's coefficients followed by m shifted rows of g's, highest degree first.
pub fn sylvester_matrix(f: &UniPoly<BigInt>, g: &UniPoly<BigInt>) -> ExactMatrix<BigInt> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    ExactMatrix::from_fn(size, size, |i, j| {
        let (poly, deg, shift) = if i < n { (f, m, i) } else { (g, n, i - n) };
        match j.checked_sub(shift) {
            Some(k) if k <= deg => poly.coeff(deg - k),
            _ => BigInt::zero(),
        }
    })
}

/// Res(f, g) as the determinant of the Sylvester matrix.
pub fn resultant(f: &UniPoly<BigInt>, g: &UniPoly<BigInt>) -> Result<BigInt, MathError> {
    if f.is_zero() || g.is_zero() {
        return Ok(BigInt::zero());
    }
    sylvester_matrix(f, g).det_bareiss()
}

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
pub fn poly_discriminant(f: &UniPoly<BigInt>) -> Result<BigInt, MathError> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d,
        other => return Err(MathError::DegreeTooSmall(other.unwrap_or(0))),
    };
    let res = resultant(f, &f.derivative())?;
    let lc = f.leading_coeff().expect("nonzero polynomial");
    let q = res.exact_div(lc).ok_or(MathError::InexactDivision)?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

/// True iff `f` has degree exactly 6 and no repeated complex root.
pub fn squarefree_degree6(f: &UniPoly<BigRational>) -> bool {
    f.degree() == Some(6) && f.gcd(&f.derivative()).degree() == Some(0)
}
