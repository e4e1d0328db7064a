//! Sturm chains, exact real root counting and isolation by bisection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::unipoly::UniPoly;
use super::MathError;

/// Isolating intervals are bisected until narrower than 1/ISOLATION_DENOMINATOR.
pub const ISOLATION_DENOMINATOR: i64 = 1_000_000;

/// An interval endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

/// Half-open interval `(lo, hi]` holding exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Whether `x` lies in `(lo, hi]`.
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly<BigRational>>,
}

impl SturmChain {
    /// Builds the chain f, f', -rem(f, f'), ... with each member rescaled to
    /// its positive primitive part. Rejects zero and non-squarefree input.
    pub fn new(f: &UniPoly<BigRational>) -> Result<Self, MathError> {
        if f.is_zero() {
            return Err(MathError::ZeroPolynomial);
        }
        if f.gcd(&f.derivative()).degree() != Some(0) {
            return Err(MathError::NotSquarefree);
        }
        let mut chain = vec![f.primitive_positive()];
        let d = f.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_positive());
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = -chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.primitive_positive());
        }
        Ok(Self { chain })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn sign_at(p: &UniPoly<BigRational>, x: &Endpoint) -> Ordering {
        let lc = p.leading_coeff().expect("chain members are nonzero");
        let lc_sign = lc.cmp(&BigRational::zero());
        let deg = p.degree().unwrap();
        match x {
            Endpoint::PosInfinity => lc_sign,
            Endpoint::NegInfinity if deg % 2 == 1 => lc_sign.reverse(),
            Endpoint::NegInfinity => lc_sign,
            Endpoint::Finite(v) => p.eval(v).cmp(&BigRational::zero()),
        }
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Endpoint) -> usize {
        let signs: Vec<Ordering> = self
            .chain
            .iter()
            .map(|p| Self::sign_at(p, x))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Exact count of real roots of a squarefree `f` in `(lo, hi]`.
pub fn sturm_count(
    f: &UniPoly<BigRational>,
    lo: &Endpoint,
    hi: &Endpoint,
) -> Result<usize, MathError> {
    Ok(SturmChain::new(f)?.count(lo, hi))
}

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
pub fn cauchy_bound(f: &UniPoly<BigRational>) -> BigRational {
    let lc = f.leading_coeff().expect("nonzero polynomial").abs();
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

/// Disjoint isolating intervals for the real roots of a squarefree `f`,
/// ascending, each narrower than 1/ISOLATION_DENOMINATOR.
pub fn isolate_real_roots(f: &UniPoly<BigRational>) -> Result<Vec<RootInterval>, MathError> {
    let chain = SturmChain::new(f)?;
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let tol = BigRational::new(BigInt::one(), BigInt::from(ISOLATION_DENOMINATOR));
    let two = BigRational::from_integer(BigInt::from(2));
    let bound = cauchy_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(hi.clone()));
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo < tol {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        // upper half pushed first so the lower half pops first
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ring::rational;

    fn q(c: &[i64]) -> UniPoly<BigRational> {
        UniPoly::from_i64s(c)
    }

    fn all(f: &UniPoly<BigRational>) -> usize {
        sturm_count(f, &Endpoint::NegInfinity, &Endpoint::PosInfinity).unwrap()
    }

    #[test]
    fn counts_on_the_whole_line() {
        assert_eq!(all(&q(&[1, 0, 1])), 0);
        assert_eq!(all(&q(&[-1, 0, 1])), 2);
        assert_eq!(all(&q(&[0, -1, 0, 1])), 3);
        assert_eq!(all(&q(&[5])), 0);
    }

    #[test]
    fn half_open_semantics() {
        let f = q(&[-1, 0, 1]);
        let c = |a: i64, b: i64| {
            sturm_count(&f, &Endpoint::Finite(rational(a, 1)), &Endpoint::Finite(rational(b, 1)))
                .unwrap()
        };
        assert_eq!(c(-1, 1), 1);
        assert_eq!(c(-2, -1), 1);
        assert_eq!(c(1, 2), 0);
        assert_eq!(c(0, 1), 1);
    }

    #[test]
    fn rejects_repeated_roots() {
        assert!(matches!(
            sturm_count(&q(&[1, -2, 1]), &Endpoint::NegInfinity, &Endpoint::PosInfinity),
            Err(MathError::NotSquarefree)
        ));
        assert!(matches!(isolate_real_roots(&q(&[0, 0, 1])), Err(MathError::NotSquarefree)));
    }

    #[test]
    fn isolates_sqrt2() {
        let roots = isolate_real_roots(&q(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let s = std::f64::consts::SQRT_2;
        assert!((roots[0].midpoint_f64() + s).abs() < 1e-6);
        assert!((roots[1].midpoint_f64() - s).abs() < 1e-6);
        assert!(roots.iter().all(|r| r.width() < rational(1, ISOLATION_DENOMINATOR)));
    }

    #[test]
    fn isolates_exact_rational_roots() {
        let roots = isolate_real_roots(&q(&[0, -1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, x) in roots.iter().zip([-1i64, 0, 1]) {
            assert!(r.contains(&rational(x, 1)), "{r} should contain {x}");
        }
    }
}
