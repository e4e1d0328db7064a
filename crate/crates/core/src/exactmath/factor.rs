//! Integer factorization by trial division, caller-supplied prime hints and
//! a Miller–Rabin test on whatever cofactor remains.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::prime_field::is_prime_u64;
use super::MathError;

pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Strong-probable-prime test to the first 13 prime bases. Deterministic
/// below 3.3e24; beyond that a composite would have to be a strong
/// pseudoprime to all 13 bases.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sign and prime powers of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub negative: bool,
    pub primes: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn support(&self) -> Vec<BigUint> {
        self.primes.keys().cloned().collect()
    }

    pub fn value(&self) -> BigInt {
        let mag: BigUint = self
            .primes
            .iter()
            .map(|(p, &e)| num_traits::pow(p.clone(), e as usize))
            .product();
        BigInt::from_biguint(if self.negative { Sign::Minus } else { Sign::Plus }, mag)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        if self.primes.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .primes
            .iter()
            .map(|(p, &e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

fn divide_out(n: &mut BigUint, p: &BigUint, primes: &mut BTreeMap<BigUint, u32>) {
    while !n.is_zero() && (&*n % p).is_zero() {
        *n /= p;
        *primes.entry(p.clone()).or_insert(0) += 1;
    }
}

/// Complete factorization of `n != 0`. Fails if a composite cofactor
/// survives trial division and the hints.
pub fn factor_with_hints(n: &BigInt, hints: &[BigUint]) -> Result<Factorization, MathError> {
    if n.is_zero() {
        return Err(MathError::ZeroFactorization);
    }
    let negative = n.sign() == Sign::Minus;
    let mut rest = n.magnitude().clone();
    let mut primes = BTreeMap::new();

    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        divide_out(&mut rest, &bd, &mut primes);
        d += if d == 2 { 1 } else { 2 };
    }
    let exhausted = BigUint::from(d);
    if rest > BigUint::one() && &exhausted * &exhausted > rest {
        // no factor up to sqrt(rest)
        *primes.entry(rest.clone()).or_insert(0) += 1;
        rest = BigUint::one();
    }

    for h in hints {
        if rest.is_one() {
            break;
        }
        if !is_probable_prime(h) {
            return Err(MathError::NotPrime(h.to_string()));
        }
        divide_out(&mut rest, h, &mut primes);
    }

    if !rest.is_one() {
        if is_probable_prime(&rest) {
            *primes.entry(rest).or_insert(0) += 1;
        } else {
            return Err(MathError::UnfactoredCofactor(rest.to_string()));
        }
    }
    Ok(Factorization { negative, primes })
}
