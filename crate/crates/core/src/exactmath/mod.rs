//! Exact arithmetic kernel: integers and rationals, prime fields, dense and
//! sparse polynomials, matrices, determinants, resultants and Sturm chains.
//!
//! Every value here is immutable once built and can be shared across threads.

pub mod discriminant;
pub mod factor;
pub mod fp_linalg;
pub mod fp_poly;
pub mod matrix;
pub mod multipoly;
pub mod prime_field;
pub mod ring;
pub mod sturm;
pub mod unipoly;

pub use discriminant::{poly_discriminant, resultant, squarefree_degree6};
pub use factor::{factor_with_hints, Factorization};
pub use fp_linalg::kernel_mod_p;
pub use fp_poly::{repeated_roots_mod_p, roots_in_field, FpPoly};
pub use matrix::{det_poly_matrix, ExactMatrix};
pub use multipoly::{CompiledPoly, MultiPoly};
pub use prime_field::{is_prime_u64, PrimeField, PrimeFieldElement, MAX_PRIME};
pub use ring::{ExactDiv, Ring, Scalar};
pub use sturm::{isolate_real_roots, sturm_count, Endpoint, RootInterval, SturmChain};
pub use unipoly::UniPoly;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("inexact division in a fraction-free step")]
    InexactDivision,
    #[error("degree {0} is too small for a discriminant")]
    DegreeTooSmall(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial vanishes identically mod {0}")]
    VanishesModP(u64),
    #[error("{0} is not a supported prime")]
    NotPrime(String),
    #[error("kernels of Gram matrices are undefined in characteristic 2")]
    CharacteristicTwo,
    #[error("cannot factor zero")]
    ZeroFactorization,
    #[error("unfactored composite cofactor {0}")]
    UnfactoredCofactor(String),
}
