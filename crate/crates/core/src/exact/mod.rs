//! Exact linear algebra and polynomial arithmetic over big integers and
//! big rationals.

pub mod linear;
mod matrix;
mod poly;

pub use matrix::{bareiss_determinant, column_system, rank_of, solve_kernel, ExactMatrix, KernelBasis};
pub use poly::{parse_rat_polynomial, Coeff, IntPolynomial, Polynomial, RatPolynomial};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer as a rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den` as a rational; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
