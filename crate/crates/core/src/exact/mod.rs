//! Exact arithmetic substrate: big rationals, normalized surds, dense
//! rational polynomials, and the exponential-moment integral used for
//! exact normalization.
//!
//! Everything in this module is immutable after construction and pure;
//! all operations are safe to call concurrently.

mod half_int;
mod poly;
mod surd;

pub use half_int::HalfInt;
pub use poly::Polynomial;
pub use surd::Surd;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Both operands of a surd addition were nonzero with different
    /// radicands. Every formula in scope stays within one surd class per
    /// expression, so this signals a representation bug upstream.
    #[error("incompatible radicands: sqrt({0}) + sqrt({1})")]
    IncompatibleRadicands(BigUint, BigUint),
    /// The decay rate of an exponential moment must be positive.
    #[error("exponential moment requires a positive rate, got {0}")]
    NonPositiveRate(BigRational),
}

/// Exact factorial as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Exact value of the integral of x^k e^{-s x} over x in [0, inf):
/// k!/s^(k+1).
pub fn exp_moment(k: u32, s: &BigRational) -> Result<BigRational, ExactError> {
    if !s.is_positive() {
        return Err(ExactError::NonPositiveRate(s.clone()));
    }
    let mut power = BigRational::one();
    for _ in 0..=k {
        power *= s;
    }
    Ok(BigRational::from(factorial(u64::from(k))) / power)
}

/// Convenience constructor for small rationals.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The interchange format for exact rationals: "p/q" in decimal, "p"
/// when the denominator is 1. Surds serialize as their (coeff, radicand)
/// parts in the same format. Consumers parse with [`parse_rational`].
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<BigRational, num_rational::ParseRatioError> {
    s.parse()
}

/// Convenience constructor for integers-as-rationals.
pub fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Lossy conversion for display and floating-point cross-checks.
pub fn to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of approximations for huge operands.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Splits a non-negative integer into (a, s) with n = a^2 * s and s
/// squarefree. Trial division; all radicands in this crate come from
/// factorials and small integer products, which are smooth.
pub(crate) fn split_square(n: &BigUint) -> (BigUint, BigUint) {
    let mut m = n.clone();
    let mut square_root = BigUint::one();
    let mut squarefree = BigUint::one();
    if m.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= m {
        let mut exponent = 0u64;
        while (&m % &d).is_zero() {
            m /= &d;
            exponent += 1;
        }
        if exponent > 0 {
            for _ in 0..exponent / 2 {
                square_root *= &d;
            }
            if exponent % 2 == 1 {
                squarefree *= &d;
            }
        }
        d += 1u32;
    }
    if !m.is_one() {
        squarefree *= m;
    }
    (square_root, squarefree)
}
