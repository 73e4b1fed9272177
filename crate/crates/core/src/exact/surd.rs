//! Exact numbers of the form q*sqrt(s) with rational q and squarefree
//! positive integer s. This is the coefficient field for every closed
//! form in the crate: Clebsch-Gordan coefficients, 6-j symbols, ladder
//! matrix elements, and radial prefactors all live in a single quadratic
//! extension per expression.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{split_square, ExactError};

/// q*sqrt(s), kept normalized: s squarefree, and q = 0 implies s = 1.
/// Equality is therefore structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: BigRational,
    radicand: BigUint,
}

impl Surd {
    /// Builds q*sqrt(s), extracting any square factor of s into q.
    pub fn new(coeff: BigRational, radicand: BigUint) -> Self {
        if coeff.is_zero() || radicand.is_one() {
            return Self {
                coeff,
                radicand: BigUint::one(),
            };
        }
        let (root, squarefree) = split_square(&radicand);
        Self {
            coeff: coeff * BigRational::from(BigInt::from(root)),
            radicand: squarefree,
        }
    }

    pub fn zero() -> Self {
        Self {
            coeff: BigRational::zero(),
            radicand: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            coeff: BigRational::one(),
            radicand: BigUint::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self {
            coeff: q,
            radicand: BigUint::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// Exact square root of a non-negative rational: sqrt(p/q) =
    /// sqrt(p*q)/q.
    ///
    /// Panics on negative input; every call site in this crate passes a
    /// provably non-negative argument (norms, triangle coefficients).
    pub fn sqrt_rational(r: &BigRational) -> Self {
        assert!(
            !r.is_negative(),
            "sqrt_rational of negative value {}",
            r
        );
        if r.is_zero() {
            return Self::zero();
        }
        let p = r.numer().magnitude().clone();
        let q = r.denom().magnitude().clone();
        let (root, squarefree) = split_square(&(&p * &q));
        Self {
            coeff: BigRational::new(BigInt::from(root), BigInt::from(q)),
            radicand: squarefree,
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    /// Exact product; the radicand is renormalized through the gcd so no
    /// refactorization is needed.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = gcd(&self.radicand, &other.radicand);
        let radicand = (&self.radicand / &g) * (&other.radicand / &g);
        let coeff = &self.coeff * &other.coeff * BigRational::from(BigInt::from(g));
        Self { coeff, radicand }
    }

    /// Exact sum. Defined only within a single surd class: both operands
    /// must share a radicand unless one is zero.
    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != other.radicand {
            return Err(ExactError::IncompatibleRadicands(
                self.radicand.clone(),
                other.radicand.clone(),
            ));
        }
        let coeff = &self.coeff + &other.coeff;
        if coeff.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self {
            coeff,
            radicand: self.radicand.clone(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            coeff: -self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self {
            coeff: &self.coeff * q,
            radicand: self.radicand.clone(),
        }
    }

    /// Exact division: a/b = a * b / b^2.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero surd");
        let product = self.mul(other);
        product.scale(&other.square().recip())
    }

    /// The exact rational square of the value: q^2 * s.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * BigRational::from(BigInt::from(self.radicand.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        let c = self
            .coeff
            .to_f64()
            .unwrap_or_else(|| super::to_f64(&self.coeff));
        let s = self.radicand.to_f64().unwrap_or(f64::NAN);
        c * s.sqrt()
    }
}

fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}
