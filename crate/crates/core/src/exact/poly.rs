//! Dense univariate polynomials over the big rationals, ascending powers
//! of the dimensionless radial variable x = Zr/a0. Degrees in this crate
//! stay below ~30, so a dense representation is the simple exact choice.

use std::fmt;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// coefficients[k] multiplies x^k; trailing zeros are trimmed, so the
/// zero polynomial has an empty coefficient list and `degree` = None
/// (the -infinity sentinel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coefficients: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self {
            coefficients: Vec::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// c * x^k
    pub fn monomial(k: usize, c: BigRational) -> Self {
        let mut coefficients = vec![BigRational::zero(); k];
        coefficients.push(c);
        Self::new(coefficients)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// None encodes degree(0) = -infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; None for the zero
    /// polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| !c.is_zero())
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coefficients
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let mut coefficients = Vec::with_capacity(len);
        for k in 0..len {
            coefficients.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(coefficients)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let mut coefficients = Vec::with_capacity(len);
        for k in 0..len {
            coefficients.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(coefficients)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coefficients =
            vec![BigRational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        Self::new(coefficients)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coefficients.len() <= 1 {
            return Self::zero();
        }
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(k.into()))
            .collect();
        Self::new(coefficients)
    }

    /// Multiplies by x^k.
    pub fn shifted_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![BigRational::zero(); k];
        coefficients.extend(self.coefficients.iter().cloned());
        Self::new(coefficients)
    }

    /// Divides by x^k exactly; None if any of the k lowest coefficients
    /// is nonzero.
    pub fn shifted_down(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coefficients.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        if self.coefficients.len() <= k {
            return Some(Self::zero());
        }
        Some(Self::new(self.coefficients[k..].to_vec()))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or_else(|| super::to_f64(c));
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})x", c)?,
                _ => write!(f, "({})x^{}", c, k)?,
            }
        }
        Ok(())
    }
}
