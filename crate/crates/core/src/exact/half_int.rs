//! Exact half-integers for angular-momentum labels. The doubled value is
//! stored, so j = 0, 1/2, 1, 3/2, ... are all exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A half-integer stored as 2j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub fn from_int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn abs(self) -> Self {
        Self {
            twice: self.twice.abs(),
        }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Inclusive projection range -j..=j in integer steps.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let j = self.twice;
        (-j..=j)
            .step_by(2)
            .map(HalfInt::from_twice)
            .collect::<Vec<_>>()
            .into_iter()
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn storage_is_exact() {
        let j = HalfInt::from_twice(5);
        assert_eq!(j.to_f64(), 2.5);
        assert!(!j.is_integer());
        assert_eq!(j.as_integer(), None);
        assert_eq!(HalfInt::from_int(3).as_integer(), Some(3));
    }

    #[test]
    fn projection_range() {
        let ms: Vec<i64> = HalfInt::HALF.projections().map(|m| m.twice()).collect();
        assert_eq!(ms, vec![-1, 1]);
        let ms: Vec<i64> = HalfInt::ONE.projections().map(|m| m.twice()).collect();
        assert_eq!(ms, vec![-2, 0, 2]);
    }

    #[test]
    fn arithmetic() {
        let b = HalfInt::from_twice(3); // 3/2
        assert_eq!(b + b, HalfInt::from_int(3));
        assert_eq!(b - HalfInt::HALF, HalfInt::ONE);
        assert_eq!((-b).twice(), -3);
        assert_eq!(format!("{}", b), "3/2");
        assert_eq!(format!("{}", HalfInt::from_int(2)), "2");
    }
}
