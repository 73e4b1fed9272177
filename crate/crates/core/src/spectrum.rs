//! Energy levels and quantum-number bookkeeping for the bound spectrum.
//!
//! Internal units: hbar = 1, a0 = 1, energies in Rydberg (kappa^2 mu /
//! 2 hbar^2 at Z = 1), radial variable x = Zr/a0. Every formula is then
//! dimensionless and exactly representable; physical values are recovered
//! at the output boundary.

use num_rational::BigRational;
use thiserror::Error;

use crate::exact::{BigInt, HalfInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("invalid quantum labels: {0}")]
    InvalidLabels(String),
}

/// Nuclear charge and the two unit scales. The defaults (a0 = 1, Ry = 1)
/// are the internal convention; setting physical values only affects
/// rendered decimals, never the exact results.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalScales {
    pub z: u32,
    pub a0: f64,
    pub rydberg: f64,
}

impl PhysicalScales {
    pub fn hydrogenic(z: u32) -> Result<Self, SpectrumError> {
        if z < 1 {
            return Err(SpectrumError::InvalidLabels("Z must be >= 1".into()));
        }
        Ok(Self {
            z,
            a0: 1.0,
            rydberg: 1.0,
        })
    }
}

impl Default for PhysicalScales {
    fn default() -> Self {
        Self {
            z: 1,
            a0: 1.0,
            rydberg: 1.0,
        }
    }
}

/// (n, l, m) with 0 <= l <= n-1 and |m| <= l, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumLabels {
    pub n: u32,
    pub l: u32,
    pub m: i64,
}

impl QuantumLabels {
    pub fn new(n: u32, l: u32, m: i64) -> Result<Self, SpectrumError> {
        if n < 1 {
            return Err(SpectrumError::InvalidLabels("n must be >= 1".into()));
        }
        if l > n - 1 {
            return Err(SpectrumError::InvalidLabels(format!(
                "l must satisfy 0 <= l <= n-1, got l = {} for n = {}",
                l, n
            )));
        }
        if m.unsigned_abs() > u64::from(l) {
            return Err(SpectrumError::InvalidLabels(format!(
                "m must satisfy |m| <= l, got m = {} for l = {}",
                m, l
            )));
        }
        Ok(Self { n, l, m })
    }
}

/// The degenerate shell at principal quantum number n: two commuting
/// spin-b algebras with b = (n-1)/2 give l = 0..n-1 and dimension n^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellStructure {
    pub n: u32,
    pub b: HalfInt,
    pub l_values: Vec<u32>,
    pub dimension: usize,
}

/// Exact bound-state energy -Z^2/n^2 in Rydberg.
pub fn energy_level(n: u32, scales: &PhysicalScales) -> Result<BigRational, SpectrumError> {
    if n < 1 {
        return Err(SpectrumError::InvalidLabels("n must be >= 1".into()));
    }
    let z = BigInt::from(scales.z);
    let n = BigInt::from(n);
    Ok(BigRational::new(-(&z * &z), &n * &n))
}

pub fn shell_structure(n: u32) -> Result<ShellStructure, SpectrumError> {
    if n < 1 {
        return Err(SpectrumError::InvalidLabels("n must be >= 1".into()));
    }
    Ok(ShellStructure {
        n,
        b: HalfInt::from_twice(i64::from(n) - 1),
        l_values: (0..n).collect(),
        dimension: (n as usize).pow(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn energies() {
        let h = PhysicalScales::hydrogenic(1).unwrap();
        assert_eq!(energy_level(1, &h).unwrap(), ratio(-1, 1));
        assert_eq!(energy_level(2, &h).unwrap(), ratio(-1, 4));
        let he = PhysicalScales::hydrogenic(2).unwrap();
        assert_eq!(energy_level(3, &he).unwrap(), ratio(-4, 9));
        assert!(energy_level(0, &h).is_err());
    }

    #[test]
    fn energy_is_monotone_and_scales_as_z_squared() {
        let z1 = PhysicalScales::hydrogenic(1).unwrap();
        let z3 = PhysicalScales::hydrogenic(3).unwrap();
        let mut previous = energy_level(1, &z1).unwrap();
        for n in 2..=20 {
            let e = energy_level(n, &z1).unwrap();
            assert!(e > previous);
            assert_eq!(energy_level(n, &z3).unwrap(), &e * ratio(9, 1));
            previous = e;
        }
    }

    #[test]
    fn shells() {
        let s1 = shell_structure(1).unwrap();
        assert_eq!(s1.b, HalfInt::ZERO);
        assert_eq!(s1.l_values, vec![0]);
        assert_eq!(s1.dimension, 1);

        let s2 = shell_structure(2).unwrap();
        assert_eq!(s2.b, HalfInt::HALF);
        assert_eq!(s2.l_values, vec![0, 1]);
        assert_eq!(s2.dimension, 4);

        let s3 = shell_structure(3).unwrap();
        assert_eq!(s3.b, HalfInt::ONE);
        assert_eq!(s3.l_values, vec![0, 1, 2]);
        assert_eq!(s3.dimension, 9);

        assert!(shell_structure(0).is_err());
    }

    #[test]
    fn degeneracy_and_b_round_trip() {
        for n in 1..=100u32 {
            let s = shell_structure(n).unwrap();
            let sum: usize = s.l_values.iter().map(|&l| 2 * l as usize + 1).sum();
            assert_eq!(sum, s.dimension);
            assert_eq!(s.dimension, (n as usize) * (n as usize));
            assert_eq!(s.b + s.b + HalfInt::ONE, HalfInt::from_int(i64::from(n)));
        }
    }

    #[test]
    fn label_validation() {
        assert!(QuantumLabels::new(2, 1, -1).is_ok());
        assert!(QuantumLabels::new(2, 2, 0).is_err());
        assert!(QuantumLabels::new(0, 0, 0).is_err());
        assert!(QuantumLabels::new(2, 1, 2).is_err());
    }
}
