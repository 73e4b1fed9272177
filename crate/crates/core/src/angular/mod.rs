//! Exact angular-momentum coupling: Clebsch-Gordan coefficients and
//! Wigner 6-j symbols in the Condon-Shortley convention, and the closed
//! forms for the matrix elements of the lowering components of the two
//! commuting shell spins B(+), B(-).
//!
//! Everything returns a [`Surd`], so results compare structurally against
//! tabulated closed forms. Values are exact for j up to ~30 (factorial
//! growth is the only practical cap).

pub mod oracles;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{factorial, BigInt, HalfInt, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AngularError {
    #[error("invalid angular-momentum labels: {0}")]
    InvalidLabels(String),
}

/// Which of the two commuting shell spins a matrix element refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Labels of a Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m>.
///
/// Construction checks that each (j, m) pair sits in a consistent
/// integer or half-integer sector and that the j's are non-negative.
/// Out-of-range projections (|m| > j) are representable and give a zero
/// coefficient, matching the algebraic convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CouplingKey {
    pub j1: HalfInt,
    pub m1: HalfInt,
    pub j2: HalfInt,
    pub m2: HalfInt,
    pub j: HalfInt,
    pub m: HalfInt,
}

impl CouplingKey {
    pub fn new(
        j1: HalfInt,
        m1: HalfInt,
        j2: HalfInt,
        m2: HalfInt,
        j: HalfInt,
        m: HalfInt,
    ) -> Result<Self, AngularError> {
        for (jj, mm) in [(j1, m1), (j2, m2), (j, m)] {
            if jj.is_negative() {
                return Err(AngularError::InvalidLabels(format!("negative j = {}", jj)));
            }
            if (jj + mm).twice() % 2 != 0 {
                return Err(AngularError::InvalidLabels(format!(
                    "inconsistent sector: j = {}, m = {}",
                    jj, mm
                )));
            }
        }
        Ok(Self {
            j1,
            m1,
            j2,
            m2,
            j,
            m,
        })
    }
}

/// Labels of a Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}. Triangle
/// conditions are checked by the evaluation, not at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SixJKey {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub j4: HalfInt,
    pub j5: HalfInt,
    pub j6: HalfInt,
}

impl SixJKey {
    pub fn new(
        j1: HalfInt,
        j2: HalfInt,
        j3: HalfInt,
        j4: HalfInt,
        j5: HalfInt,
        j6: HalfInt,
    ) -> Self {
        Self {
            j1,
            j2,
            j3,
            j4,
            j5,
            j6,
        }
    }
}

pub(crate) fn neg_one_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn fact(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    factorial(n as u64)
}

/// |j1 - j2| <= j3 <= j1 + j2 with an integer perimeter.
fn triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool {
    let perimeter = j1 + j2 + j3;
    perimeter.is_integer()
        && (j1 + j2 - j3).twice() >= 0
        && (j2 + j3 - j1).twice() >= 0
        && (j3 + j1 - j2).twice() >= 0
}

/// Delta(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!, the squared
/// triangle coefficient, as an exact rational.
fn triangle_ratio(a: HalfInt, b: HalfInt, c: HalfInt) -> BigRational {
    let f1 = fact((a + b - c).as_integer().unwrap());
    let f2 = fact((a - b + c).as_integer().unwrap());
    let f3 = fact((-a + b + c).as_integer().unwrap());
    let f4 = fact((a + b + c).as_integer().unwrap() + 1);
    BigRational::new(f1 * f2 * f3, f4)
}

/// Exact Clebsch-Gordan coefficient by the Racah closed-form sum.
///
/// Returns zero when m != m1 + m2, when the triangle rule fails, or when
/// any projection is out of range.
pub fn clebsch_gordan(key: &CouplingKey) -> Surd {
    let CouplingKey {
        j1,
        m1,
        j2,
        m2,
        j,
        m,
    } = *key;
    if m != m1 + m2 || !triangle_ok(j1, j2, j) {
        return Surd::zero();
    }
    if m1.abs() > j1 || m2.abs() > j2 || m.abs() > j {
        return Surd::zero();
    }

    // All of these are integers once the sector and triangle checks pass.
    let a = (j1 + j2 - j).as_integer().unwrap();
    let b = (j1 - m1).as_integer().unwrap();
    let c = (j2 + m2).as_integer().unwrap();
    let d = (j - j2 + m1).as_integer().unwrap();
    let e = (j - j1 - m2).as_integer().unwrap();

    let k_min = 0.max(-d).max(-e);
    let k_max = a.min(b).min(c);
    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let denom = fact(k) * fact(a - k) * fact(b - k) * fact(c - k) * fact(d + k) * fact(e + k);
        sum += BigRational::new(BigInt::from(neg_one_pow(k)), denom);
    }
    if sum.is_zero() {
        return Surd::zero();
    }

    let mut inner = triangle_ratio(j1, j2, j);
    inner *= BigRational::from(BigInt::from(j.twice() + 1));
    for h in [j + m, j - m, j1 + m1, j1 - m1, j2 + m2, j2 - m2] {
        inner *= BigRational::from(fact(h.as_integer().unwrap()));
    }
    Surd::sqrt_rational(&inner).scale(&sum)
}

/// Exact Wigner 6-j symbol by the Racah single-sum formula. Returns zero
/// when any of the four triads violates the triangle or integer-perimeter
/// conditions.
pub fn wigner_6j(key: &SixJKey) -> Surd {
    let SixJKey {
        j1,
        j2,
        j3,
        j4,
        j5,
        j6,
    } = *key;
    let triads = [(j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3)];
    if triads.iter().any(|&(a, b, c)| !triangle_ok(a, b, c)) {
        return Surd::zero();
    }

    let a1 = (j1 + j2 + j3).as_integer().unwrap();
    let a2 = (j1 + j5 + j6).as_integer().unwrap();
    let a3 = (j4 + j2 + j6).as_integer().unwrap();
    let a4 = (j4 + j5 + j3).as_integer().unwrap();
    let b1 = (j1 + j2 + j4 + j5).as_integer().unwrap();
    let b2 = (j1 + j3 + j4 + j6).as_integer().unwrap();
    let b3 = (j2 + j3 + j5 + j6).as_integer().unwrap();

    let k_min = a1.max(a2).max(a3).max(a4);
    let k_max = b1.min(b2).min(b3);
    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let numer = BigInt::from(neg_one_pow(k)) * fact(k + 1);
        let denom = fact(k - a1)
            * fact(k - a2)
            * fact(k - a3)
            * fact(k - a4)
            * fact(b1 - k)
            * fact(b2 - k)
            * fact(b3 - k);
        sum += BigRational::new(numer, denom);
    }
    if sum.is_zero() {
        return Surd::zero();
    }

    let inner = triads
        .iter()
        .map(|&(a, b, c)| triangle_ratio(a, b, c))
        .fold(BigRational::one(), |acc, r| acc * r);
    Surd::sqrt_rational(&inner).scale(&sum)
}

/// Reduced matrix element <b||B(+)||b> on the shell with principal
/// quantum number n = 2b + 1: sqrt((n^2-1)/2), in units of hbar.
pub fn reduced_b_element(n: u32) -> Result<Surd, AngularError> {
    if n < 1 {
        return Err(AngularError::InvalidLabels("n must be >= 1".into()));
    }
    let n = i64::from(n);
    Ok(Surd::sqrt_rational(&BigRational::new(
        BigInt::from(n * n - 1),
        BigInt::from(2),
    )))
}

/// Exact matrix element <n, l', l-1 | B(branch)_- | n, l, l> in units of
/// hbar, evaluated through the Wigner-Eckart theorem: a Clebsch-Gordan
/// factor, the 6-j recoupling symbol {b b l; 1 l' b} and the reduced
/// element sqrt((n^2-1)/2). The n = 1 shell is handled by the direct
/// product-basis sum, which avoids the 1/sqrt(n^2-1) factor.
///
/// Closed forms this reproduces, for 0 <= l <= n-1:
///   l' = l-1:  -/+ sqrt(l(n^2-l^2)/(2(2l+1)))
///   l' = l+1:  +/- sqrt((n^2-(l+1)^2)/(2(2l+1)(2l+3)))
///   l' = l:    sqrt(l/2)
/// and zero for every other l'.
pub fn b_minus_element(n: u32, l_prime: u32, l: u32, branch: Branch) -> Result<Surd, AngularError> {
    if n < 1 {
        return Err(AngularError::InvalidLabels("n must be >= 1".into()));
    }
    if l > n - 1 {
        return Err(AngularError::InvalidLabels(format!(
            "l = {} exceeds n - 1 = {}",
            l,
            n - 1
        )));
    }
    if n == 1 {
        return Ok(oracles::b_minus_direct(n, l_prime, l, branch));
    }

    let lp = i64::from(l_prime);
    let li = i64::from(l);
    if (lp - li).abs() > 1 {
        return Ok(Surd::zero());
    }

    let b = HalfInt::from_twice(i64::from(n) - 1);
    let l_h = HalfInt::from_int(li);
    let lp_h = HalfInt::from_int(lp);

    let cg = clebsch_gordan(
        &CouplingKey::new(
            l_h,
            l_h,
            HalfInt::ONE,
            HalfInt::from_int(-1),
            lp_h,
            l_h - HalfInt::ONE,
        )
        .expect("integer coupling labels"),
    );
    let six_j = wigner_6j(&SixJKey::new(b, b, l_h, HalfInt::ONE, lp_h, b));
    let dims = Surd::sqrt_rational(&BigRational::from(BigInt::from(
        (2 * li + 1) * i64::from(n),
    )));
    let reduced = reduced_b_element(n)?;

    // Wigner-Eckart phase (-1)^(-2b - l + 1); the exponent is an integer
    // here, so only its parity matters. Fixed by exact agreement with the
    // tabulated closed forms above.
    let phase = neg_one_pow(i64::from(n) - 1 + li + 1);
    let mut element = cg.mul(&six_j).mul(&dims).mul(&reduced);
    if phase < 0 {
        element = element.neg();
    }
    if let Branch::Minus = branch {
        if neg_one_pow(li - lp) < 0 {
            element = element.neg();
        }
    }
    Ok(element)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use num_bigint::BigUint;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn surd(num: i64, den: i64, rad: u64) -> Surd {
        Surd::new(ratio(num, den), BigUint::from(rad))
    }

    fn cg6(j1: i64, m1: i64, j2: i64, m2: i64, j: i64, m: i64) -> Surd {
        // arguments in doubled units
        clebsch_gordan(&CouplingKey::new(h(j1), h(m1), h(j2), h(m2), h(j), h(m)).unwrap())
    }

    #[test]
    fn stretched_state_is_one() {
        assert_eq!(cg6(2, 2, 4, 4, 6, 6), Surd::one());
        assert_eq!(cg6(1, 1, 1, 1, 2, 2), Surd::one());
    }

    #[test]
    fn singlet_components() {
        // <1/2 1/2; 1/2 -1/2 | 0 0> = +1/sqrt(2), CS convention
        assert_eq!(cg6(1, 1, 1, -1, 0, 0), surd(1, 2, 2));
        assert_eq!(cg6(1, -1, 1, 1, 0, 0), surd(-1, 2, 2));
    }

    #[test]
    fn out_of_range_projection_is_zero() {
        // M = 2 > J = 1
        assert_eq!(cg6(2, 2, 2, 2, 2, 4), Surd::zero());
    }

    #[test]
    fn mismatched_m_is_zero() {
        assert_eq!(cg6(2, 2, 2, 0, 4, 0), Surd::zero());
    }

    #[test]
    fn sector_mismatch_is_rejected() {
        assert!(CouplingKey::new(h(1), h(0), h(0), h(0), h(1), h(0)).is_err());
        assert!(CouplingKey::new(h(-2), h(0), h(0), h(0), h(2), h(0)).is_err());
    }

    #[test]
    fn six_j_closed_values() {
        // {1 1 1; 0 1 1} = -1/3
        let k = SixJKey::new(h(2), h(2), h(2), h(0), h(2), h(2));
        assert_eq!(wigner_6j(&k), surd(-1, 3, 1));
        // {1/2 1/2 1; 1 0 1/2} = 1/sqrt(6)
        let k = SixJKey::new(h(1), h(1), h(2), h(2), h(0), h(1));
        assert_eq!(wigner_6j(&k), surd(1, 6, 6));
        // {1 1 1; 1 1 1} = 1/6
        let k = SixJKey::new(h(2), h(2), h(2), h(2), h(2), h(2));
        assert_eq!(wigner_6j(&k), surd(1, 6, 1));
    }

    #[test]
    fn six_j_triangle_violation_is_zero() {
        // (1, 1, 3) violates the triangle rule
        let k = SixJKey::new(h(2), h(2), h(6), h(2), h(2), h(2));
        assert_eq!(wigner_6j(&k), Surd::zero());
    }

    #[test]
    fn reduced_element_values() {
        assert_eq!(reduced_b_element(1).unwrap(), Surd::zero());
        assert_eq!(reduced_b_element(2).unwrap(), surd(1, 2, 6));
        assert_eq!(reduced_b_element(3).unwrap(), surd(2, 1, 1));
        assert!(reduced_b_element(0).is_err());
    }

    #[test]
    fn b_minus_closed_forms_n2() {
        // <2,0,0|B(+)_-|2,1,1> = -sqrt(1/2)
        assert_eq!(
            b_minus_element(2, 0, 1, Branch::Plus).unwrap(),
            surd(-1, 2, 2)
        );
        // <2,1,0|B(+)_-|2,1,1> = +sqrt(1/2)
        assert_eq!(
            b_minus_element(2, 1, 1, Branch::Plus).unwrap(),
            surd(1, 2, 2)
        );
        // minus branch flips the l' = l - 1 channel, keeps l' = l
        assert_eq!(
            b_minus_element(2, 0, 1, Branch::Minus).unwrap(),
            surd(1, 2, 2)
        );
        assert_eq!(
            b_minus_element(2, 1, 1, Branch::Minus).unwrap(),
            surd(1, 2, 2)
        );
    }

    #[test]
    fn b_minus_shell_boundary_vanishes() {
        // n^2 - (l+1)^2 = 0 at l' = l + 1 = n
        assert_eq!(b_minus_element(3, 3, 2, Branch::Plus).unwrap(), Surd::zero());
    }

    #[test]
    fn b_minus_ground_shell_vanishes() {
        for lp in 0..3 {
            for branch in [Branch::Plus, Branch::Minus] {
                assert_eq!(b_minus_element(1, lp, 0, branch).unwrap(), Surd::zero());
            }
        }
    }

    #[test]
    fn b_minus_rejects_bad_labels() {
        assert!(b_minus_element(2, 0, 2, Branch::Plus).is_err());
        assert!(b_minus_element(0, 0, 0, Branch::Plus).is_err());
    }

    #[test]
    fn b_minus_l0_channels() {
        // Only the l' = l + 1 channel survives at l = 0:
        // +sqrt((n^2-1)/(2*3)) for the plus branch.
        assert_eq!(
            b_minus_element(3, 1, 0, Branch::Plus).unwrap(),
            Surd::sqrt_rational(&ratio(8, 6))
        );
        assert_eq!(b_minus_element(3, 0, 0, Branch::Plus).unwrap(), Surd::zero());
        assert_eq!(
            b_minus_element(3, 1, 0, Branch::Minus).unwrap(),
            Surd::sqrt_rational(&ratio(8, 6)).neg()
        );
    }
}
