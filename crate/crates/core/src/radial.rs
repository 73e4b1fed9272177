//! Bound-state radial wavefunctions generated exactly from the ladder
//! recursions induced by the Runge-Lenz vector.
//!
//! A state is stored as R_nl(x) = prefactor * poly(x) * exp(-x/n) in the
//! dimensionless variable x = Zr/a0, with the prefactor in units of
//! (Z/a0)^(3/2). The polynomial carries the full x^l factor: its lowest
//! nonzero power is l, its degree is n-1, and its lowest nonzero
//! coefficient is normalized to 1 so that equal states are structurally
//! equal.
//!
//! Generation is top-down: the stretched state R_{n,n-1} is fixed by the
//! first-order annihilation equation plus exact normalization, and
//! `lower_l` walks down to l = 0. `raise_l` is kept for cross-validation.
//! No discretization appears anywhere; every integral reduces to exact
//! exponential moments.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{exp_moment, int, ratio, Polynomial, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadialError {
    #[error("invalid quantum labels: {0}")]
    InvalidLabels(String),
    #[error("no state below l = 0")]
    GroundAngular,
    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(String),
    #[error("overlap requires equal angular momenta, got l = {0} and l = {1}")]
    MixedAngular(u32, u32),
}

/// Exact radial wavefunction R_nl(x) = prefactor * poly(x) * e^(-x/n).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialWaveFunction {
    n: u32,
    l: u32,
    prefactor: Surd,
    poly: Polynomial,
    decay_rate: BigRational,
}

/// Outcome of `raise_l`: a genuine state, or the distinguished zero
/// function produced when the raising operator annihilates the l = n-1
/// state.
#[derive(Debug, Clone, PartialEq)]
pub enum Raised {
    State(RadialWaveFunction),
    ZeroFunction,
}

impl RadialWaveFunction {
    fn assemble(n: u32, l: u32, prefactor: Surd, poly: Polynomial) -> Self {
        let (prefactor, poly) = canonicalize(prefactor, poly);
        debug_assert_eq!(poly.order(), Some(l as usize), "lowest power must be l");
        debug_assert_eq!(poly.degree(), Some(n as usize - 1), "degree must be n-1");
        Self {
            n,
            l,
            prefactor,
            poly,
            decay_rate: ratio(1, i64::from(n)),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Overall surd factor, in units of (Z/a0)^(3/2).
    pub fn prefactor(&self) -> &Surd {
        &self.prefactor
    }

    /// Full polynomial in x, including the x^l factor, lowest nonzero
    /// coefficient 1.
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Always 1/n: the argument of the exponential is -x/n.
    pub fn decay_rate(&self) -> &BigRational {
        &self.decay_rate
    }

    /// The polynomial divided by x^l, still exact.
    fn reduced_poly(&self) -> Polynomial {
        self.poly
            .shifted_down(self.l as usize)
            .expect("generated polynomial is divisible by x^l")
    }

    /// Double-precision value at x >= 0.
    pub fn evaluate(&self, x: f64) -> Result<f64, RadialError> {
        if x < 0.0 {
            return Err(RadialError::NegativeRadius(format!("{}", x)));
        }
        let decay = crate::exact::to_f64(&self.decay_rate);
        Ok(self.prefactor.to_f64() * self.poly.eval_f64(x) * (-decay * x).exp())
    }

    /// Exact overlap integral of x^2 R1 R2 over [0, inf). The common
    /// decay rate 1/n1 + 1/n2 rationalizes every term through the
    /// exponential moments.
    pub fn overlap(&self, other: &Self) -> Result<Surd, RadialError> {
        if self.l != other.l {
            return Err(RadialError::MixedAngular(self.l, other.l));
        }
        let rate = &self.decay_rate + &other.decay_rate;
        let product = self.poly.mul(&other.poly);
        let mut sum = BigRational::zero();
        for (k, c) in product.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let moment = exp_moment(k as u32 + 2, &rate).expect("positive decay rate");
            sum += c * moment;
        }
        Ok(self.prefactor.mul(&other.prefactor).scale(&sum))
    }

    /// Applies the lowering recursion and returns the exactly normalized
    /// R_{n,l-1}.
    pub fn lower_l(&self) -> Result<Self, RadialError> {
        if self.l == 0 {
            return Err(RadialError::GroundAngular);
        }
        let n = i64::from(self.n);
        let l = i64::from(self.l);
        // ((2l+1)l + l x d/dx - x) on R/x^l, re-expressed on the full
        // polynomial p: [l(l+1) p + l x p' - ((n+l)/n) x p] / x.
        let p = &self.poly;
        let term1 = p.scale(&int(l * (l + 1)));
        let term2 = p.derivative().shifted_up(1).scale(&int(l));
        let term3 = p.shifted_up(1).scale(&ratio(n + l, n));
        let numerator = term1.add(&term2).sub(&term3);
        let new_poly = numerator
            .shifted_down(1)
            .expect("lowering numerator vanishes at x = 0");
        // n / sqrt(n^2 - l^2)
        let rescale = Surd::sqrt_rational(&ratio(n * n, n * n - l * l));
        Ok(Self::assemble(
            self.n,
            self.l - 1,
            self.prefactor.mul(&rescale),
            new_poly,
        ))
    }

    /// Applies the raising recursion: R_{n,l+1}, or the distinguished
    /// zero function when l = n-1 (the operator annihilates the top
    /// state).
    pub fn raise_l(&self) -> Raised {
        let n = i64::from(self.n);
        let l = i64::from(self.l);
        // ((l+1)/x d/dx + 1/x) on R/x^l, re-expressed on the full
        // polynomial p: [(l+1) x p' + ((n-l-1)/n) x p - l(l+1) p] / x.
        let p = &self.poly;
        let term1 = p.derivative().shifted_up(1).scale(&int(l + 1));
        let term2 = p.shifted_up(1).scale(&ratio(n - l - 1, n));
        let term3 = p.scale(&int(l * (l + 1)));
        let numerator = term1.add(&term2).sub(&term3);
        if numerator.is_zero() {
            return Raised::ZeroFunction;
        }
        let new_poly = numerator
            .shifted_down(1)
            .expect("raising numerator vanishes at x = 0");
        // -n / sqrt(n^2 - (l+1)^2)
        let rescale = Surd::sqrt_rational(&ratio(n * n, n * n - (l + 1) * (l + 1))).neg();
        Raised::State(Self::assemble(
            self.n,
            self.l + 1,
            self.prefactor.mul(&rescale),
            new_poly,
        ))
    }

    /// Exact residual of the radial equation applied to R/x^l, with the
    /// exponential and the common power of x cleared:
    ///   x g'' + 2(l+1) g' - (2x/n) g' + 2(1 - (l+1)/n) g,
    /// where g = poly/x^l without the prefactor (a nonzero overall scale
    /// cannot affect whether the residual vanishes). The zero polynomial
    /// iff R solves the radial equation.
    pub fn ode_residual(&self) -> Polynomial {
        let n = i64::from(self.n);
        let l = i64::from(self.l);
        let g = self.reduced_poly();
        let g1 = g.derivative();
        let g2 = g1.derivative();
        let term1 = g2.shifted_up(1);
        let term2 = g1.scale(&int(2 * (l + 1)));
        let term3 = g1.shifted_up(1).scale(&ratio(2, n));
        let term4 = g.scale(&(int(2) - ratio(2 * (l + 1), n)));
        term1.add(&term2).sub(&term3).add(&term4)
    }

    /// Returns a copy with `delta` added to the polynomial, bypassing
    /// canonicalization. Detector-sanity helper for residual checks; the
    /// perturbation must keep the lowest power at least l.
    pub fn perturbed(&self, delta: &Polynomial) -> Self {
        let poly = self.poly.add(delta);
        assert!(
            poly.order().is_some_and(|o| o >= self.l as usize),
            "perturbation must keep the lowest power >= l"
        );
        Self {
            poly,
            ..self.clone()
        }
    }
}

/// Pulls the lowest nonzero polynomial coefficient (sign included) into
/// the prefactor, so that equal states are structurally equal.
fn canonicalize(prefactor: Surd, poly: Polynomial) -> (Surd, Polynomial) {
    let Some(ord) = poly.order() else {
        return (prefactor, poly);
    };
    let lead = poly.coeff(ord);
    if lead.is_one() {
        return (prefactor, poly);
    }
    let scaled = poly.scale(&lead.recip());
    (prefactor.scale(&lead), scaled)
}

/// The stretched state R_{n,n-1}(x) = N_n x^(n-1) e^(-x/n), with the
/// exact positive normalizer N_n^2 = (2/n)^(2n+1) / (2n)! recomputed
/// from the norm integral.
pub fn top_state(n: u32) -> Result<RadialWaveFunction, RadialError> {
    if n < 1 {
        return Err(RadialError::InvalidLabels("n must be >= 1".into()));
    }
    let n_i = i64::from(n);
    let mut norm_sq = BigRational::one();
    for _ in 0..(2 * n + 1) {
        norm_sq *= ratio(2, n_i);
    }
    norm_sq /= BigRational::from(crate::exact::factorial(2 * u64::from(n)));
    let prefactor = Surd::sqrt_rational(&norm_sq);
    let poly = Polynomial::monomial(n as usize - 1, BigRational::one());
    Ok(RadialWaveFunction::assemble(n, n - 1, prefactor, poly))
}

/// All R_nl on the shell, l = n-1 down to 0, generated by repeated
/// lowering from the top state.
pub fn generate_shell(n: u32) -> Result<Vec<RadialWaveFunction>, RadialError> {
    let mut states = vec![top_state(n)?];
    for _ in 1..n {
        let next = states.last().unwrap().lower_l()?;
        states.push(next);
    }
    Ok(states)
}

/// Exact residuals of the two factorization identities at (n, l):
/// lowering(raising(R/x^l)) and raising(lowering(R/x^l)) minus their
/// eigenvalues -(n^2-(l+1)^2)/(n^2 (l+1)^2) and -(n^2-l^2)/(n^2 l^2).
/// The first is None at l = n-1 (the raising branch annihilates), the
/// second is None at l = 0. Each returned polynomial is the zero
/// polynomial iff the identity holds.
pub fn factorization_residual(
    n: u32,
    l: u32,
) -> Result<(Option<Polynomial>, Option<Polynomial>), RadialError> {
    if n < 1 || l > n - 1 {
        return Err(RadialError::InvalidLabels(format!(
            "need 0 <= l <= n-1, got n = {}, l = {}",
            n, l
        )));
    }
    let shell = generate_shell(n)?;
    let state = &shell[(n - 1 - l) as usize];
    let q = state.reduced_poly();
    let n_i = i64::from(n);
    let l_i = i64::from(l);

    let first = if l == n - 1 {
        None
    } else {
        // s = (l+1) q' + ((n-l-1)/n) q, then
        // (l+1)(2l+2) s + (l+1) x s' - ((n+l+1)/n) x s
        //   + ((n^2-(l+1)^2)/n^2) x q
        let s = q
            .derivative()
            .scale(&int(l_i + 1))
            .add(&q.scale(&ratio(n_i - l_i - 1, n_i)));
        let res = s
            .scale(&int((l_i + 1) * (2 * l_i + 2)))
            .add(&s.derivative().shifted_up(1).scale(&int(l_i + 1)))
            .sub(&s.shifted_up(1).scale(&ratio(n_i + l_i + 1, n_i)))
            .add(&q.shifted_up(1).scale(&ratio(
                n_i * n_i - (l_i + 1) * (l_i + 1),
                n_i * n_i,
            )));
        Some(res)
    };

    let second = if l == 0 {
        None
    } else {
        // t = (2l+1)l q + l x q' - ((n+l)/n) x q, then
        // l t' + ((n-l)/n) t + ((n^2-l^2)/n^2) x q
        let t = q
            .scale(&int((2 * l_i + 1) * l_i))
            .add(&q.derivative().shifted_up(1).scale(&int(l_i)))
            .sub(&q.shifted_up(1).scale(&ratio(n_i + l_i, n_i)));
        let res = t
            .derivative()
            .scale(&int(l_i))
            .add(&t.scale(&ratio(n_i - l_i, n_i)))
            .add(&q.shifted_up(1).scale(&ratio(n_i * n_i - l_i * l_i, n_i * n_i)));
        Some(res)
    };

    Ok((first, second))
}

/// The six explicit low-shell states in canonical exact form, used as
/// frozen fixtures by tests and the verification suites:
/// (n, l, prefactor, polynomial).
pub fn reference_states() -> Vec<(u32, u32, Surd, Polynomial)> {
    let surd = |num: i64, den: i64, rad: u64| {
        Surd::new(ratio(num, den), num_bigint::BigUint::from(rad))
    };
    let poly = |cs: &[(i64, i64)]| Polynomial::new(cs.iter().map(|&(a, b)| ratio(a, b)).collect());
    vec![
        // R_10 = 2 e^-x
        (1, 0, Surd::from_rational(int(2)), poly(&[(1, 1)])),
        // R_21 = (1/sqrt(3)) (1/2)^(3/2) x e^(-x/2) = (sqrt(6)/12) x e^(-x/2)
        (2, 1, surd(1, 12, 6), poly(&[(0, 1), (1, 1)])),
        // R_20 = 2 (1/2)^(3/2) (1 - x/2) e^(-x/2) = (sqrt(2)/2)(1 - x/2) e^(-x/2)
        (2, 0, surd(1, 2, 2), poly(&[(1, 1), (-1, 2)])),
        // R_32 = (2 sqrt(2)/(27 sqrt(5))) (1/3)^(3/2) x^2 e^(-x/3)
        //      = (2 sqrt(30)/1215) x^2 e^(-x/3)
        (3, 2, surd(2, 1215, 30), poly(&[(0, 1), (0, 1), (1, 1)])),
        // R_31 = (4 sqrt(2)/9) (1/3)^(3/2) x (1 - x/6) e^(-x/3)
        //      = (4 sqrt(6)/81) (x - x^2/6) e^(-x/3)
        (3, 1, surd(4, 81, 6), poly(&[(0, 1), (1, 1), (-1, 6)])),
        // R_30 = 2 (1/3)^(3/2) (1 - 2x/3 + 2x^2/27) e^(-x/3)
        //      = (2 sqrt(3)/9) (...) e^(-x/3)
        (3, 0, surd(2, 9, 3), poly(&[(1, 1), (-2, 3), (2, 27)])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BigUint;

    fn poly(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(a, b)| ratio(a, b)).collect())
    }

    fn surd(num: i64, den: i64, rad: u64) -> Surd {
        Surd::new(ratio(num, den), BigUint::from(rad))
    }

    #[test]
    fn top_states_match_the_explicit_table() {
        let r10 = top_state(1).unwrap();
        assert_eq!(r10.prefactor(), &Surd::from_rational(int(2)));
        assert_eq!(r10.poly(), &poly(&[(1, 1)]));
        assert_eq!(r10.decay_rate(), &int(1));

        let r21 = top_state(2).unwrap();
        assert_eq!(r21.prefactor(), &surd(1, 12, 6));
        assert_eq!(r21.poly(), &poly(&[(0, 1), (1, 1)]));

        let r32 = top_state(3).unwrap();
        assert_eq!(r32.prefactor(), &surd(2, 1215, 30));
        // prefactor^2 = (2/3)^7 / 720
        assert_eq!(r32.prefactor().square(), ratio(8, 98415));
    }

    #[test]
    fn generated_shells_match_the_explicit_table() {
        for (n, l, prefactor, p) in reference_states() {
            let shell = generate_shell(n).unwrap();
            let state = &shell[(n - 1 - l) as usize];
            assert_eq!(state.l(), l);
            assert_eq!(state.prefactor(), &prefactor, "prefactor of R_{}{}", n, l);
            assert_eq!(state.poly(), &p, "polynomial of R_{}{}", n, l);
        }
    }

    #[test]
    fn lowering_below_ground_fails() {
        let r10 = top_state(1).unwrap();
        assert_eq!(r10.lower_l(), Err(RadialError::GroundAngular));
    }

    #[test]
    fn raising_the_top_state_annihilates() {
        for n in 1..=6 {
            assert_eq!(top_state(n).unwrap().raise_l(), Raised::ZeroFunction);
        }
    }

    #[test]
    fn raising_inverts_lowering() {
        for n in 2..=8u32 {
            let shell = generate_shell(n).unwrap();
            for l in 0..n - 1 {
                let upper = &shell[(n - 2 - l) as usize];
                let lower = &shell[(n - 1 - l) as usize];
                assert_eq!(lower.l(), l);
                match lower.raise_l() {
                    Raised::State(s) => assert_eq!(&s, upper, "raise R_{}{}", n, l),
                    Raised::ZeroFunction => panic!("unexpected annihilation at l = {}", l),
                }
            }
        }
    }

    #[test]
    fn shells_are_orthonormal() {
        for n1 in 1..=8u32 {
            let shell1 = generate_shell(n1).unwrap();
            for n2 in n1..=8u32 {
                let shell2 = generate_shell(n2).unwrap();
                for s1 in &shell1 {
                    for s2 in &shell2 {
                        if s1.l() != s2.l() {
                            continue;
                        }
                        let expected = if n1 == n2 { Surd::one() } else { Surd::zero() };
                        assert_eq!(
                            s1.overlap(s2).unwrap(),
                            expected,
                            "overlap of R_{}{} and R_{}{}",
                            n1,
                            s1.l(),
                            n2,
                            s2.l()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn overlap_rejects_mixed_angular_momentum() {
        let r21 = top_state(2).unwrap();
        let r10 = top_state(1).unwrap();
        assert_eq!(r21.overlap(&r10), Err(RadialError::MixedAngular(1, 0)));
    }

    #[test]
    fn ode_residual_vanishes_for_generated_states() {
        for n in 1..=10u32 {
            for state in generate_shell(n).unwrap() {
                assert!(
                    state.ode_residual().is_zero(),
                    "residual of R_{}{}",
                    n,
                    state.l()
                );
            }
        }
    }

    #[test]
    fn ode_residual_detects_perturbation() {
        let r10 = top_state(1).unwrap();
        let bent = r10.perturbed(&poly(&[(0, 1), (1, 1)]));
        assert!(!bent.ode_residual().is_zero());
    }

    #[test]
    fn factorization_identities_hold() {
        for n in 1..=8u32 {
            for l in 0..n {
                let (first, second) = factorization_residual(n, l).unwrap();
                match first {
                    Some(res) => assert!(res.is_zero(), "first identity at n={}, l={}", n, l),
                    None => assert_eq!(l, n - 1),
                }
                match second {
                    Some(res) => assert!(res.is_zero(), "second identity at n={}, l={}", n, l),
                    None => assert_eq!(l, 0),
                }
            }
        }
    }

    #[test]
    fn factorization_skip_pattern() {
        let (first, second) = factorization_residual(2, 0).unwrap();
        assert!(first.is_some_and(|p| p.is_zero()));
        assert!(second.is_none());
        let (first, second) = factorization_residual(2, 1).unwrap();
        assert!(first.is_none());
        assert!(second.is_some_and(|p| p.is_zero()));
        let (first, second) = factorization_residual(3, 1).unwrap();
        assert!(first.is_some_and(|p| p.is_zero()));
        assert!(second.is_some_and(|p| p.is_zero()));
    }

    #[test]
    fn evaluation_examples() {
        let shell2 = generate_shell(2).unwrap();
        let r20 = &shell2[1];
        assert_eq!(top_state(1).unwrap().evaluate(0.0).unwrap(), 2.0);
        assert!(r20.evaluate(2.0).unwrap().abs() < 1e-15);
        // monotone decay far beyond the last extremum
        let r21 = &shell2[0];
        assert!(r21.evaluate(80.0).unwrap().abs() < 1e-12);
        assert!(matches!(
            r21.evaluate(-0.5),
            Err(RadialError::NegativeRadius(_))
        ));
    }

    #[test]
    fn invalid_labels() {
        assert!(top_state(0).is_err());
        assert!(generate_shell(0).is_err());
        assert!(factorization_residual(2, 2).is_err());
    }
}
