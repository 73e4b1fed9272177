//! Regular Coulomb function F_l(eta, rho) by its power series, plus the
//! residual checks for the positive-energy recursion relations and the
//! continuum radial equation.
//!
//! Only the regular solution is generated: the recursions are linear and
//! solution-independent, so verifying them on F_l validates the
//! recursion operators themselves. The series is accurate inside a
//! documented validity box (rho <= 30, |eta| <= 10, l <= 10); outside it
//! the evaluation refuses rather than degrading silently.

use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoulombError {
    #[error("outside the series validity box (rho <= 30, |eta| <= 10, l <= 10): {0}")]
    OutOfDomain(String),
    #[error("series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("finite-difference step too large: h = {h} > x/10 = {limit}")]
    StepTooLarge { h: f64, limit: f64 },
    #[error("wavenumber must be positive, got {0}")]
    NonPositiveWavenumber(f64),
}

pub const MAX_SERIES_TERMS: usize = 1000;

/// Arguments of the regular Coulomb function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombParams {
    pub l: u32,
    pub eta: f64,
    pub rho: f64,
}

impl CoulombParams {
    pub fn new(l: u32, eta: f64, rho: f64) -> Result<Self, CoulombError> {
        if !(rho > 0.0 && rho <= 30.0) {
            return Err(CoulombError::OutOfDomain(format!("rho = {}", rho)));
        }
        if eta.is_nan() || eta.abs() > 10.0 {
            return Err(CoulombError::OutOfDomain(format!("eta = {}", eta)));
        }
        if l > 10 {
            return Err(CoulombError::OutOfDomain(format!("l = {}", l)));
        }
        Ok(Self { l, eta, rho })
    }
}

/// F_l(eta, rho) and its rho-derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombValue {
    pub f: f64,
    pub f_prime: f64,
}

/// The eta/nu mapping for an attractive charge Z at wavenumber k:
/// eta = -Z/(a0 k), nu = Z/(a0 k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuumMapping {
    pub eta: f64,
    pub nu: f64,
}

pub fn eta_from_energy(z: u32, k: f64, a0: f64) -> Result<ContinuumMapping, CoulombError> {
    if k.is_nan() || k <= 0.0 {
        return Err(CoulombError::NonPositiveWavenumber(k));
    }
    let nu = f64::from(z) / (a0 * k);
    Ok(ContinuumMapping { eta: -nu, nu })
}

/// Normalization constant C_l(eta), through
/// |Gamma(1 + i eta)|^2 = pi eta / sinh(pi eta) and
/// |Gamma(l+1+i eta)|^2 = |Gamma(1+i eta)|^2 prod_{s=1..l} (s^2 + eta^2).
pub fn normalizer(l: u32, eta: f64) -> f64 {
    let gamma1_sq = if eta == 0.0 {
        1.0
    } else {
        PI * eta / (PI * eta).sinh()
    };
    let mut gamma_sq = gamma1_sq;
    for s in 1..=l {
        let s = f64::from(s);
        gamma_sq *= s * s + eta * eta;
    }
    let mut fact_2l1 = 1.0;
    for k in 2..=(2 * l + 1) {
        fact_2l1 *= f64::from(k);
    }
    2.0f64.powi(l as i32) * (-PI * eta / 2.0).exp() * gamma_sq.sqrt() / fact_2l1
}

/// Evaluates F_l and F'_l by the regular power series
/// F_l = C_l(eta) rho^(l+1) sum_m a_m rho^m with a_0 = 1,
/// a_1 = eta/(l+1) and m(m + 2l + 1) a_m = 2 eta a_{m-1} - a_{m-2}.
pub fn coulomb_f(p: &CoulombParams) -> Result<CoulombValue, CoulombError> {
    let (sum, sum_d, _) = series_sums(p)?;
    let c = normalizer(p.l, p.eta);
    let lp1 = f64::from(p.l) + 1.0;
    let f = c * p.rho.powf(lp1) * sum;
    let f_prime = c * p.rho.powf(lp1 - 1.0) * sum_d;
    Ok(CoulombValue { f, f_prime })
}

/// Term-wise second derivative of the series, used for the ODE
/// consistency check F'' + (1 - 2 eta/rho - l(l+1)/rho^2) F = 0.
pub fn coulomb_f_second_derivative(p: &CoulombParams) -> Result<f64, CoulombError> {
    let (_, _, sum_dd) = series_sums(p)?;
    let c = normalizer(p.l, p.eta);
    Ok(c * p.rho.powf(f64::from(p.l) - 1.0) * sum_dd)
}

/// Returns (sum a_m rho^m, sum (l+1+m) a_m rho^m,
/// sum (l+1+m)(l+m) a_m rho^m), truncated when the running term drops
/// below 1e-16 relative for two consecutive terms.
fn series_sums(p: &CoulombParams) -> Result<(f64, f64, f64), CoulombError> {
    let l = f64::from(p.l);
    let eta = p.eta;
    let rho = p.rho;

    // term_m = a_m rho^m
    let mut term_prev = 1.0; // m = 0
    let mut term = eta / (l + 1.0) * rho; // m = 1
    let mut sum = term_prev + term;
    let mut sum_d = (l + 1.0) * term_prev + (l + 2.0) * term;
    let mut sum_dd = (l + 1.0) * l * term_prev + (l + 2.0) * (l + 1.0) * term;
    let mut small_streak = 0u32;

    for m in 2..MAX_SERIES_TERMS {
        let m_f = m as f64;
        let next = (2.0 * eta * rho * term - rho * rho * term_prev) / (m_f * (m_f + 2.0 * l + 1.0));
        term_prev = term;
        term = next;
        sum += term;
        sum_d += (l + 1.0 + m_f) * term;
        sum_dd += (l + 1.0 + m_f) * (l + m_f) * term;

        if term.abs() <= 1e-16 * sum.abs().max(1.0) {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok((sum, sum_d, sum_dd));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(CoulombError::NoConvergence(MAX_SERIES_TERMS))
}

/// Residuals of the two displayed recurrences at (l, eta, rho):
///   down: l F'_l + (l^2/rho + eta) F_l - sqrt(l^2 + eta^2) F_{l-1}
///   up:   (l+1) F'_l - ((l+1)^2/rho + eta) F_l + sqrt((l+1)^2 + eta^2) F_{l+1}
/// `down` is None at l = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecursionResidual {
    pub down: Option<f64>,
    pub up: f64,
}

pub fn recursion_residual(l: u32, eta: f64, rho: f64) -> Result<RecursionResidual, CoulombError> {
    let here = coulomb_f(&CoulombParams::new(l, eta, rho)?)?;
    let l_f = f64::from(l);

    let down = if l >= 1 {
        let below = coulomb_f(&CoulombParams::new(l - 1, eta, rho)?)?;
        Some(
            l_f * here.f_prime + (l_f * l_f / rho + eta) * here.f
                - (l_f * l_f + eta * eta).sqrt() * below.f,
        )
    } else {
        None
    };

    let above = coulomb_f(&CoulombParams::new(l + 1, eta, rho)?)?;
    let lp1 = l_f + 1.0;
    let up = lp1 * here.f_prime - (lp1 * lp1 / rho + eta) * here.f
        + (lp1 * lp1 + eta * eta).sqrt() * above.f;

    Ok(RecursionResidual { down, up })
}

/// Central finite-difference residual of the continuum radial equation
/// (d^2/dx^2 + 2(l+1)/x d/dx + 2/x + 1/nu^2) applied to
/// R_l/x^l = F_l(-nu, x/nu) / x^(l+1), at x, with step h. Vanishes as
/// O(h^2) for the true function.
pub fn continuum_ode_residual(l: u32, nu: f64, x: f64, h: f64) -> Result<f64, CoulombError> {
    if nu.is_nan() || nu <= 0.0 {
        return Err(CoulombError::NonPositiveWavenumber(nu));
    }
    if h > x / 10.0 {
        return Err(CoulombError::StepTooLarge { h, limit: x / 10.0 });
    }
    let w = |x: f64| -> Result<f64, CoulombError> {
        let p = CoulombParams::new(l, -nu, x / nu)?;
        Ok(coulomb_f(&p)?.f / x.powi(l as i32 + 1))
    };
    let (w_minus, w_0, w_plus) = (w(x - h)?, w(x)?, w(x + h)?);
    let second = (w_plus - 2.0 * w_0 + w_minus) / (h * h);
    let first = (w_plus - w_minus) / (2.0 * h);
    Ok(second + 2.0 * (f64::from(l) + 1.0) / x * first + (2.0 / x + 1.0 / (nu * nu)) * w_0)
}

/// Residual of the Coulomb ODE with the series' own term-wise second
/// derivative: F'' + (1 - 2 eta/rho - l(l+1)/rho^2) F.
pub fn series_ode_residual(p: &CoulombParams) -> Result<f64, CoulombError> {
    let v = coulomb_f(p)?;
    let f_dd = coulomb_f_second_derivative(p)?;
    let l = f64::from(p.l);
    Ok(f_dd + (1.0 - 2.0 * p.eta / p.rho - l * (l + 1.0) / (p.rho * p.rho)) * v.f)
}

/// rho * j_l(rho) by the spherical-Bessel power series; the independent
/// eta = 0 reference for F_l.
pub fn rho_times_spherical_bessel(l: u32, rho: f64) -> f64 {
    // j_l(x) = x^l sum_k (-x^2/2)^k / (k! (2l+2k+1)!!)
    let mut double_fact = 1.0;
    for s in 1..=l {
        double_fact *= f64::from(2 * s + 1);
    }
    let mut term = rho.powi(l as i32) / double_fact;
    let mut sum = term;
    let mut k = 1.0;
    let mut odd = f64::from(2 * l) + 3.0;
    loop {
        term *= -rho * rho / (2.0 * k * odd);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        k += 1.0;
        odd += 2.0;
    }
    rho * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn free_particle_reduction_l0() {
        // F_0(0, rho) = sin(rho)
        let v = coulomb_f(&CoulombParams::new(0, 0.0, FRAC_PI_2).unwrap()).unwrap();
        assert!((v.f - 1.0).abs() < 1e-14);
        assert!(v.f_prime.abs() < 1e-14);
        let v = coulomb_f(&CoulombParams::new(0, 0.0, 2.0).unwrap()).unwrap();
        assert!((v.f - 2.0f64.sin()).abs() < 1e-14);
        assert!((v.f_prime - 2.0f64.cos()).abs() < 1e-14);
    }

    #[test]
    fn spherical_bessel_reduction_l1() {
        // F_1(0, 2) = sin(2)/2 - cos(2)
        let v = coulomb_f(&CoulombParams::new(1, 0.0, 2.0).unwrap()).unwrap();
        let expected = 2.0f64.sin() / 2.0 - 2.0f64.cos();
        assert!((v.f - expected).abs() < 1e-14);
        assert!((expected - 0.870796).abs() < 1e-6);
    }

    #[test]
    fn bessel_reduction_sweep() {
        for l in 0..=5u32 {
            let mut rho = 0.2;
            while rho <= 10.0 {
                let v = coulomb_f(&CoulombParams::new(l, 0.0, rho).unwrap()).unwrap();
                let reference = rho_times_spherical_bessel(l, rho);
                assert!(
                    (v.f - reference).abs() < 1e-10,
                    "l = {}, rho = {}: {} vs {}",
                    l,
                    rho,
                    v.f,
                    reference
                );
                rho += 0.2;
            }
        }
    }

    #[test]
    fn small_rho_limit_matches_normalizer() {
        // F_0(-1, rho)/rho -> C_0(-1) = sqrt(2 pi / (1 - e^(-2 pi)))
        let c0 = (2.0 * PI / (1.0 - (-2.0 * PI).exp())).sqrt();
        assert!((c0 - 2.508972).abs() < 1e-5);
        let rho = 1e-4;
        let v = coulomb_f(&CoulombParams::new(0, -1.0, rho).unwrap()).unwrap();
        // the first series correction is eta*rho, so allow that margin
        assert!((v.f / rho - c0).abs() < 2.0 * rho * c0);
        assert!((normalizer(0, -1.0) - c0).abs() < 1e-12);
    }

    #[test]
    fn recursion_residuals_small() {
        let r = recursion_residual(1, -1.0, 2.0).unwrap();
        assert!(r.down.unwrap().abs() < 1e-8);
        assert!(r.up.abs() < 1e-8);
        // eta = 0 reduces to the spherical-Bessel recurrence
        let r = recursion_residual(1, 0.0, 3.0).unwrap();
        assert!(r.down.unwrap().abs() < 1e-10);
        assert!(r.up.abs() < 1e-10);
        // l = 0 has no downward relation
        let r = recursion_residual(0, -0.5, 1.0).unwrap();
        assert!(r.down.is_none());
    }

    #[test]
    fn recursion_residual_detects_perturbation() {
        // replacing F_l by 1.01 F_l must break the downward relation
        let l = 1u32;
        let (eta, rho) = (-1.0, 2.0);
        let here = coulomb_f(&CoulombParams::new(l, eta, rho).unwrap()).unwrap();
        let below = coulomb_f(&CoulombParams::new(l - 1, eta, rho).unwrap()).unwrap();
        let l_f = f64::from(l);
        let down = 1.01 * (l_f * here.f_prime + (l_f * l_f / rho + eta) * here.f)
            - (l_f * l_f + eta * eta).sqrt() * below.f;
        assert!(down.abs() > 1e-3);
    }

    #[test]
    fn recursion_sweep_box() {
        for l in 0..=5u32 {
            for eta in [-2.0, -1.0, -0.5, 0.0] {
                for rho in [0.2, 0.5, 1.0, 2.0, 5.0, 10.0] {
                    let r = recursion_residual(l, eta, rho).unwrap();
                    if let Some(down) = r.down {
                        assert!(down.abs() < 1e-8, "down at l={}, eta={}, rho={}", l, eta, rho);
                    }
                    assert!(r.up.abs() < 1e-8, "up at l={}, eta={}, rho={}", l, eta, rho);
                }
            }
        }
    }

    #[test]
    fn series_satisfies_its_own_ode() {
        for l in 0..=5u32 {
            for eta in [-2.0, -1.0, -0.5, 0.0] {
                for rho in [0.2, 0.5, 1.0, 2.0, 5.0, 10.0] {
                    let p = CoulombParams::new(l, eta, rho).unwrap();
                    let res = series_ode_residual(&p).unwrap();
                    assert!(res.abs() < 1e-8, "l={}, eta={}, rho={}: {}", l, eta, rho, res);
                }
            }
        }
    }

    #[test]
    fn continuum_ode_examples() {
        let r = continuum_ode_residual(0, 1.0, 2.0, 1e-3).unwrap();
        assert!(r.abs() < 1e-5, "residual {}", r);
        let r = continuum_ode_residual(2, 2.0, 4.0, 1e-3).unwrap();
        assert!(r.abs() < 1e-5, "residual {}", r);
    }

    #[test]
    fn continuum_ode_converges_quadratically() {
        let coarse = continuum_ode_residual(1, 1.0, 2.5, 2e-3).unwrap();
        let fine = continuum_ode_residual(1, 1.0, 2.5, 1e-3).unwrap();
        let rate = coarse.abs() / fine.abs();
        assert!((3.0..5.5).contains(&rate), "rate {}", rate);
    }

    #[test]
    fn domain_guards() {
        assert!(matches!(
            CoulombParams::new(0, 0.0, 0.0),
            Err(CoulombError::OutOfDomain(_))
        ));
        assert!(matches!(
            CoulombParams::new(0, 0.0, 31.0),
            Err(CoulombError::OutOfDomain(_))
        ));
        assert!(matches!(
            CoulombParams::new(0, -11.0, 1.0),
            Err(CoulombError::OutOfDomain(_))
        ));
        assert!(matches!(
            CoulombParams::new(11, 0.0, 1.0),
            Err(CoulombError::OutOfDomain(_))
        ));
        assert!(matches!(
            continuum_ode_residual(0, 1.0, 1.0, 0.2),
            Err(CoulombError::StepTooLarge { .. })
        ));
    }

    #[test]
    fn energy_mapping() {
        let m = eta_from_energy(1, 1.0, 1.0).unwrap();
        assert_eq!(m.eta, -1.0);
        assert_eq!(m.nu, 1.0);
        let m = eta_from_energy(2, 1.0, 1.0).unwrap();
        assert_eq!(m.eta, -2.0);
        assert!(matches!(
            eta_from_energy(1, 0.0, 1.0),
            Err(CoulombError::NonPositiveWavenumber(_))
        ));
    }
}
