//! Output rendering: JSON, CSV and LaTeX for wavefunction data and the
//! spectrum table, plus grid parsing. Exact values are emitted as
//! strings ("p/q") with parallel decimal fields for human reading.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use runge_lenz::coulomb::{coulomb_f, recursion_residual, CoulombError, CoulombParams};
use runge_lenz::exact::{Polynomial, Surd};
use runge_lenz::radial::RadialWaveFunction;

pub fn rational_string(r: &BigRational) -> String {
    runge_lenz::exact::format_rational(r)
}

pub fn rational_decimal(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// {"coeff": "p/q", "radicand": s}; the radicand is a JSON number when
/// it fits u64 (always true at the documented n <= 30 scale).
pub fn surd_to_json(s: &Surd) -> Value {
    let radicand = s
        .radicand()
        .to_u64()
        .map(Value::from)
        .unwrap_or_else(|| Value::String(s.radicand().to_string()));
    json!({
        "coeff": rational_string(s.coeff()),
        "radicand": radicand,
    })
}

pub fn surd_to_latex(s: &Surd) -> String {
    use num_traits::One;
    if s.is_zero() {
        return "0".to_string();
    }
    let coeff = s.coeff();
    let coeff_part = if coeff.denom().is_one() {
        format!("{}", coeff.numer())
    } else {
        let sign = if coeff < &BigRational::from_integer(0.into()) {
            "-"
        } else {
            ""
        };
        format!(
            "{}\\frac{{{}}}{{{}}}",
            sign,
            coeff.numer().magnitude(),
            coeff.denom()
        )
    };
    if s.radicand().is_one() {
        coeff_part
    } else {
        format!("{}\\sqrt{{{}}}", coeff_part, s.radicand())
    }
}

pub fn poly_to_latex(p: &Polynomial) -> String {
    use num_traits::{One, Signed, Zero};
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {} ", sign));
        }
        let mag = c.abs();
        let coeff = if mag.is_one() && k > 0 {
            String::new()
        } else if mag.denom().is_one() {
            format!("{}", mag.numer())
        } else {
            format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        let power = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{}}}", k),
        };
        out.push_str(&coeff);
        out.push_str(&power);
    }
    out
}

pub fn state_to_json(state: &RadialWaveFunction) -> Value {
    json!({
        "n": state.n(),
        "l": state.l(),
        "prefactor": surd_to_json(state.prefactor()),
        "prefactor_decimal": state.prefactor().to_f64(),
        "decay_rate": rational_string(state.decay_rate()),
        "decay_rate_decimal": rational_decimal(state.decay_rate()),
        "poly": state.poly().coefficients().iter().map(rational_string).collect::<Vec<_>>(),
        "poly_decimal": state.poly().coefficients().iter().map(rational_decimal).collect::<Vec<_>>(),
    })
}

pub fn states_to_csv(states: &[&RadialWaveFunction]) -> String {
    let mut out = String::from(
        "n,l,prefactor_coeff,prefactor_radicand,prefactor_decimal,decay_rate,poly_coefficients\n",
    );
    for state in states {
        let poly = state
            .poly()
            .coefficients()
            .iter()
            .map(rational_string)
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            state.n(),
            state.l(),
            rational_string(state.prefactor().coeff()),
            state.prefactor().radicand(),
            state.prefactor().to_f64(),
            rational_string(state.decay_rate()),
            poly,
        ));
    }
    out
}

pub fn states_to_latex(states: &[&RadialWaveFunction]) -> String {
    let mut out = String::new();
    for state in states {
        let poly_factor = state
            .poly()
            .shifted_down(state.l() as usize)
            .expect("poly divisible by x^l");
        let power = match state.l() {
            0 => String::new(),
            1 => "x\\,".to_string(),
            l => format!("x^{{{}}}\\,", l),
        };
        let poly_part = if poly_factor.degree() == Some(0) {
            String::new()
        } else {
            format!("\\left({}\\right)", poly_to_latex(&poly_factor))
        };
        let exponent = if state.n() == 1 {
            "e^{-x}".to_string()
        } else {
            format!("e^{{-x/{}}}", state.n())
        };
        out.push_str(&format!(
            "R_{{{}{}}}(x) &= {}\\,{}{}{} \\\\\n",
            state.n(),
            state.l(),
            surd_to_latex(state.prefactor()),
            power,
            poly_part,
            exponent,
        ));
    }
    out
}

/// Parses "start:stop:step" into a strictly increasing sample grid with
/// exactly floor((stop-start)/step) + 1 points.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be start:stop:step, got '{}'", spec));
    }
    let parse = |s: &str| -> Result<f64, String> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("grid component '{}' is not a number", s))
    };
    let (start, stop, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if !step.is_finite() || step <= 0.0 {
        return Err(format!("grid step must be positive, got {}", step));
    }
    if !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(format!("grid bounds must satisfy start <= stop, got {}:{}", start, stop));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

pub fn sample_to_csv(state: &RadialWaveFunction, grid: &[f64]) -> Result<String, String> {
    let mut out = String::from("x,R\n");
    for &x in grid {
        let value = state
            .evaluate(x)
            .map_err(|e| format!("evaluation failed: {}", e))?;
        out.push_str(&format!("{},{}\n", x, value));
    }
    Ok(out)
}

pub struct CoulombSample {
    pub rho: f64,
    pub f: f64,
    pub f_prime: f64,
    pub down: Option<f64>,
    pub up: f64,
}

pub fn coulomb_sweep(l: u32, eta: f64, grid: &[f64]) -> Result<Vec<CoulombSample>, CoulombError> {
    grid.iter()
        .map(|&rho| {
            let value = coulomb_f(&CoulombParams::new(l, eta, rho)?)?;
            let residual = recursion_residual(l, eta, rho)?;
            Ok(CoulombSample {
                rho,
                f: value.f,
                f_prime: value.f_prime,
                down: residual.down,
                up: residual.up,
            })
        })
        .collect()
}

pub fn coulomb_to_json(l: u32, eta: f64, samples: &[CoulombSample]) -> Value {
    json!({
        "l": l,
        "eta": eta,
        "samples": samples.iter().map(|s| json!({
            "rho": s.rho,
            "f": s.f,
            "f_prime": s.f_prime,
            "residual_down": s.down,
            "residual_up": s.up,
        })).collect::<Vec<_>>(),
    })
}

pub fn coulomb_to_csv(samples: &[CoulombSample]) -> String {
    let mut out = String::from("rho,f,f_prime,residual_down,residual_up\n");
    for s in samples {
        let down = s.down.map(|d| d.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{},{}\n", s.rho, s.f, s.f_prime, down, s.up));
    }
    out
}
