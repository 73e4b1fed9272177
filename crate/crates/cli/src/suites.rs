//! The four verification suites behind `rlz verify`. Each returns a
//! flat list of cases; ids are unique and stable so reports diff
//! cleanly. Exact checks carry an exact-match flag, floating-point
//! checks carry a residual and tolerance (overridable with --tol).

use serde_json::json;

use runge_lenz::angular::{
    b_minus_element, clebsch_gordan, oracles, wigner_6j, Branch, CouplingKey, SixJKey,
};
use runge_lenz::coulomb::{
    continuum_ode_residual, coulomb_f, recursion_residual, rho_times_spherical_bessel,
    series_ode_residual, CoulombParams,
};
use runge_lenz::exact::{ratio, HalfInt, Polynomial, Surd};
use runge_lenz::radial::{factorization_residual, generate_shell, reference_states};
use runge_lenz::shell::{build_shell, default_tolerance};

use crate::report::CaseResult;

const ETA_SAMPLES: [f64; 4] = [-2.0, -1.0, -0.5, 0.0];
const RHO_SAMPLES: [f64; 6] = [0.2, 0.5, 1.0, 2.0, 5.0, 10.0];

pub fn radial_suite(n_max: u32) -> Vec<CaseResult> {
    let mut cases = Vec::new();

    // The six explicit low-shell states, structural equality.
    for (n, l, prefactor, poly) in reference_states() {
        let shell = generate_shell(n).expect("n >= 1");
        let state = &shell[(n - 1 - l) as usize];
        let matched = state.prefactor() == &prefactor && state.poly() == &poly;
        cases.push(CaseResult::from_exact(
            format!("radial_table_R{}{}", n, l),
            json!({"n": n, "l": l}),
            matched,
        ));
    }

    for n in 1..=n_max {
        let shell = generate_shell(n).expect("n >= 1");
        for state in &shell {
            cases.push(CaseResult::from_exact(
                format!("radial_ode_n{}_l{}", n, state.l()),
                json!({"n": n, "l": state.l()}),
                state.ode_residual().is_zero(),
            ));
        }
        for l in 0..n {
            let (first, second) = factorization_residual(n, l).expect("valid labels");
            let ok = first.as_ref().is_none_or(Polynomial::is_zero)
                && second.as_ref().is_none_or(Polynomial::is_zero);
            cases.push(CaseResult::from_exact(
                format!("radial_factorization_n{}_l{}", n, l),
                json!({
                    "n": n, "l": l,
                    "first_skipped": first.is_none(),
                    "second_skipped": second.is_none(),
                }),
                ok,
            ));
        }
    }

    // Orthonormality across shells sharing l.
    let shells: Vec<_> = (1..=n_max)
        .map(|n| generate_shell(n).expect("n >= 1"))
        .collect();
    for (i, shell1) in shells.iter().enumerate() {
        for shell2 in shells.iter().skip(i) {
            for s1 in shell1 {
                for s2 in shell2 {
                    if s1.l() != s2.l() {
                        continue;
                    }
                    let expected = if s1.n() == s2.n() {
                        Surd::one()
                    } else {
                        Surd::zero()
                    };
                    let got = s1.overlap(s2).expect("same l");
                    cases.push(CaseResult::from_exact(
                        format!("radial_overlap_n{}_n{}_l{}", s1.n(), s2.n(), s1.l()),
                        json!({"n1": s1.n(), "n2": s2.n(), "l": s1.l()}),
                        got == expected,
                    ));
                }
            }
        }
    }

    // Detector sanity: a perturbed state must have a nonzero residual.
    let bent = generate_shell(1).expect("n >= 1")[0]
        .perturbed(&Polynomial::monomial(1, ratio(1, 1)));
    cases.push(CaseResult::from_exact(
        "radial_ode_perturbation_detector",
        json!({"n": 1, "l": 0, "perturbation": "+x"}),
        !bent.ode_residual().is_zero(),
    ));

    cases
}

pub fn shell_suite(n_max: u32, tol_override: Option<f64>) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        let ops = build_shell(n).expect("n >= 1");
        let dim = ops.dim();
        let tol = tol_override.unwrap_or_else(|| default_tolerance(dim));
        let tight = tol_override.unwrap_or(1e-12);

        let report = ops.algebra_residuals();
        for (name, value) in report.named() {
            cases.push(CaseResult::from_residual(
                format!("shell_n{}_algebra_{}", n, name),
                json!({"n": n, "dim": dim}),
                value,
                tol,
            ));
        }

        cases.push(CaseResult::from_residual(
            format!("shell_n{}_cg_unitarity", n),
            json!({"n": n, "dim": dim}),
            ops.unitarity_residual(),
            tight,
        ));
        cases.push(CaseResult::from_residual(
            format!("shell_n{}_lz_diagonal", n),
            json!({"n": n, "dim": dim}),
            ops.lz_diagonal_residual(),
            tight,
        ));

        // Master-formula channels against the Wigner-Eckart closed forms.
        for l in 0..n {
            let elements = ops.a_minus_elements(l).expect("valid l");
            let closed = |lp: u32| -> f64 {
                let plus = b_minus_element(n, lp, l, Branch::Plus).expect("valid labels");
                let minus = b_minus_element(n, lp, l, Branch::Minus).expect("valid labels");
                plus.to_f64() - minus.to_f64()
            };
            let mut worst: f64 = 0.0;
            if l < n - 1 {
                worst = worst.max((elements.c_up.re - closed(l + 1)).abs());
                worst = worst.max(elements.c_up.im.abs());
            } else {
                worst = worst.max(elements.c_up.norm());
            }
            if let Some(down) = elements.c_down {
                worst = worst.max((down.re - closed(l - 1)).abs());
                worst = worst.max(down.im.abs());
            }
            cases.push(CaseResult::from_residual(
                format!("shell_n{}_l{}_master_agreement", n, l),
                json!({"n": n, "l": l}),
                worst,
                tol,
            ));
            cases.push(CaseResult::from_residual(
                format!("shell_n{}_l{}_same_channel", n, l),
                json!({"n": n, "l": l}),
                elements.c_same.norm(),
                tight,
            ));
        }

        let (down_norm, up_norm) = ops.annihilation_check();
        cases.push(CaseResult::from_residual(
            format!("shell_n{}_annihilation", n),
            json!({"n": n}),
            down_norm.max(up_norm),
            tight,
        ));
    }
    cases
}

pub fn angular_suite(n_max: u32) -> Vec<CaseResult> {
    let mut cases = Vec::new();

    // Clebsch-Gordan against the eigenspace-construction oracle, j <= 3.
    for j1_twice in 0..=6i64 {
        for j2_twice in 0..=6i64 {
            let j1 = HalfInt::from_twice(j1_twice);
            let j2 = HalfInt::from_twice(j2_twice);
            let table = oracles::coupled_basis_by_construction(j1, j2);
            let mut matched = true;
            for state in &table {
                for m1 in j1.projections() {
                    for m2 in j2.projections() {
                        let key = CouplingKey::new(j1, m1, j2, m2, state.j, state.m)
                            .expect("consistent sectors");
                        if clebsch_gordan(&key) != state.amplitude(m1, m2) {
                            matched = false;
                        }
                    }
                }
            }
            cases.push(CaseResult::from_exact(
                format!("angular_cg_construction_2j1_{}_2j2_{}", j1_twice, j2_twice),
                json!({"two_j1": j1_twice, "two_j2": j2_twice}),
                matched,
            ));
        }
    }

    // 6-j against the contraction oracle, entries <= 3 (doubled <= 6).
    let mut cache = oracles::CgCache::new();
    let mut sixj_matched = true;
    let mut sixj_checked = 0u64;
    let range: Vec<HalfInt> = (0..=6).map(HalfInt::from_twice).collect();
    for &j1 in &range {
        for &j2 in &range {
            for &j3 in &range {
                for &j4 in &range {
                    for &j5 in &range {
                        for &j6 in &range {
                            let key = SixJKey::new(j1, j2, j3, j4, j5, j6);
                            let value = wigner_6j(&key);
                            let valid = [
                                (j1, j2, j3),
                                (j1, j5, j6),
                                (j4, j2, j6),
                                (j4, j5, j3),
                            ]
                            .iter()
                            .all(|&(a, b, c)| triangle(a, b, c));
                            if valid {
                                sixj_checked += 1;
                                if value != oracles::wigner_6j_by_contraction(&key, &mut cache) {
                                    sixj_matched = false;
                                }
                            } else if !value.is_zero() {
                                sixj_matched = false;
                            }
                        }
                    }
                }
            }
        }
    }
    cases.push(CaseResult::from_exact(
        "angular_sixj_contraction_entries_le_3",
        json!({"valid_keys": sixj_checked}),
        sixj_matched,
    ));

    // The tabulated closed forms of the B(+/-) lowering elements,
    // including the l = 0 vanishing channels and the n = 1 shell.
    for n in 1..=n_max.max(1) {
        for l in 0..n {
            for branch in [Branch::Plus, Branch::Minus] {
                let mut matched = true;
                for l_prime in 0..=n {
                    let implemented =
                        b_minus_element(n, l_prime, l, branch).expect("valid labels");
                    if implemented != lowering_closed_form(n, l_prime, l, branch) {
                        matched = false;
                    }
                    if implemented != oracles::b_minus_direct(n, l_prime, l, branch) {
                        matched = false;
                    }
                }
                cases.push(CaseResult::from_exact(
                    format!(
                        "angular_closed_forms_n{}_l{}_{}",
                        n,
                        l,
                        match branch {
                            Branch::Plus => "plus",
                            Branch::Minus => "minus",
                        }
                    ),
                    json!({"n": n, "l": l}),
                    matched,
                ));
            }
        }
    }

    cases
}

fn triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a + b + c).is_integer()
        && (a + b - c).twice() >= 0
        && (b + c - a).twice() >= 0
        && (c + a - b).twice() >= 0
}

/// The closed forms of the B(+/-) lowering matrix elements.
fn lowering_closed_form(n: u32, l_prime: u32, l: u32, branch: Branch) -> Surd {
    let n = i64::from(n);
    let l_i = i64::from(l);
    let lp = i64::from(l_prime);
    let sign = |s: Surd| match branch {
        Branch::Plus => s,
        Branch::Minus => s.neg(),
    };
    if lp == l_i - 1 {
        sign(Surd::sqrt_rational(&ratio(l_i * (n * n - l_i * l_i), 2 * (2 * l_i + 1))).neg())
    } else if lp == l_i + 1 {
        sign(Surd::sqrt_rational(&ratio(
            n * n - (l_i + 1) * (l_i + 1),
            2 * (2 * l_i + 1) * (2 * l_i + 3),
        )))
    } else if lp == l_i {
        Surd::sqrt_rational(&ratio(l_i, 2))
    } else {
        Surd::zero()
    }
}

pub fn coulomb_suite(tol_override: Option<f64>) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    let tol_recursion = tol_override.unwrap_or(1e-8);
    let tol_bessel = tol_override.unwrap_or(1e-10);
    let tol_ode = tol_override.unwrap_or(1e-5);

    // eta = 0 reduction to rho * j_l(rho).
    for l in 0..=5u32 {
        let mut worst: f64 = 0.0;
        let mut rho = 0.2;
        while rho <= 10.0 {
            let value = coulomb_f(&CoulombParams::new(l, 0.0, rho).expect("inside box"))
                .expect("series converges");
            worst = worst.max((value.f - rho_times_spherical_bessel(l, rho)).abs());
            rho += 0.2;
        }
        cases.push(CaseResult::from_residual(
            format!("coulomb_bessel_reduction_l{}", l),
            json!({"l": l, "eta": 0.0}),
            worst,
            tol_bessel,
        ));
    }

    // Recursion relations and the series' own ODE over the sample box.
    for l in 0..=5u32 {
        for eta in ETA_SAMPLES {
            let mut worst_recursion: f64 = 0.0;
            let mut worst_ode: f64 = 0.0;
            for rho in RHO_SAMPLES {
                let r = recursion_residual(l, eta, rho).expect("inside box");
                if let Some(down) = r.down {
                    worst_recursion = worst_recursion.max(down.abs());
                }
                worst_recursion = worst_recursion.max(r.up.abs());
                let p = CoulombParams::new(l, eta, rho).expect("inside box");
                worst_ode = worst_ode.max(series_ode_residual(&p).expect("series converges").abs());
            }
            cases.push(CaseResult::from_residual(
                format!("coulomb_recursion_l{}_eta{}", l, eta),
                json!({"l": l, "eta": eta}),
                worst_recursion,
                tol_recursion,
            ));
            cases.push(CaseResult::from_residual(
                format!("coulomb_series_ode_l{}_eta{}", l, eta),
                json!({"l": l, "eta": eta}),
                worst_ode,
                tol_recursion,
            ));
        }
    }

    // Continuum radial equation by finite differences, h = 1e-3.
    for (l, nu, x) in [
        (0u32, 1.0, 2.0),
        (0, 1.0, 4.0),
        (1, 1.0, 2.5),
        (2, 2.0, 4.0),
        (3, 2.0, 6.0),
    ] {
        let residual = continuum_ode_residual(l, nu, x, 1e-3).expect("inside box");
        cases.push(CaseResult::from_residual(
            format!("coulomb_continuum_ode_l{}_nu{}_x{}", l, nu, x),
            json!({"l": l, "nu": nu, "x": x, "h": 1e-3}),
            residual,
            tol_ode,
        ));
    }

    // Small-rho limit F/rho -> C_0(eta); first-order margin |eta| rho.
    let rho = 1e-4;
    let c0 = (2.0 * std::f64::consts::PI / (1.0 - (-2.0 * std::f64::consts::PI).exp())).sqrt();
    let value = coulomb_f(&CoulombParams::new(0, -1.0, rho).expect("inside box"))
        .expect("series converges");
    cases.push(CaseResult::from_residual(
        "coulomb_normalizer_limit_eta-1",
        json!({"l": 0, "eta": -1.0, "rho": rho}),
        (value.f / rho - c0).abs(),
        2.0 * rho * c0,
    ));

    // Detector sanity: scaling F_l by 1.01 must break the recursion.
    let (l, eta, rho) = (1u32, -1.0, 2.0);
    let here = coulomb_f(&CoulombParams::new(l, eta, rho).expect("inside box"))
        .expect("series converges");
    let below = coulomb_f(&CoulombParams::new(l - 1, eta, rho).expect("inside box"))
        .expect("series converges");
    let l_f = f64::from(l);
    let broken = 1.01 * (l_f * here.f_prime + (l_f * l_f / rho + eta) * here.f)
        - (l_f * l_f + eta * eta).sqrt() * below.f;
    cases.push(CaseResult::from_exact(
        "coulomb_recursion_perturbation_detector",
        json!({"l": l, "eta": eta, "rho": rho, "scale": 1.01}),
        broken.abs() > 1e-3,
    ));

    cases
}

pub fn run_suite(name: &str, n_max: u32, tol: Option<f64>) -> Option<Vec<CaseResult>> {
    match name {
        "radial" => Some(radial_suite(n_max)),
        "shell" => Some(shell_suite(n_max, tol)),
        "angular" => Some(angular_suite(n_max)),
        "coulomb" => Some(coulomb_suite(tol)),
        "all" => {
            let mut cases = radial_suite(n_max);
            cases.extend(shell_suite(n_max, tol));
            cases.extend(angular_suite(n_max));
            cases.extend(coulomb_suite(tol));
            Some(cases)
        }
        _ => None,
    }
}
