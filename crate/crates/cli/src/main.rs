//! rlz: generate exact hydrogen radial wavefunctions, print the bound
//! spectrum, sweep Coulomb functions, and run the verification suites
//! with machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data
//! error (malformed grid or out-of-domain evaluation).

use runge_lenz_cli::{render, report, suites};

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use runge_lenz::radial::{generate_shell, RadialWaveFunction};
use runge_lenz::spectrum::{energy_level, shell_structure, PhysicalScales};

use render::{
    coulomb_sweep, coulomb_to_csv, coulomb_to_json, parse_grid, rational_decimal,
    rational_string, sample_to_csv, state_to_json, states_to_csv, states_to_latex,
};
use report::VerificationReport;

#[derive(Parser)]
#[command(
    name = "rlz",
    version,
    about = "Exact hydrogen wavefunctions from Runge-Lenz ladder recursions, with verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Radial,
    Shell,
    Angular,
    Coulomb,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Radial => "radial",
            Suite::Shell => "shell",
            Suite::Angular => "angular",
            Suite::Coulomb => "coulomb",
            Suite::All => "all",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact R_nl coefficients, or sampled values on a grid.
    Generate {
        /// Principal quantum number.
        #[arg(long)]
        n: u32,
        /// Angular momentum; omitted = every l on the shell.
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Sample grid "start:stop:step" in x = Zr/a0; emits CSV of
        /// (x, R_nl(x)). Requires --l.
        #[arg(long)]
        grid: Option<String>,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound-state energies -Z^2/n^2 in Rydberg, with degeneracies.
    Spectrum {
        #[arg(long, value_name = "N")]
        n_max: u32,
        #[arg(long, default_value = "1")]
        z: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_name = "N", default_value = "6")]
        n_max: u32,
        /// Override the per-case tolerance of floating-point checks.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the regular Coulomb function and its recursion residuals
    /// over a rho grid.
    Coulomb {
        #[arg(long)]
        l: u32,
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        /// Grid "start:stop:step" in rho.
        #[arg(long, value_name = "GRID")]
        rho_grid: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// exit 2
    Usage(String),
    /// exit 3
    Data(String),
    /// exit 1
    VerificationFailed,
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Data(format!("cannot write {}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn cmd_generate(
    n: u32,
    l: Option<u32>,
    format: Format,
    grid: Option<String>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    if n < 1 {
        return Err(CliError::Usage("n must satisfy n >= 1".into()));
    }
    if let Some(l) = l {
        if l > n - 1 {
            return Err(CliError::Usage(format!(
                "l must satisfy 0 <= l <= n-1, got l = {} for n = {}",
                l, n
            )));
        }
    }
    let shell = generate_shell(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let selected: Vec<&RadialWaveFunction> = match l {
        Some(l) => vec![&shell[(n - 1 - l) as usize]],
        None => shell.iter().collect(),
    };

    if let Some(spec) = grid {
        let Some(l) = l else {
            return Err(CliError::Usage("--grid requires --l".into()));
        };
        let points = parse_grid(&spec).map_err(CliError::Data)?;
        let state = &shell[(n - 1 - l) as usize];
        let csv = sample_to_csv(state, &points).map_err(CliError::Data)?;
        return emit(&out, &csv);
    }

    let text = match format {
        Format::Json => {
            let values: Vec<_> = selected.iter().map(|s| state_to_json(s)).collect();
            let doc = if values.len() == 1 {
                values.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(values)
            };
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        Format::Csv => states_to_csv(&selected),
        Format::Latex => states_to_latex(&selected),
    };
    emit(&out, &text)
}

fn cmd_spectrum(n_max: u32, z: u32, format: Format, out: Option<PathBuf>) -> Result<(), CliError> {
    if n_max < 1 {
        return Err(CliError::Usage("n-max must satisfy n >= 1".into()));
    }
    let scales = PhysicalScales::hydrogenic(z).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let energy = energy_level(n, &scales).map_err(|e| CliError::Usage(e.to_string()))?;
        let degeneracy = shell_structure(n)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .dimension;
        rows.push((n, energy, degeneracy));
    }
    let text = match format {
        Format::Json => {
            let values: Vec<_> = rows
                .iter()
                .map(|(n, e, d)| {
                    json!({
                        "n": n,
                        "energy": rational_string(e),
                        "energy_decimal": rational_decimal(e) * scales.rydberg,
                        "degeneracy": d,
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::Value::Array(values)).unwrap()
            )
        }
        Format::Csv => {
            let mut out = String::from("n,energy,energy_decimal,degeneracy\n");
            for (n, e, d) in &rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    n,
                    rational_string(e),
                    rational_decimal(e) * scales.rydberg,
                    d
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::new();
            for (n, e, d) in &rows {
                out.push_str(&format!("{} & {} & {} \\\\\n", n, rational_string(e), d));
            }
            out
        }
    };
    emit(&out, &text)
}

fn cmd_verify(
    suite: Suite,
    n_max: u32,
    tol: Option<f64>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    if n_max < 1 {
        return Err(CliError::Usage("n-max must satisfy n >= 1".into()));
    }
    if let Some(tol) = tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(CliError::Usage("tolerance must be positive".into()));
        }
    }
    let cases = suites::run_suite(suite.name(), n_max, tol)
        .expect("suite names are validated by clap");
    let report = VerificationReport::assemble(suite.name(), cases);
    let text = format!("{}\n", serde_json::to_string_pretty(&report).unwrap());
    emit(&out, &text)?;
    eprintln!(
        "suite {}: {}/{} passed{}",
        report.suite,
        report.summary.passed,
        report.summary.total,
        report
            .summary
            .max_residual
            .map(|r| format!(", max residual {:.3e}", r))
            .unwrap_or_default()
    );
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

fn cmd_coulomb(
    l: u32,
    eta: f64,
    rho_grid: String,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let grid = parse_grid(&rho_grid).map_err(CliError::Data)?;
    let samples = coulomb_sweep(l, eta, &grid).map_err(|e| CliError::Data(e.to_string()))?;
    let text = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&coulomb_to_json(l, eta, &samples)).unwrap()
        ),
        Format::Csv => coulomb_to_csv(&samples),
        Format::Latex => {
            return Err(CliError::Usage(
                "latex output is not defined for coulomb sweeps".into(),
            ))
        }
    };
    emit(&out, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            n,
            l,
            format,
            grid,
            out,
        } => cmd_generate(n, l, format, grid, out),
        Command::Spectrum {
            n_max,
            z,
            format,
            out,
        } => cmd_spectrum(n_max, z, format, out),
        Command::Verify {
            suite,
            n_max,
            tol,
            out,
        } => cmd_verify(suite, n_max, tol, out),
        Command::Coulomb {
            l,
            eta,
            rho_grid,
            format,
            out,
        } => cmd_coulomb(l, eta, rho_grid, format, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}
