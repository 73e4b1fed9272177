//! Exact hydrogen bound-state radial wavefunctions generated from the
//! Runge-Lenz ladder recursions, together with the machinery to verify
//! them: exact Clebsch-Gordan and Wigner 6-j algebra, explicit SO(4)
//! generator matrices on each degenerate shell, and positive-energy
//! Coulomb-function recursion checks.
//!
//! Internal conventions: hbar = 1, a0 = 1, energies in Rydberg, and the
//! dimensionless radial variable x = Zr/a0 throughout. Exactness is kept
//! in the `exact`, `angular`, `spectrum` and `radial` modules; `shell`
//! and `coulomb` are floating-point cross-checks with tight tolerances.

pub mod angular;
pub mod coulomb;
pub mod exact;
pub mod radial;
pub mod shell;
pub mod spectrum;
