//! Explicit matrices of the angular momentum L and the scaled
//! Runge-Lenz vector A' on each degenerate shell, built from two
//! commuting spin-b algebras B(+) = J (x) 1 and B(-) = 1 (x) J with
//! b = (n-1)/2, then conjugated into the coupled |l, m> basis by the
//! Clebsch-Gordan unitary.
//!
//! Exactness lives in the `angular` and `radial` modules; this module is
//! the numerical cross-check, so matrices are complex double precision
//! with tight tolerances (default 1e-10, scaled by dim * 1e-13 for large
//! shells). The coupled basis is ordered by ascending l, then ascending
//! m, so fixtures are reproducible bit-for-bit across runs.

mod matrix;

pub use matrix::DenseMatrix;

use num_complex::Complex64;
use thiserror::Error;

use crate::angular::{clebsch_gordan, CouplingKey};
use crate::exact::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellError {
    #[error("invalid shell labels: {0}")]
    InvalidLabels(String),
}

/// Default residual tolerance for a shell of the given dimension.
pub fn default_tolerance(dim: usize) -> f64 {
    (dim as f64 * 1e-13).max(1e-10)
}

/// The six generator matrices on one degenerate shell, in the coupled
/// |l, m> basis.
#[derive(Debug, Clone)]
pub struct ShellOperators {
    n: u32,
    /// [L_x, L_y, L_z]
    l: [DenseMatrix; 3],
    /// [A'_x, A'_y, A'_z]
    a_prime: [DenseMatrix; 3],
    /// B(+) and B(-) kept for the commutation checks in B-form.
    b_plus: [DenseMatrix; 3],
    b_minus: [DenseMatrix; 3],
    /// (l, m) labels, ascending l then ascending m.
    basis: Vec<(u32, i64)>,
    /// Unitary from the product basis |m+, m-> to the coupled basis.
    cg_transform: DenseMatrix,
}

/// Named maximum-entry residuals of the operator identities on one
/// shell; all in hbar = 1 units.
#[derive(Debug, Clone, Copy)]
pub struct AlgebraReport {
    pub n: u32,
    pub dim: usize,
    /// [L_i, L_j] - i eps_ijk L_k
    pub l_commutators: f64,
    /// [L_i, A'_j] - i eps_ijk A'_k
    pub la_commutators: f64,
    /// [A'_i, A'_j] - i eps_ijk L_k
    pub aa_commutators: f64,
    /// [B(+)_i, B(+)_j] - i eps_ijk B(+)_k
    pub b_plus_commutators: f64,
    /// [B(-)_i, B(-)_j] - i eps_ijk B(-)_k
    pub b_minus_commutators: f64,
    /// [B(+)_i, B(-)_j]
    pub b_cross_commutators: f64,
    /// L . A'
    pub l_dot_a: f64,
    /// A' . L
    pub a_dot_l: f64,
    /// A'^2 + L^2 - (n^2 - 1) I, full matrix
    pub casimir: f64,
    /// diagonal of A'^2 + L^2 against n^2 - 1
    pub casimir_diagonal: f64,
    /// max over the six generators of |M - M^dagger|
    pub hermiticity: f64,
}

impl AlgebraReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.l_commutators,
            self.la_commutators,
            self.aa_commutators,
            self.b_plus_commutators,
            self.b_minus_commutators,
            self.b_cross_commutators,
            self.l_dot_a,
            self.a_dot_l,
            self.casimir,
            self.casimir_diagonal,
            self.hermiticity,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn named(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("l_commutators", self.l_commutators),
            ("la_commutators", self.la_commutators),
            ("aa_commutators", self.aa_commutators),
            ("b_plus_commutators", self.b_plus_commutators),
            ("b_minus_commutators", self.b_minus_commutators),
            ("b_cross_commutators", self.b_cross_commutators),
            ("l_dot_a", self.l_dot_a),
            ("a_dot_l", self.a_dot_l),
            ("casimir", self.casimir),
            ("casimir_diagonal", self.casimir_diagonal),
            ("hermiticity", self.hermiticity),
        ]
    }
}

/// Projections of A_- |n, l, l> onto the three reachable channels, in
/// the dimensionless normalization where the physical element is
/// (Z/(n a0)) times these values:
///   c_up   -> <n, l+1, l-1|, expected  sqrt(2(n^2-(l+1)^2)/((2l+1)(2l+3)))
///   c_down -> <n, l-1, l-1|, expected -sqrt(2l(n^2-l^2)/(2l+1)), None at l = 0
///   c_same -> <n, l,   l-1|, expected 0, zero when the target is absent
#[derive(Debug, Clone, Copy)]
pub struct AMinusElements {
    pub c_up: Complex64,
    pub c_down: Option<Complex64>,
    pub c_same: Complex64,
}

fn spin_matrices(b: HalfInt) -> [DenseMatrix; 3] {
    let dim = (b.twice() + 1) as usize;
    let ms: Vec<HalfInt> = b.projections().collect();
    let mut jz = DenseMatrix::zeros(dim);
    let mut jp = DenseMatrix::zeros(dim);
    for (i, &m) in ms.iter().enumerate() {
        jz[(i, i)] = Complex64::new(m.to_f64(), 0.0);
        if i + 1 < dim {
            // <m+1| J_+ |m> = sqrt((b - m)(b + m + 1))
            let p = (b - m).as_integer().unwrap() as f64;
            let q = (b + m).as_integer().unwrap() as f64 + 1.0;
            jp[(i + 1, i)] = Complex64::new((p * q).sqrt(), 0.0);
        }
    }
    let jm = jp.adjoint();
    let jx = jp.add(&jm).scale(Complex64::new(0.5, 0.0));
    let jy = jp.sub(&jm).scale(Complex64::new(0.0, -0.5));
    [jx, jy, jz]
}

/// Builds the generator matrices on the shell with principal quantum
/// number n.
pub fn build_shell(n: u32) -> Result<ShellOperators, ShellError> {
    if n < 1 {
        return Err(ShellError::InvalidLabels("n must be >= 1".into()));
    }
    let b = HalfInt::from_twice(i64::from(n) - 1);
    let spin_dim = n as usize;
    let dim = spin_dim * spin_dim;
    let j = spin_matrices(b);
    let eye = DenseMatrix::identity(spin_dim);

    let b_plus: [DenseMatrix; 3] = [j[0].kron(&eye), j[1].kron(&eye), j[2].kron(&eye)];
    let b_minus: [DenseMatrix; 3] = [eye.kron(&j[0]), eye.kron(&j[1]), eye.kron(&j[2])];

    // Coupled basis (l, m), ascending l then ascending m.
    let mut basis = Vec::with_capacity(dim);
    for l in 0..n {
        for m in -i64::from(l)..=i64::from(l) {
            basis.push((l, m));
        }
    }

    // Product basis (m+, m-), m+ outer (matching the Kronecker order).
    let ms: Vec<HalfInt> = b.projections().collect();
    let mut cg_transform = DenseMatrix::zeros(dim);
    for (row, &(l, m)) in basis.iter().enumerate() {
        for (i, &m1) in ms.iter().enumerate() {
            for (k, &m2) in ms.iter().enumerate() {
                let key = CouplingKey::new(
                    b,
                    m1,
                    b,
                    m2,
                    HalfInt::from_int(i64::from(l)),
                    HalfInt::from_int(m),
                )
                .expect("consistent coupling sector");
                let value = clebsch_gordan(&key);
                if !value.is_zero() {
                    cg_transform[(row, i * spin_dim + k)] = Complex64::new(value.to_f64(), 0.0);
                }
            }
        }
    }

    let conjugate =
        |m: &DenseMatrix| -> DenseMatrix { cg_transform.mul(m).mul(&cg_transform.adjoint()) };

    let to_coupled =
        |trip: &[DenseMatrix; 3]| -> [DenseMatrix; 3] {
            [conjugate(&trip[0]), conjugate(&trip[1]), conjugate(&trip[2])]
        };

    let b_plus_c = to_coupled(&b_plus);
    let b_minus_c = to_coupled(&b_minus);
    let l_ops = [
        b_plus_c[0].add(&b_minus_c[0]),
        b_plus_c[1].add(&b_minus_c[1]),
        b_plus_c[2].add(&b_minus_c[2]),
    ];
    let a_ops = [
        b_plus_c[0].sub(&b_minus_c[0]),
        b_plus_c[1].sub(&b_minus_c[1]),
        b_plus_c[2].sub(&b_minus_c[2]),
    ];

    let ops = ShellOperators {
        n,
        l: l_ops,
        a_prime: a_ops,
        b_plus: b_plus_c,
        b_minus: b_minus_c,
        basis,
        cg_transform,
    };

    debug_assert!(ops.unitarity_residual() < 1e-12);
    debug_assert!(ops.lz_diagonal_residual() < 1e-12);
    Ok(ops)
}

fn cross_residual(trip: &[DenseMatrix; 3], target: &[DenseMatrix; 3]) -> f64 {
    // [T_x, T_y] = i U_z and cyclic.
    let mut worst: f64 = 0.0;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let lhs = trip[i].commutator(&trip[j]);
        let rhs = target[k].scale(Complex64::new(0.0, 1.0));
        worst = worst.max(lhs.sub(&rhs).max_abs());
    }
    worst
}

fn dot(a: &[DenseMatrix; 3], b: &[DenseMatrix; 3]) -> DenseMatrix {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

impl ShellOperators {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(u32, i64)] {
        &self.basis
    }

    pub fn l_matrices(&self) -> &[DenseMatrix; 3] {
        &self.l
    }

    pub fn a_prime_matrices(&self) -> &[DenseMatrix; 3] {
        &self.a_prime
    }

    pub fn cg_transform(&self) -> &DenseMatrix {
        &self.cg_transform
    }

    /// |U U^dagger - 1|, residual of the coupled-basis unitary.
    pub fn unitarity_residual(&self) -> f64 {
        let dim = self.dim();
        self.cg_transform
            .mul(&self.cg_transform.adjoint())
            .sub(&DenseMatrix::identity(dim))
            .max_abs()
    }

    /// L_z in the coupled basis must be diagonal with entries m.
    pub fn lz_diagonal_residual(&self) -> f64 {
        let mut residual = DenseMatrix::zeros(self.dim());
        for (r, &(_, m)) in self.basis.iter().enumerate() {
            for c in 0..self.dim() {
                let expected = if r == c {
                    Complex64::new(m as f64, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                residual[(r, c)] = self.l[2][(r, c)] - expected;
            }
        }
        residual.max_abs()
    }

    /// Runs every operator-identity check and reports the named
    /// residuals.
    pub fn algebra_residuals(&self) -> AlgebraReport {
        let dim = self.dim();
        let casimir_target = (i64::from(self.n) * i64::from(self.n) - 1) as f64;
        let casimir_matrix = dot(&self.a_prime, &self.a_prime)
            .add(&dot(&self.l, &self.l))
            .sub(&DenseMatrix::identity(dim).scale(Complex64::new(casimir_target, 0.0)));
        let casimir_diagonal = (0..dim)
            .map(|i| casimir_matrix[(i, i)].norm())
            .fold(0.0, f64::max);

        let mut b_cross: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                b_cross = b_cross.max(self.b_plus[i].commutator(&self.b_minus[j]).max_abs());
            }
        }

        let hermiticity = self
            .l
            .iter()
            .chain(self.a_prime.iter())
            .map(DenseMatrix::hermiticity_residual)
            .fold(0.0, f64::max);

        AlgebraReport {
            n: self.n,
            dim,
            l_commutators: cross_residual(&self.l, &self.l),
            la_commutators: cross_residual_mixed(&self.l, &self.a_prime),
            aa_commutators: cross_residual(&self.a_prime, &self.l),
            b_plus_commutators: cross_residual(&self.b_plus, &self.b_plus),
            b_minus_commutators: cross_residual(&self.b_minus, &self.b_minus),
            b_cross_commutators: b_cross,
            l_dot_a: dot(&self.l, &self.a_prime).max_abs(),
            a_dot_l: dot(&self.a_prime, &self.l).max_abs(),
            casimir: casimir_matrix.max_abs(),
            casimir_diagonal,
            hermiticity,
        }
    }

    fn basis_index(&self, l: u32, m: i64) -> Option<usize> {
        self.basis.iter().position(|&(bl, bm)| bl == l && bm == m)
    }

    /// Coupled-basis column vector for |l, m>.
    fn basis_vector(&self, l: u32, m: i64) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); self.dim()];
        let idx = self.basis_index(l, m).expect("state inside the shell");
        v[idx] = Complex64::new(1.0, 0.0);
        v
    }

    /// A'_x - i A'_y, the lowering combination of the scaled Runge-Lenz
    /// vector.
    pub fn a_minus_matrix(&self) -> DenseMatrix {
        self.a_prime[0].sub(&self.a_prime[1].scale(Complex64::new(0.0, 1.0)))
    }

    /// A'_x + i A'_y.
    pub fn a_plus_matrix(&self) -> DenseMatrix {
        self.a_prime[0].add(&self.a_prime[1].scale(Complex64::new(0.0, 1.0)))
    }

    /// Applies A_- to |n, l, l> and projects onto the three channels of
    /// the master formula.
    pub fn a_minus_elements(&self, l: u32) -> Result<AMinusElements, ShellError> {
        if l > self.n - 1 {
            return Err(ShellError::InvalidLabels(format!(
                "l = {} exceeds n - 1 = {}",
                l,
                self.n - 1
            )));
        }
        let image = self.a_minus_matrix().apply(&self.basis_vector(l, i64::from(l)));
        let project = |l_target: i64, m_target: i64| -> Option<Complex64> {
            if l_target < 0 || l_target > i64::from(self.n) - 1 || m_target.abs() > l_target {
                return None;
            }
            self.basis_index(l_target as u32, m_target).map(|i| image[i])
        };
        let l = i64::from(l);
        Ok(AMinusElements {
            c_up: project(l + 1, l - 1).unwrap_or(Complex64::new(0.0, 0.0)),
            c_down: project(l - 1, l - 1),
            c_same: project(l, l - 1).unwrap_or(Complex64::new(0.0, 0.0)),
        })
    }

    /// Norms of A_- |n, n-1, -(n-1)> and A_+ |n, n-1, n-1>; both must
    /// vanish to roundoff.
    pub fn annihilation_check(&self) -> (f64, f64) {
        let top = i64::from(self.n) - 1;
        let minus_image = self
            .a_minus_matrix()
            .apply(&self.basis_vector(self.n - 1, -top));
        let plus_image = self
            .a_plus_matrix()
            .apply(&self.basis_vector(self.n - 1, top));
        let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        (norm(&minus_image), norm(&plus_image))
    }
}

/// [L_i, A'_j] = i eps_ijk A'_k for all nine index pairs, not just the
/// cyclic ones.
fn cross_residual_mixed(l: &[DenseMatrix; 3], a: &[DenseMatrix; 3]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let lhs = l[i].commutator(&a[j]);
            let mut rhs = DenseMatrix::zeros(l[0].dim());
            for (k, a_k) in a.iter().enumerate() {
                let eps = levi_civita(i, j, k);
                if eps != 0.0 {
                    rhs = rhs.add(&a_k.scale(Complex64::new(0.0, eps)));
                }
            }
            worst = worst.max(lhs.sub(&rhs).max_abs());
        }
    }
    worst
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::{b_minus_element, Branch};

    #[test]
    fn ground_shell_is_trivial() {
        let s = build_shell(1).unwrap();
        assert_eq!(s.dim(), 1);
        for m in s.l_matrices().iter().chain(s.a_prime_matrices()) {
            assert_eq!(m.max_abs(), 0.0);
        }
        let report = s.algebra_residuals();
        assert_eq!(report.max_residual(), 0.0);
        assert_eq!(s.annihilation_check(), (0.0, 0.0));
    }

    #[test]
    fn n2_lz_spectrum() {
        let s = build_shell(2).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.basis(), &[(0, 0), (1, -1), (1, 0), (1, 1)]);
        let lz = &s.l_matrices()[2];
        let expected = [0.0, -1.0, 0.0, 1.0];
        for (i, &m) in expected.iter().enumerate() {
            assert!((lz[(i, i)].re - m).abs() < 1e-14);
        }
        assert!(s.lz_diagonal_residual() < 1e-14);
    }

    #[test]
    fn n3_l_squared_blocks() {
        let s = build_shell(3).unwrap();
        let l2 = dot(s.l_matrices(), s.l_matrices());
        for (i, &(l, _)) in s.basis().iter().enumerate() {
            let expected = (l * (l + 1)) as f64;
            assert!((l2[(i, i)].re - expected).abs() < 1e-12);
            for j in 0..s.dim() {
                if j != i {
                    assert!(l2[(i, j)].norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn generators_are_hermitian() {
        for n in 1..=6u32 {
            let s = build_shell(n).unwrap();
            for m in s.l_matrices().iter().chain(s.a_prime_matrices()) {
                assert!(m.hermiticity_residual() < 1e-13, "n = {}", n);
            }
        }
    }

    #[test]
    fn algebra_residuals_are_roundoff() {
        for n in 1..=6u32 {
            let report = build_shell(n).unwrap().algebra_residuals();
            assert!(
                report.max_residual() < default_tolerance((n * n) as usize),
                "n = {}: {:?}",
                n,
                report
            );
        }
    }

    #[test]
    fn casimir_trace_n3() {
        let s = build_shell(3).unwrap();
        let sum = dot(s.a_prime_matrices(), s.a_prime_matrices())
            .add(&dot(s.l_matrices(), s.l_matrices()));
        assert!((sum.trace().re / 9.0 - 8.0).abs() < 1e-12);
    }

    #[test]
    fn master_formula_channels() {
        let s2 = build_shell(2).unwrap();
        let e = s2.a_minus_elements(1).unwrap();
        assert!((e.c_down.unwrap().re + 2.0f64.sqrt()).abs() < 1e-12);
        assert!(e.c_up.norm() < 1e-12);
        assert!(e.c_same.norm() < 1e-12);

        let e = s2.a_minus_elements(0).unwrap();
        assert!((e.c_up.re - 2.0f64.sqrt()).abs() < 1e-12);
        assert!(e.c_down.is_none());
        assert!(e.c_same.norm() < 1e-12);

        let s3 = build_shell(3).unwrap();
        let e = s3.a_minus_elements(1).unwrap();
        assert!((e.c_up.re - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((e.c_down.unwrap().re + (16.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!(e.c_same.norm() < 1e-12);
    }

    #[test]
    fn matrix_elements_match_closed_forms() {
        // The matrix construction and the Wigner-Eckart closed forms are
        // independent computations; c(l') = B(+) - B(-) elements.
        for n in 1..=6u32 {
            let s = build_shell(n).unwrap();
            for l in 0..n {
                let e = s.a_minus_elements(l).unwrap();
                let expect = |lp: u32| -> f64 {
                    let plus = b_minus_element(n, lp, l, Branch::Plus).unwrap();
                    let minus = b_minus_element(n, lp, l, Branch::Minus).unwrap();
                    plus.sub(&minus).map(|d| d.to_f64()).unwrap_or_else(|_| {
                        plus.to_f64() - minus.to_f64()
                    })
                };
                if l < n - 1 {
                    assert!((e.c_up.re - expect(l + 1)).abs() < 1e-10, "n={} l={}", n, l);
                }
                if l >= 1 {
                    assert!(
                        (e.c_down.unwrap().re - expect(l - 1)).abs() < 1e-10,
                        "n={} l={}",
                        n,
                        l
                    );
                }
                assert!(e.c_same.norm() < 1e-12, "n={} l={}", n, l);
            }
        }
    }

    #[test]
    fn a_minus_connects_only_neighbor_channels() {
        for n in 2..=5u32 {
            let s = build_shell(n).unwrap();
            let a_minus = s.a_minus_matrix();
            for l in 0..n {
                let image = a_minus.apply(&s.basis_vector(l, i64::from(l)));
                for (i, &(lt, mt)) in s.basis().iter().enumerate() {
                    let allowed = mt == i64::from(l) - 1
                        && (i64::from(lt) - i64::from(l)).abs() == 1;
                    if !allowed {
                        assert!(
                            image[i].norm() < 1e-12,
                            "n={} l={} leaks into (l'={}, m={})",
                            n,
                            l,
                            lt,
                            mt
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn annihilation_on_stretched_states() {
        for n in [2u32, 5] {
            let (down, up) = build_shell(n).unwrap().annihilation_check();
            assert!(down < 1e-12 && up < 1e-12, "n = {}", n);
        }
    }

    #[test]
    fn invalid_labels() {
        assert!(build_shell(0).is_err());
        assert!(build_shell(2).unwrap().a_minus_elements(2).is_err());
    }
}
