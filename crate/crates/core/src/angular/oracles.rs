//! Independent verification routes for the coupling coefficients.
//!
//! None of these touch the Racah closed forms used by the parent module:
//! the coupled-basis table is built by explicit construction of the
//! total-J^2 eigenspaces (stretched state, exact lowering, Gram-Schmidt),
//! the 6-j oracle contracts four Clebsch-Gordan coefficients, and the
//! B(+/-) lowering elements are summed directly over the product basis.
//! They exist so the implementation and the closed forms can be checked
//! against each other, both in tests and in the `verify` suites.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use crate::exact::{BigInt, HalfInt, Surd};

use super::{clebsch_gordan, neg_one_pow, Branch, CouplingKey, SixJKey};

/// One coupled state |J M> expanded over the product basis |m1 m2>.
#[derive(Debug, Clone)]
pub struct CoupledState {
    pub j: HalfInt,
    pub m: HalfInt,
    /// (m1, m2, amplitude) with m1 + m2 = m; zero amplitudes omitted.
    pub amplitudes: Vec<(HalfInt, HalfInt, Surd)>,
}

impl CoupledState {
    pub fn amplitude(&self, m1: HalfInt, m2: HalfInt) -> Surd {
        self.amplitudes
            .iter()
            .find(|(a, b, _)| *a == m1 && *b == m2)
            .map(|(_, _, s)| s.clone())
            .unwrap_or_else(Surd::zero)
    }
}

fn sqrt_int(n: i64) -> Surd {
    Surd::sqrt_rational(&BigRational::from(BigInt::from(n)))
}

/// Ladder factor sqrt((j + m)(j - m + 1)) for J_- |j m>.
fn lowering_factor(j: HalfInt, m: HalfInt) -> Surd {
    let p = (j + m).as_integer().expect("consistent sector");
    let q = (j - m).as_integer().expect("consistent sector") + 1;
    sqrt_int(p * q)
}

type ProductVector = HashMap<(i64, i64), Surd>;

fn inner_product(u: &ProductVector, v: &ProductVector) -> Surd {
    let mut acc = Surd::zero();
    for (key, a) in u {
        if let Some(b) = v.get(key) {
            acc = acc
                .add(&a.mul(b))
                .expect("inner products stay within one surd class");
        }
    }
    acc
}

/// Builds the full coupled basis for j1 x j2 by brute force: for each
/// total J (descending), the top state |J J> is obtained by exact
/// Gram-Schmidt orthogonalization against the higher-J states in the
/// M = J subspace, with the Condon-Shortley sign fixed on the m1 = j1
/// component; the rest of the multiplet follows by exact lowering.
pub fn coupled_basis_by_construction(j1: HalfInt, j2: HalfInt) -> Vec<CoupledState> {
    assert!(!j1.is_negative() && !j2.is_negative());
    let mut states: Vec<CoupledState> = Vec::new();
    // vectors[(J, M)] -> amplitudes over the product basis
    let mut vectors: Vec<(HalfInt, HalfInt, ProductVector)> = Vec::new();

    let j_max = j1 + j2;
    let j_min = (j1 - j2).abs();
    let mut j_total = j_max;
    while j_total >= j_min {
        let mut top: ProductVector = HashMap::new();
        if j_total == j_max {
            top.insert((j1.twice(), j2.twice()), Surd::one());
        } else {
            // Candidate |j1, j_total - j1> product state, then remove the
            // components along the higher-J tops.
            let m2 = j_total - j1;
            top.insert((j1.twice(), m2.twice()), Surd::one());
            for (j_other, m_other, v) in &vectors {
                if *m_other != j_total || *j_other <= j_total {
                    continue;
                }
                let overlap = inner_product(v, &top);
                if overlap.is_zero() {
                    continue;
                }
                for (key, amp) in v {
                    let correction = overlap.mul(amp);
                    let entry = top.entry(*key).or_insert_with(Surd::zero);
                    *entry = entry
                        .sub(&correction)
                        .expect("projection stays within one surd class");
                }
            }
            let norm_sq = inner_product(&top, &top);
            debug_assert!(norm_sq.radicand().is_one());
            let norm = Surd::sqrt_rational(norm_sq.coeff());
            for amp in top.values_mut() {
                *amp = amp.div(&norm);
            }
            // Condon-Shortley: the m1 = j1 component of |J J> is positive.
            let lead = top
                .get(&(j1.twice(), m2.twice()))
                .cloned()
                .unwrap_or_else(Surd::zero);
            if !lead.is_positive() {
                for amp in top.values_mut() {
                    *amp = amp.neg();
                }
            }
        }

        let mut current = top;
        let mut m_total = j_total;
        loop {
            vectors.push((j_total, m_total, current.clone()));
            states.push(CoupledState {
                j: j_total,
                m: m_total,
                amplitudes: current
                    .iter()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(&(t1, t2), s)| {
                        (HalfInt::from_twice(t1), HalfInt::from_twice(t2), s.clone())
                    })
                    .collect(),
            });
            if m_total == -j_total {
                break;
            }
            // |J, M-1> = J_- |J, M> / sqrt((J+M)(J-M+1))
            let scale = lowering_factor(j_total, m_total);
            let mut lowered: ProductVector = HashMap::new();
            for (&(t1, t2), amp) in &current {
                let m1 = HalfInt::from_twice(t1);
                let m2 = HalfInt::from_twice(t2);
                if m1 > -j1 {
                    let contrib = amp.mul(&lowering_factor(j1, m1));
                    let entry = lowered
                        .entry((t1 - 2, t2))
                        .or_insert_with(Surd::zero);
                    *entry = entry
                        .add(&contrib)
                        .expect("lowering stays within one surd class");
                }
                if m2 > -j2 {
                    let contrib = amp.mul(&lowering_factor(j2, m2));
                    let entry = lowered
                        .entry((t1, t2 - 2))
                        .or_insert_with(Surd::zero);
                    *entry = entry
                        .add(&contrib)
                        .expect("lowering stays within one surd class");
                }
            }
            for amp in lowered.values_mut() {
                *amp = amp.div(&scale);
            }
            current = lowered;
            m_total = m_total - HalfInt::ONE;
        }

        if j_total.twice() < 2 {
            break;
        }
        j_total = j_total - HalfInt::ONE;
    }
    states
}

/// Memoizing Clebsch-Gordan evaluator for the contraction sums below.
/// The cache is owned by the caller, so there is no shared state.
#[derive(Default)]
pub struct CgCache {
    cache: HashMap<CouplingKey, Surd>,
}

impl CgCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, key: CouplingKey) -> Surd {
        self.cache
            .entry(key)
            .or_insert_with_key(clebsch_gordan)
            .clone()
    }
}

/// 6-j symbol from the recoupling contraction: a sum of products of four
/// Clebsch-Gordan coefficients at fixed total projection M = j5, divided
/// by sqrt((2 j3 + 1)(2 j6 + 1)) and the recoupling phase.
pub fn wigner_6j_by_contraction(key: &SixJKey, cg: &mut CgCache) -> Surd {
    let SixJKey {
        j1,
        j2,
        j3,
        j4,
        j5,
        j6,
    } = *key;
    let m_total = j5;

    let mut sum = Surd::zero();
    for m1 in j1.projections() {
        for m2 in j2.projections() {
            let m12 = m1 + m2;
            let m3 = m_total - m12;
            if m3.abs() > j4 {
                continue;
            }
            let m23 = m2 + m3;
            let terms = [
                CouplingKey::new(j1, m1, j2, m2, j3, m12),
                CouplingKey::new(j3, m12, j4, m3, j5, m_total),
                CouplingKey::new(j2, m2, j4, m3, j6, m23),
                CouplingKey::new(j1, m1, j6, m23, j5, m_total),
            ];
            let mut product = Surd::one();
            for term in terms {
                let Ok(k) = term else {
                    product = Surd::zero();
                    break;
                };
                product = product.mul(&cg.get(k));
                if product.is_zero() {
                    break;
                }
            }
            if !product.is_zero() {
                sum = sum
                    .add(&product)
                    .expect("contraction terms share one surd class");
            }
        }
    }
    if sum.is_zero() {
        return Surd::zero();
    }

    let dims = Surd::sqrt_rational(&BigRational::from(BigInt::from(
        (j3.twice() + 1) * (j6.twice() + 1),
    )));
    let phase = neg_one_pow((j1 + j2 + j4 + j5).as_integer().expect("valid 6-j key"));
    let mut value = sum.div(&dims);
    if phase < 0 {
        value = value.neg();
    }
    value
}

/// <n, l', l-1 | B(branch)_- | n, l, l> in units of hbar, summed directly
/// over the product basis |m+, m-> with b = (n-1)/2: a lowering factor
/// sandwiched between two Clebsch-Gordan expansions. This is the route
/// the Wigner-Eckart evaluation is checked against, and the one used for
/// the n = 1 shell.
pub fn b_minus_direct(n: u32, l_prime: u32, l: u32, branch: Branch) -> Surd {
    assert!(n >= 1 && l < n);
    let b = HalfInt::from_twice(i64::from(n) - 1);
    let l_h = HalfInt::from_int(i64::from(l));
    let lp_h = HalfInt::from_int(i64::from(l_prime));
    let m_in = l_h;
    let m_out = l_h - HalfInt::ONE;

    let mut sum = Surd::zero();
    for m_plus in b.projections() {
        let m_minus = m_in - m_plus;
        if m_minus.abs() > b {
            continue;
        }
        let ket = CouplingKey::new(b, m_plus, b, m_minus, l_h, m_in).unwrap();
        let ket_cg = clebsch_gordan(&ket);
        if ket_cg.is_zero() {
            continue;
        }
        let (bra_cg, ladder) = match branch {
            Branch::Plus => {
                let bra =
                    CouplingKey::new(b, m_plus - HalfInt::ONE, b, m_minus, lp_h, m_out).unwrap();
                (clebsch_gordan(&bra), lowering_factor(b, m_plus))
            }
            Branch::Minus => {
                let bra =
                    CouplingKey::new(b, m_plus, b, m_minus - HalfInt::ONE, lp_h, m_out).unwrap();
                (clebsch_gordan(&bra), lowering_factor(b, m_minus))
            }
        };
        let term = bra_cg.mul(&ladder).mul(&ket_cg);
        if !term.is_zero() {
            sum = sum
                .add(&term)
                .expect("product-basis sum stays within one surd class");
        }
    }
    sum
}
