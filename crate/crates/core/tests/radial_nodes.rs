//! Radial node structure: the polynomial factor of R_nl must have
//! exactly n - l - 1 positive real roots. Counted exactly with a Sturm
//! chain over the rationals, which is stronger than a numerical count.

use num_traits::Zero;
use runge_lenz::exact::{BigRational, Polynomial};
use runge_lenz::radial::generate_shell;

fn leading(p: &Polynomial) -> BigRational {
    p.coeff(p.degree().expect("nonzero polynomial"))
}

/// Remainder of a by b over the rationals.
fn poly_rem(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut r = a.clone();
    let db = b.degree().expect("division by zero polynomial");
    let lb = leading(b);
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let factor = Polynomial::monomial(dr - db, r.coeff(dr) / lb.clone());
        r = r.sub(&factor.mul(b));
    }
    r
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let len = chain.len();
        if chain[len - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[len - 1].degree() == Some(0) {
            break;
        }
        let rem = poly_rem(&chain[len - 2], &chain[len - 1]);
        if rem.is_zero() {
            break;
        }
        chain.push(rem.scale(&BigRational::from_integer((-1).into())));
    }
    chain
}

fn sign_at_zero_plus(p: &Polynomial) -> i8 {
    match p.order() {
        None => 0,
        Some(k) => {
            if p.coeff(k) > BigRational::zero() {
                1
            } else {
                -1
            }
        }
    }
}

fn sign_at_infinity(p: &Polynomial) -> i8 {
    match p.degree() {
        None => 0,
        Some(_) => {
            if leading(p) > BigRational::zero() {
                1
            } else {
                -1
            }
        }
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct roots in (0, inf) by Sturm's theorem.
fn positive_roots(p: &Polynomial) -> usize {
    let chain = sturm_chain(p);
    let at_zero = sign_variations(chain.iter().map(sign_at_zero_plus));
    let at_inf = sign_variations(chain.iter().map(sign_at_infinity));
    at_zero - at_inf
}

#[test]
fn sturm_counter_sanity() {
    // (x - 1)(x - 2) has two positive roots
    let p = Polynomial::new(vec![
        BigRational::from_integer(2.into()),
        BigRational::from_integer((-3).into()),
        BigRational::from_integer(1.into()),
    ]);
    assert_eq!(positive_roots(&p), 2);
    // x^2 + 1 has none
    let q = Polynomial::new(vec![
        BigRational::from_integer(1.into()),
        BigRational::zero(),
        BigRational::from_integer(1.into()),
    ]);
    assert_eq!(positive_roots(&q), 0);
}

#[test]
fn node_counts_match_n_minus_l_minus_1() {
    for n in 1..=8u32 {
        for state in generate_shell(n).unwrap() {
            let l = state.l();
            let factor = state
                .poly()
                .shifted_down(l as usize)
                .expect("poly divisible by x^l");
            assert_eq!(
                positive_roots(&factor),
                (n - l - 1) as usize,
                "nodes of R_{}{}",
                n,
                l
            );
        }
    }
}
