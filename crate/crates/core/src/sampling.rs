//! Seeded generators for random polynomials and class (iii) parameters, used
//! by the property suites and handy for experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::analysis::essential_variables;
use crate::bisymmetry::ClassIIISpec;
use crate::polyring::{MultiIndex, Polynomial};
use crate::rational::Rational;

/// `num / den` with `num ∈ [-max_num, max_num]` and `den ∈ [1, max_den]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// Uniform exponent vector with total degree at most `max_deg`.
pub fn random_multi_index<R: Rng + ?Sized>(rng: &mut R, arity: usize, max_deg: u32) -> MultiIndex {
    let target = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; arity];
    for _ in 0..target {
        e[rng.gen_range(0..arity)] += 1;
    }
    MultiIndex::new(e)
}

/// Up to `max_terms` random terms of total degree `≤ max_deg` with integer
/// coefficients in `[-max_coeff, max_coeff]`.
pub fn random_polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    arity: usize,
    max_deg: u32,
    max_coeff: i64,
    max_terms: usize,
) -> Polynomial {
    let count = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let alpha = random_multi_index(rng, arity, max_deg);
            (alpha, Rational::from_int(rng.gen_range(-max_coeff..=max_coeff)))
        })
        .collect();
    Polynomial::from_terms(arity, terms).expect("uniform arity")
}

/// Random `(a, b, α)` with `a ≠ 0` rational, `b` rational, arity in
/// `1..=max_arity` and `1 ≤ |α| ≤ max_total`.
pub fn random_class_iii_spec<R: Rng + ?Sized>(
    rng: &mut R,
    max_arity: usize,
    max_total: u32,
) -> ClassIIISpec {
    let arity = rng.gen_range(1..=max_arity);
    let mut alpha = random_multi_index(rng, arity, max_total);
    if alpha.is_zero() {
        let mut e = alpha.exponents().to_vec();
        e[rng.gen_range(0..arity)] = 1;
        alpha = MultiIndex::new(e);
    }
    let a = loop {
        let a = random_rational(rng, 5, 4);
        if !a.is_zero() {
            break a;
        }
    };
    ClassIIISpec::new(a, random_rational(rng, 5, 4), alpha).expect("a is nonzero")
}

/// `a_0 + Σ a_i x_i` with random rational coefficients.
pub fn random_affine<R: Rng + ?Sized>(rng: &mut R, arity: usize) -> Polynomial {
    let mut terms = vec![(MultiIndex::zeros(arity), random_rational(rng, 9, 5))];
    for i in 0..arity {
        terms.push((MultiIndex::unit(arity, i), random_rational(rng, 9, 5)));
    }
    Polynomial::from_terms(arity, terms).expect("uniform arity")
}

/// A homogeneous polynomial of degree `deg ≥ 2` with at least two terms and
/// at least two essential variables.
pub fn random_homogeneous<R: Rng + ?Sized>(
    rng: &mut R,
    arity: usize,
    deg: u32,
    max_coeff: i64,
) -> Polynomial {
    assert!(arity >= 2 && deg >= 2);
    loop {
        let count = rng.gen_range(2..=5);
        let terms: Vec<_> = (0..count)
            .map(|_| {
                let mut e = vec![0u32; arity];
                for _ in 0..deg {
                    e[rng.gen_range(0..arity)] += 1;
                }
                let c = loop {
                    let c = rng.gen_range(-max_coeff..=max_coeff);
                    if c != 0 {
                        break c;
                    }
                };
                (MultiIndex::new(e), Rational::from_int(c))
            })
            .collect();
        let p = Polynomial::from_terms(arity, terms).expect("uniform arity");
        if p.len() >= 2 && essential_variables(&p).len() >= 2 {
            return p;
        }
    }
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    sigma
}
