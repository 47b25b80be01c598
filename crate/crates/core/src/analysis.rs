//! Structural operations on polynomials: homogeneous decomposition, Taylor
//! shifts, conjugation by translations, and the variable actions (permutation
//! and identification) under which bisymmetry is stable.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::rational::Rational;

/// `P = Σ_k P_k`, keyed by degree. Only nonzero components are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousDecomposition {
    arity: usize,
    components: BTreeMap<u32, Polynomial>,
}

impl HomogeneousDecomposition {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn components(&self) -> &BTreeMap<u32, Polynomial> {
        &self.components
    }

    /// `P_k`, or the zero polynomial when `P` has no terms of degree `k`.
    pub fn component(&self, k: u32) -> Polynomial {
        self.components
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.arity))
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.components.keys().copied()
    }

    pub fn reconstruct(&self) -> Polynomial {
        self.components
            .values()
            .fold(Polynomial::zero(self.arity), |acc, c| &acc + c)
    }
}

/// `[P]_k`: the terms of total degree exactly `k`.
pub fn homogeneous_component(p: &Polynomial, k: u32) -> Polynomial {
    let terms = p
        .terms()
        .filter(|(alpha, _)| alpha.total() == k)
        .map(|(a, c)| (a.clone(), c.clone()));
    Polynomial::from_terms(p.arity(), terms).expect("terms share the arity of p")
}

pub fn decompose(p: &Polynomial) -> HomogeneousDecomposition {
    let mut buckets: BTreeMap<u32, Vec<_>> = BTreeMap::new();
    for (alpha, c) in p.terms() {
        buckets
            .entry(alpha.total())
            .or_default()
            .push((alpha.clone(), c.clone()));
    }
    let components = buckets
        .into_iter()
        .map(|(k, terms)| {
            let comp = Polynomial::from_terms(p.arity(), terms).expect("arity preserved");
            (k, comp)
        })
        .collect();
    HomogeneousDecomposition {
        arity: p.arity(),
        components,
    }
}

/// The polynomial `x ↦ P(x + y0)`, expanded as
/// `Σ_α y0^α / α! · (∂^α P)(x)`.
///
/// The sum runs over every `α` with `α_i ≤ deg_{x_i} P`; coordinates of `y0`
/// that are zero contribute only `α_i = 0`.
pub fn taylor_shift(p: &Polynomial, y0: &[Rational]) -> Result<Polynomial> {
    if y0.len() != p.arity() {
        return Err(Error::ArityMismatch {
            expected: p.arity(),
            found: y0.len(),
        });
    }
    let mut acc = Polynomial::zero(p.arity());
    accumulate_shift(p.clone(), 0, Rational::one(), y0, &mut acc)?;
    Ok(acc)
}

// Walks the derivative tree one variable at a time. On entry `deriv` is
// `∂^α P` for the prefix of α fixed so far and `weight` is the matching
// `y0^α / α!` factor.
fn accumulate_shift(
    deriv: Polynomial,
    var: usize,
    weight: Rational,
    y0: &[Rational],
    acc: &mut Polynomial,
) -> Result<()> {
    if deriv.is_zero() {
        return Ok(());
    }
    if var == y0.len() {
        *acc = &*acc + &deriv.scale(&weight);
        return Ok(());
    }
    let shift = &y0[var];
    let mut current = deriv;
    let mut w = weight;
    let mut k: u32 = 0;
    loop {
        let next_weight = w.clone();
        accumulate_shift(current.clone(), var + 1, next_weight, y0, acc)?;
        if shift.is_zero() {
            break;
        }
        current = current.partial_derivative(var)?;
        if current.is_zero() {
            break;
        }
        k += 1;
        // y^k / k! from y^(k-1) / (k-1)!
        w = &(&w * shift) / &Rational::from_int(k);
    }
    Ok(())
}

/// Conjugation by the translation `φ_b(x) = x + b`:
/// `x ↦ P(x_1 + b, …, x_n + b) − b`.
pub fn conjugate_translate(p: &Polynomial, b: &Rational) -> Polynomial {
    let shift = vec![b.clone(); p.arity()];
    let shifted = taylor_shift(p, &shift).expect("shift vector has the arity of p");
    shifted.add_constant(&-b)
}

/// `σ(P)(x_1, …, x_n) = P(x_{σ(1)}, …, x_{σ(n)})`, with `sigma` given 0-based.
pub fn permute(p: &Polynomial, sigma: &[usize]) -> Result<Polynomial> {
    let n = p.arity();
    let mut seen = vec![false; n];
    let valid = sigma.len() == n
        && sigma
            .iter()
            .all(|&s| s < n && !std::mem::replace(&mut seen[s], true));
    if !valid {
        return Err(Error::NotAPermutation {
            sigma: sigma.to_vec(),
            arity: n,
        });
    }
    p.rename_variables(n, sigma)
}

/// Identification of variables `I_{i,j}` (0-based, `i < j`): the `(n−1)`-ary
/// polynomial obtained by putting `x_i` in slot `j` and shifting the later
/// slots down by one.
pub fn identify(p: &Polynomial, i: usize, j: usize) -> Result<Polynomial> {
    let n = p.arity();
    if n < 2 || i >= j || j >= n {
        return Err(Error::InvalidIdentification { i, j, arity: n });
    }
    let map: Vec<usize> = (0..n)
        .map(|k| match k.cmp(&j) {
            std::cmp::Ordering::Less => k,
            std::cmp::Ordering::Equal => i,
            std::cmp::Ordering::Greater => k - 1,
        })
        .collect();
    p.rename_variables(n - 1, &map)
}

/// Indices `i` (0-based) with `∂_i P ≠ 0`, ascending.
pub fn essential_variables(p: &Polynomial) -> Vec<usize> {
    (0..p.arity())
        .filter(|&i| {
            !p.partial_derivative(i)
                .expect("index below arity")
                .is_zero()
        })
        .collect()
}
