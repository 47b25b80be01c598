use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::polyring::MultiIndex;
use crate::rational::Rational;

/// Total degree of a polynomial. The zero polynomial has no degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    ZeroPolynomial,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::ZeroPolynomial => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients.
///
/// Terms live in a map keyed by exponent vector. No stored coefficient is
/// zero, so structural equality is polynomial equality. Variable indices in
/// this API are 0-based; the text format numbers them from 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(arity);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zeros(arity), c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::constant(arity, Rational::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::IndexOutOfRange { index: i, arity });
        }
        Ok(Polynomial::monomial(MultiIndex::unit(arity, i), Rational::one()))
    }

    /// `c · x^α`; arity is taken from `alpha`.
    pub fn monomial(alpha: MultiIndex, c: Rational) -> Self {
        let mut p = Polynomial::zero(alpha.arity());
        if !c.is_zero() {
            p.terms.insert(alpha, c);
        }
        p
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut acc: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        for (alpha, c) in terms {
            if alpha.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: alpha.arity(),
                });
            }
            *acc.entry(alpha).or_default() += &c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial { arity, terms: acc })
    }

    fn from_accumulator(arity: usize, acc: HashMap<MultiIndex, Rational>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vector.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> + '_ {
        self.terms.iter()
    }

    /// Terms in descending graded-lexicographic order (the canonical output order).
    pub fn terms_graded_desc(&self) -> Vec<(&MultiIndex, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_graded(a.0));
        v
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::zeros(self.arity))
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(MultiIndex::total)
            .max()
            .map_or(Degree::ZeroPolynomial, Degree::Finite)
    }

    /// `Some((α, c))` iff the polynomial is a single term `c·x^α`.
    pub fn as_monomial(&self) -> Option<(&MultiIndex, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every term has the same total degree (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(MultiIndex::total);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Internal consistency: no zero coefficient, every key has the right arity.
    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(a, c)| !c.is_zero() && a.arity() == self.arity)
    }

    fn expect_arity(&self, found: usize) -> Result<()> {
        if found == self.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity,
                found,
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.expect_arity(other.arity)?;
        let mut terms = self.terms.clone();
        for (alpha, c) in &other.terms {
            let entry = terms.entry(alpha.clone()).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(alpha);
            }
        }
        Ok(Polynomial {
            arity: self.arity,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.expect_arity(other.arity)?;
        let mut acc: HashMap<MultiIndex, Rational> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 20));
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                *acc.entry(a.add(b)).or_default() += &(c * d);
            }
        }
        Ok(Polynomial::from_accumulator(self.arity, acc))
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c * factor))
                .collect(),
        }
    }

    pub fn add_constant(&self, c: &Rational) -> Polynomial {
        self + &Polynomial::constant(self.arity, c.clone())
    }

    /// `P^k` by repeated squaring; `P^0 = 1`.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        self.expect_arity(point.len())?;
        let mut total = Rational::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(alpha.exponents()) {
                if e > 0 {
                    term *= &x.pow(e);
                }
            }
            total += &term;
        }
        Ok(total)
    }

    /// Composition `P(args_1, …, args_n)`. All arguments must share one arity,
    /// which becomes the arity of the result.
    pub fn substitute(&self, args: &[Polynomial]) -> Result<Polynomial> {
        self.substitute_bounded(args, None)
    }

    /// Like [`substitute`](Self::substitute), but fails with
    /// [`Error::ResourceExceeded`] as soon as an intermediate polynomial holds
    /// more than `ceiling` terms.
    pub fn substitute_bounded(
        &self,
        args: &[Polynomial],
        ceiling: Option<usize>,
    ) -> Result<Polynomial> {
        self.expect_arity(args.len())?;
        let target = match args.first() {
            Some(a) => a.arity,
            // Arity-0 polynomials are not constructible through the public API.
            None => return Err(Error::ZeroArity),
        };
        for a in args {
            if a.arity != target {
                return Err(Error::ArityMismatch {
                    expected: target,
                    found: a.arity,
                });
            }
        }
        let guard = |p: &Polynomial| -> Result<()> {
            match ceiling {
                Some(limit) if p.len() > limit => Err(Error::ResourceExceeded {
                    projected: p.len() as u128,
                    ceiling: limit as u128,
                }),
                _ => Ok(()),
            }
        };

        // powers[i][e] = args[i]^e, built incrementally up to the largest exponent used.
        let mut max_exp = vec![0u32; self.arity];
        for alpha in self.terms.keys() {
            for (m, &e) in max_exp.iter_mut().zip(alpha.exponents()) {
                *m = (*m).max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(self.arity);
        for (arg, &m) in args.iter().zip(&max_exp) {
            let mut row = vec![Polynomial::one(target)];
            for e in 1..=m as usize {
                let next = &row[e - 1] * arg;
                guard(&next)?;
                row.push(next);
            }
            powers.push(row);
        }

        let mut acc: HashMap<MultiIndex, Rational> = HashMap::new();
        for (alpha, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in alpha.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                    guard(&term)?;
                }
            }
            for (beta, d) in term.terms {
                *acc.entry(beta).or_default() += &d;
            }
            if let Some(limit) = ceiling {
                if acc.len() > limit {
                    return Err(Error::ResourceExceeded {
                        projected: acc.len() as u128,
                        ceiling: limit as u128,
                    });
                }
            }
        }
        Ok(Polynomial::from_accumulator(target, acc))
    }

    /// Formal partial derivative with respect to `x_i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity,
            });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(alpha, _)| alpha.get(i) > 0)
            .map(|(alpha, c)| {
                let e = alpha.get(i);
                let mut exps = alpha.exponents().to_vec();
                exps[i] -= 1;
                (MultiIndex::new(exps), c * &Rational::from_int(e))
            })
            .collect();
        Ok(Polynomial {
            arity: self.arity,
            terms,
        })
    }

    /// Substitutes the constant `value` for `x_i`, keeping the arity.
    pub fn specialize(&self, i: usize, value: &Rational) -> Result<Polynomial> {
        if i >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity,
            });
        }
        let mut acc: HashMap<MultiIndex, Rational> = HashMap::new();
        for (alpha, c) in &self.terms {
            let e = alpha.get(i);
            let mut exps = alpha.exponents().to_vec();
            exps[i] = 0;
            let coeff = if e == 0 { c.clone() } else { c * &value.pow(e) };
            *acc.entry(MultiIndex::new(exps)).or_default() += &coeff;
        }
        Ok(Polynomial::from_accumulator(self.arity, acc))
    }

    /// Relabels variables: `x_k` of `self` becomes `x_{map[k]}` in a polynomial of
    /// arity `new_arity`. `map` need not be injective; colliding exponents add.
    pub fn rename_variables(&self, new_arity: usize, map: &[usize]) -> Result<Polynomial> {
        self.expect_arity(map.len())?;
        if let Some(&bad) = map.iter().find(|&&t| t >= new_arity) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                arity: new_arity,
            });
        }
        let terms = self.terms.iter().map(|(alpha, c)| {
            let mut exps = vec![0u32; new_arity];
            for (k, &e) in alpha.exponents().iter().enumerate() {
                exps[map[k]] += e;
            }
            (MultiIndex::new(exps), c.clone())
        });
        Polynomial::from_terms(new_arity, terms)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.arity, crate::cli::format(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cli::format(self))
    }
}

// Operator impls panic on arity mismatch; use the `checked_*` methods when the
// arities are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
