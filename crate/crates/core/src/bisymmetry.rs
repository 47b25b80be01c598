//! Deciding and classifying bisymmetric polynomial functions.
//!
//! A function `f` of `n` arguments is bisymmetric when
//! `f(f(r_1), …, f(r_n)) = f(f(c_1), …, f(c_n))` for every `n × n` matrix with
//! rows `r_i` and columns `c_j`. Over a field of characteristic zero the
//! bisymmetric polynomials are exactly
//!
//! * the univariate ones,
//! * the affine ones `a_0 + Σ a_i x_i`,
//! * the shifted monomials `a ∏ (x_i + b)^{α_i} − b`.
//!
//! Three deciders are provided. [`check_symbolic`] expands the identity and
//! tests the difference polynomial for zero. [`check_randomized`] evaluates both
//! sides at seeded random integer matrices. [`classify`] applies the direct
//! structural test: with `p = deg P ≥ 2`, the top component `P_p` must be a
//! single term `c·x^γ` and, for `b = P_{p−1}(1) / (p·P_p(1))`, the identity
//! `P_p(x) = P(x − b·1) + b` must hold. All three work over ℚ; for integer
//! inputs the same verdict holds over ℤ, with [`integrality_check`] deciding
//! whether a class (iii) parameter set yields integer coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::{essential_variables, homogeneous_component, taylor_shift};
use crate::error::{Error, Result};
use crate::polyring::{Degree, MultiIndex, Polynomial};
use crate::rational::Rational;

pub const DEFAULT_TERM_CEILING: u128 = 5_000_000;
pub const DEFAULT_TRIALS: u32 = 16;
pub const DEFAULT_BOUND: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0;

/// Which of the three bisymmetric shapes a polynomial has.
///
/// Classes overlap; a polynomial is reported under the first that applies,
/// in the order univariate, affine, shifted monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassLabel {
    /// Exactly one essential variable `x_index` (0-based); `body` is the unary
    /// polynomial it applies to that variable.
    Univariate { index: usize, body: Polynomial },
    /// `a_0 + a_1 x_1 + … + a_n x_n`, stored as `[a_0, a_1, …, a_n]`.
    /// Constants, including zero, land here.
    Affine { coefficients: Vec<Rational> },
    /// `a ∏ (x_i + b)^{α_i} − b` with `|α| ≥ 2`.
    ShiftedMonomial(ClassIIISpec),
}

impl ClassLabel {
    /// Rebuilds the polynomial this label describes.
    pub fn reconstruct(&self, arity: usize) -> Result<Polynomial> {
        match self {
            ClassLabel::Univariate { index, body } => {
                if *index >= arity {
                    return Err(Error::IndexOutOfRange {
                        index: *index,
                        arity,
                    });
                }
                body.rename_variables(arity, &[*index])
            }
            ClassLabel::Affine { coefficients } => {
                if coefficients.len() != arity + 1 {
                    return Err(Error::ArityMismatch {
                        expected: arity + 1,
                        found: coefficients.len(),
                    });
                }
                let mut terms = vec![(MultiIndex::zeros(arity), coefficients[0].clone())];
                for (i, a) in coefficients[1..].iter().enumerate() {
                    terms.push((MultiIndex::unit(arity, i), a.clone()));
                }
                Polynomial::from_terms(arity, terms)
            }
            ClassLabel::ShiftedMonomial(spec) => {
                if spec.arity() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: spec.arity(),
                    });
                }
                Ok(construct_class_iii(spec))
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ClassLabel::Univariate { .. } => "univariate",
            ClassLabel::Affine { .. } => "affine",
            ClassLabel::ShiftedMonomial(_) => "shifted_monomial",
        }
    }
}

/// Parameters `(a, b, α)` of `a ∏ (x_i + b)^{α_i} − b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassIIISpec {
    a: Rational,
    b: Rational,
    alpha: MultiIndex,
}

impl ClassIIISpec {
    pub fn new(a: Rational, b: Rational, alpha: MultiIndex) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if alpha.arity() == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(ClassIIISpec { a, b, alpha })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn alpha(&self) -> &MultiIndex {
        &self.alpha
    }

    pub fn arity(&self) -> usize {
        self.alpha.arity()
    }
}

/// An `n × n` matrix at which the two sides of the identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub matrix: Vec<Vec<Rational>>,
    /// `P(P(r_1), …, P(r_n))`
    pub lhs: Rational,
    /// `P(P(c_1), …, P(c_n))`
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Bisymmetric(ClassLabel),
    NotBisymmetric(Witness),
}

impl Verdict {
    pub fn is_bisymmetric(&self) -> bool {
        matches!(self, Verdict::Bisymmetric(_))
    }

    pub fn label(&self) -> Option<&ClassLabel> {
        match self {
            Verdict::Bisymmetric(l) => Some(l),
            Verdict::NotBisymmetric(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Bisymmetric(_) => None,
            Verdict::NotBisymmetric(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomizedConfig {
    pub trials: u32,
    /// Entries are drawn uniformly from `[-bound, bound]`.
    pub bound: u64,
    pub seed: u64,
}

impl Default for RandomizedConfig {
    fn default() -> Self {
        RandomizedConfig {
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_BOUND,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolicConfig {
    /// Upper limit on the number of terms of the composed polynomials.
    pub term_ceiling: u128,
}

impl Default for SymbolicConfig {
    fn default() -> Self {
        SymbolicConfig {
            term_ceiling: DEFAULT_TERM_CEILING,
        }
    }
}

/// Why the structural test rejected a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The top homogeneous component has several terms.
    TopNotMonomial { terms: usize },
    /// `P_p(x) ≠ P(x − b·1) + b` for the only admissible `b`.
    ShiftMismatch { b: Rational },
}

fn row_map(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| i * n + j).collect()
}

fn column_map(n: usize, j: usize) -> Vec<usize> {
    (0..n).map(|i| i * n + j).collect()
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Upper bound on the number of terms of `P(P(r_1), …, P(r_n))`, summed over
/// both sides of the identity.
pub fn projected_terms(p: &Polynomial) -> u128 {
    let n = p.arity() as u128;
    let inner = p.len() as u128;
    let mut sparse: u128 = 0;
    for (alpha, _) in p.terms() {
        let mut count: u128 = 1;
        for &e in alpha.exponents() {
            // monomials of a t-term polynomial raised to e
            count = count.saturating_mul(binomial(inner + e as u128 - 1, e as u128));
        }
        sparse = sparse.saturating_add(count);
    }
    let deg = p.degree().finite().unwrap_or(0) as u128;
    let vars = n * n;
    let dense = binomial(vars + deg * deg, deg * deg);
    sparse.min(dense).saturating_mul(2)
}

/// The `n²`-ary polynomial `P(P(r_1), …, P(r_n)) − P(P(c_1), …, P(c_n))` in
/// the entries `x_{ij}`, numbered row-major (`x_{ij}` is variable `i·n + j`).
pub fn bisymmetry_difference(p: &Polynomial) -> Result<Polynomial> {
    bisymmetry_difference_bounded(p, &SymbolicConfig::default())
}

pub fn bisymmetry_difference_bounded(p: &Polynomial, cfg: &SymbolicConfig) -> Result<Polynomial> {
    let projected = projected_terms(p);
    if projected > cfg.term_ceiling {
        return Err(Error::ResourceExceeded {
            projected,
            ceiling: cfg.term_ceiling,
        });
    }
    let n = p.arity();
    let vars = n * n;
    let rows = (0..n)
        .map(|i| p.rename_variables(vars, &row_map(n, i)))
        .collect::<Result<Vec<_>>>()?;
    let cols = (0..n)
        .map(|j| p.rename_variables(vars, &column_map(n, j)))
        .collect::<Result<Vec<_>>>()?;
    let limit = usize::try_from(cfg.term_ceiling).ok();
    let lhs = p.substitute_bounded(&rows, limit)?;
    let rhs = p.substitute_bounded(&cols, limit)?;
    Ok(&lhs - &rhs)
}

/// Both sides of the identity evaluated at `matrix`.
pub fn evaluate_sides(p: &Polynomial, matrix: &[Vec<Rational>]) -> Result<(Rational, Rational)> {
    let n = p.arity();
    if matrix.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: matrix.len(),
        });
    }
    let rows = matrix
        .iter()
        .map(|r| p.evaluate(r))
        .collect::<Result<Vec<_>>>()?;
    let cols = (0..n)
        .map(|j| {
            let column: Vec<Rational> = matrix.iter().map(|r| r[j].clone()).collect();
            p.evaluate(&column)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((p.evaluate(&rows)?, p.evaluate(&cols)?))
}

/// Recomputes both sides at the witness matrix and checks they match the
/// stored values and differ from each other.
pub fn verify_witness(p: &Polynomial, w: &Witness) -> bool {
    match evaluate_sides(p, &w.matrix) {
        Ok((lhs, rhs)) => lhs == w.lhs && rhs == w.rhs && lhs != rhs,
        Err(_) => false,
    }
}

fn witness_at(p: &Polynomial, matrix: Vec<Vec<Rational>>) -> Result<Witness> {
    let (lhs, rhs) = evaluate_sides(p, &matrix)?;
    Ok(Witness { matrix, lhs, rhs })
}

/// 0, 1, −1, 2, −2, …
fn small_integers() -> impl Iterator<Item = Rational> {
    std::iter::once(Rational::zero()).chain((1i64..).flat_map(|k| {
        [Rational::from_int(k), Rational::from_int(-k)]
    }))
}

/// A point where the nonzero polynomial `d` does not vanish.
///
/// Variables are fixed from the last to the first, each to the first value in
/// 0, 1, −1, 2, … that keeps the partial specialization nonzero. At most
/// `deg_{x_v} + 1` candidates are tried per variable.
pub fn nonvanishing_point(d: &Polynomial) -> Option<Vec<Rational>> {
    if d.is_zero() {
        return None;
    }
    let mut current = d.clone();
    let mut point = vec![Rational::zero(); d.arity()];
    for v in (0..d.arity()).rev() {
        let chosen = small_integers()
            .map(|c| {
                let s = current.specialize(v, &c).expect("v below arity");
                (c, s)
            })
            .find(|(_, s)| !s.is_zero())
            .expect("a nonzero polynomial has finitely many roots in each variable");
        point[v] = chosen.0;
        current = chosen.1;
    }
    Some(point)
}

fn symbolic_witness(p: &Polynomial, d: &Polynomial) -> Result<Witness> {
    let n = p.arity();
    let point = nonvanishing_point(d).expect("d is nonzero");
    let matrix = point.chunks(n).map(|r| r.to_vec()).collect();
    witness_at(p, matrix)
}

/// Decides bisymmetry by expanding the identity symbolically.
pub fn check_symbolic(p: &Polynomial, cfg: &SymbolicConfig) -> Result<Verdict> {
    let d = bisymmetry_difference_bounded(p, cfg)?;
    if d.is_zero() {
        classify_label(p)
            .map(Verdict::Bisymmetric)
            .map_err(|_| Error::Unclassifiable)
    } else {
        symbolic_witness(p, &d).map(Verdict::NotBisymmetric)
    }
}

/// The random integer matrices used by [`check_randomized`], in trial order.
pub fn sample_matrices(n: usize, cfg: &RandomizedConfig) -> Vec<Vec<Vec<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bound = cfg.bound.min(i64::MAX as u64) as i64;
    (0..cfg.trials)
        .map(|_| {
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Rational::from_int(rng.gen_range(-bound..=bound)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Evaluates both sides at `cfg.trials` random integer matrices; the first
/// trial (in order) where they differ becomes the witness. Trials run in
/// parallel.
///
/// A negative verdict is certain. A positive one can be wrong with
/// probability at most `(deg P)² / (2·bound + 1)` per trial; its label comes
/// from the structural test. If no trial finds a difference but the
/// structural test rejects, the witness is extracted symbolically.
pub fn check_randomized(p: &Polynomial, cfg: &RandomizedConfig) -> Result<Verdict> {
    if let Some(w) = random_witness(p, cfg)? {
        return Ok(Verdict::NotBisymmetric(w));
    }
    match classify_label(p) {
        Ok(label) => Ok(Verdict::Bisymmetric(label)),
        Err(_) => {
            let d = bisymmetry_difference(p)?;
            symbolic_witness(p, &d).map(Verdict::NotBisymmetric)
        }
    }
}

fn random_witness(p: &Polynomial, cfg: &RandomizedConfig) -> Result<Option<Witness>> {
    let matrices = sample_matrices(p.arity(), cfg);
    let found = matrices
        .into_par_iter()
        .map(|m| witness_at(p, m))
        .find_first(|w| match w {
            Ok(w) => w.lhs != w.rhs,
            Err(_) => true,
        });
    found.transpose()
}

/// The structural test alone: a label when `P` is bisymmetric, otherwise the
/// reason it is not.
pub fn classify_label(p: &Polynomial) -> std::result::Result<ClassLabel, Rejection> {
    let n = p.arity();
    let essential = essential_variables(p);
    if essential.len() == 1 {
        let index = essential[0];
        let collapse = vec![0; n];
        let body = p
            .rename_variables(1, &collapse)
            .expect("collapse map has the arity of p");
        return Ok(ClassLabel::Univariate { index, body });
    }
    let deg = match p.degree() {
        Degree::ZeroPolynomial => 0,
        Degree::Finite(d) => d,
    };
    if deg <= 1 {
        let mut coefficients = vec![p.constant_term()];
        coefficients.extend((0..n).map(|i| p.coefficient(&MultiIndex::unit(n, i))));
        return Ok(ClassLabel::Affine { coefficients });
    }

    let top = homogeneous_component(p, deg);
    let (gamma, c) = match top.as_monomial() {
        Some((g, c)) => (g.clone(), c.clone()),
        None => return Err(Rejection::TopNotMonomial { terms: top.len() }),
    };
    let ones = vec![Rational::one(); n];
    let sub_top = homogeneous_component(p, deg - 1);
    let top_at_one = c.clone();
    let b = &sub_top.evaluate(&ones).expect("arity n") / &(&Rational::from_int(deg) * &top_at_one);

    let back = vec![-&b; n];
    let unshifted = taylor_shift(p, &back)
        .expect("arity n")
        .add_constant(&b);
    if unshifted == top {
        Ok(ClassLabel::ShiftedMonomial(ClassIIISpec { a: c, b, alpha: gamma }))
    } else {
        Err(Rejection::ShiftMismatch { b })
    }
}

/// Deterministic decision by the structural test. Rejections are backed by a
/// witness: random matrices with the default configuration first, symbolic
/// extraction if none of those separates the two sides.
pub fn classify(p: &Polynomial) -> Result<Verdict> {
    match classify_label(p) {
        Ok(label) => Ok(Verdict::Bisymmetric(label)),
        Err(_) => {
            if let Some(w) = random_witness(p, &RandomizedConfig::default())? {
                return Ok(Verdict::NotBisymmetric(w));
            }
            let d = bisymmetry_difference(p)?;
            symbolic_witness(p, &d).map(Verdict::NotBisymmetric)
        }
    }
}

/// Expands `a ∏ (x_i + b)^{α_i} − b`.
pub fn construct_class_iii(spec: &ClassIIISpec) -> Polynomial {
    let n = spec.arity();
    let mut product = Polynomial::constant(n, spec.a.clone());
    for (i, &e) in spec.alpha.exponents().iter().enumerate() {
        if e > 0 {
            let factor = Polynomial::var(n, i)
                .expect("i below arity")
                .add_constant(&spec.b);
            product = &product * &factor.pow(e);
        }
    }
    product.add_constant(&-&spec.b)
}

/// The quantities whose integrality decides whether a class (iii) spec has
/// integer coefficients: `a·b^k` for `k = 1, …, |α|−1`, then `a·b^{|α|} − b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub values: Vec<Rational>,
    pub integral: bool,
}

pub fn integrality_report(spec: &ClassIIISpec) -> Result<IntegralityReport> {
    if !spec.a.is_integer() {
        return Err(Error::NonIntegerCoefficient(spec.a.to_string()));
    }
    let total = spec.alpha.total();
    let mut values: Vec<Rational> = (1..total).map(|k| &spec.a * &spec.b.pow(k)).collect();
    values.push(&(&spec.a * &spec.b.pow(total)) - &spec.b);
    let integral = values.iter().all(Rational::is_integer);
    Ok(IntegralityReport { values, integral })
}

/// True iff `a·b^k ∈ ℤ` for `1 ≤ k < |α|` and `a·b^{|α|} − b ∈ ℤ`.
pub fn integrality_check(spec: &ClassIIISpec) -> Result<bool> {
    integrality_report(spec).map(|r| r.integral)
}
