use proptest::prelude::*;

use super::*;
use crate::cli::parse;
use crate::error::Error;
use crate::rational::Rational;

const EXAMPLE: &str = "9*x1*x2*x3 + 3*(x1*x2 + x2*x3 + x3*x1) + x1 + x2 + x3";

fn p(s: &str, n: usize) -> Polynomial {
    parse(s, n).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn add_examples() {
    assert_eq!(&p("x1 + 1", 1) + &p("-x1", 1), p("1", 1));
    let a = p("x1^2 - 3*x2", 2);
    assert_eq!(&a + &Polynomial::zero(2), a);
    assert_eq!(&p("x1*x2", 2) + &p("x1*x2", 2), p("2*x1*x2", 2));
    assert!(matches!(
        p("x1", 1).checked_add(&p("x1", 2)),
        Err(Error::ArityMismatch { expected: 1, found: 2 })
    ));
}

#[test]
fn mul_examples() {
    assert_eq!(&p("x1 + 1", 1) * &p("x1 - 1", 1), p("x1^2 - 1", 1));
    let a = p("1/2*x1 - x2^3", 2);
    assert_eq!(&a * &Polynomial::one(2), a);
    let s = p("x1 + x2", 2);
    assert_eq!(&s * &s, p("x1^2 + 2*x1*x2 + x2^2", 2));
    assert!(p("x1", 1).checked_mul(&p("x1", 3)).is_err());
}

#[test]
fn pow_examples() {
    let a = p("x1 + 1", 1);
    assert_eq!(a.pow(0), Polynomial::one(1));
    assert_eq!(a.pow(2), p("x1^2 + 2*x1 + 1", 1));
    assert_eq!(p("2", 1).pow(3), p("8", 1));
    assert_eq!(Polynomial::zero(2).pow(0), Polynomial::one(2));
}

#[test]
fn pow_matches_iterated_mul() {
    let a = p("x1 - 2/3*x2 + 1", 2);
    let mut iterated = Polynomial::one(2);
    for k in 0..7 {
        assert_eq!(a.pow(k), iterated, "k = {k}");
        iterated = &iterated * &a;
    }
}

#[test]
fn evaluate_examples() {
    let ex = p(EXAMPLE, 3);
    let one = vec![Rational::one(); 3];
    assert_eq!(ex.evaluate(&one).unwrap(), Rational::from_int(21));
    let c = p("x1^2 - x2 + 5/7", 2);
    assert_eq!(c.evaluate(&[Rational::zero(), Rational::zero()]).unwrap(), q(5, 7));
    assert_eq!(
        p("x1^2 + x2^2", 2)
            .evaluate(&[Rational::one(), Rational::one()])
            .unwrap(),
        Rational::from_int(2)
    );
    assert!(ex.evaluate(&one[..2]).is_err());
}

#[test]
fn substitute_examples() {
    let r = p("x1*x2", 2)
        .substitute(&[p("x1 + 1", 1), p("x1 - 1", 1)])
        .unwrap();
    assert_eq!(r, p("x1^2 - 1", 1));

    let ex = p(EXAMPLE, 3);
    let ids: Vec<_> = (0..3).map(|i| Polynomial::var(3, i).unwrap()).collect();
    assert_eq!(ex.substitute(&ids).unwrap(), ex);

    let r = p("x1^2", 1).substitute(&[p("x1 + x2", 2)]).unwrap();
    assert_eq!(r, p("x1^2 + 2*x1*x2 + x2^2", 2));
}

#[test]
fn substitute_errors() {
    let a = p("x1*x2", 2);
    assert!(matches!(
        a.substitute(&[p("x1", 1)]),
        Err(Error::ArityMismatch { .. })
    ));
    assert!(matches!(
        a.substitute(&[p("x1", 1), p("x1", 2)]),
        Err(Error::ArityMismatch { .. })
    ));
}

#[test]
fn substitute_bounded_trips() {
    let a = p("x1^6", 1);
    let arg = p("x1 + x2 + x3 + 1", 3);
    assert!(a.substitute_bounded(std::slice::from_ref(&arg), Some(1_000)).is_ok());
    assert!(matches!(
        a.substitute_bounded(&[arg], Some(20)),
        Err(Error::ResourceExceeded { ceiling: 20, .. })
    ));
}

#[test]
fn derivative_examples() {
    assert_eq!(p("x1^2*x2", 2).partial_derivative(0).unwrap(), p("2*x1*x2", 2));
    assert!(p("x1^3", 2).partial_derivative(1).unwrap().is_zero());
    assert_eq!(
        p("5*x1^2*x2^3", 2).partial_derivative(0).unwrap(),
        p("10*x1*x2^3", 2)
    );
    assert!(matches!(
        p("x1", 2).partial_derivative(2),
        Err(Error::IndexOutOfRange { index: 2, arity: 2 })
    ));
}

#[test]
fn degree_examples() {
    assert_eq!(p(EXAMPLE, 3).degree(), Degree::Finite(3));
    assert_eq!(p("7", 2).degree(), Degree::Finite(0));
    assert_eq!(Polynomial::zero(2).degree(), Degree::ZeroPolynomial);
    assert_eq!(Polynomial::zero(2).degree().finite(), None);
}

#[test]
fn monomial_examples() {
    let m = p("9*x1*x2*x3", 3);
    let (alpha, c) = m.as_monomial().unwrap();
    assert_eq!(alpha.exponents(), &[1, 1, 1]);
    assert_eq!(c, &Rational::from_int(9));
    assert!(!p("x1 + x2", 2).is_monomial());
    assert!(!Polynomial::zero(3).is_monomial());
    assert!(Polynomial::zero(3).as_monomial().is_none());
}

#[test]
fn specialize_and_rename() {
    let a = p("x1^2*x2 + x2 + 3", 2);
    assert_eq!(
        a.specialize(0, &Rational::from_int(2)).unwrap(),
        p("5*x2 + 3", 2)
    );
    let r = a.rename_variables(3, &[2, 0]).unwrap();
    assert_eq!(r, p("x3^2*x1 + x1 + 3", 3));
    let merged = p("x1*x2", 2).rename_variables(1, &[0, 0]).unwrap();
    assert_eq!(merged, p("x1^2", 1));
}

#[test]
fn from_terms_merges_and_drops_zero() {
    let t = |e: Vec<u32>, c: i64| (MultiIndex::new(e), Rational::from_int(c));
    let a = Polynomial::from_terms(2, [t(vec![1, 0], 2), t(vec![1, 0], -2), t(vec![0, 1], 1)])
        .unwrap();
    assert_eq!(a, p("x2", 2));
    assert!(a.is_canonical());
    assert!(Polynomial::from_terms(2, [t(vec![1], 1)]).is_err());
}

pub(crate) fn arb_poly(arity: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (
        proptest::collection::vec(0..=max_deg, arity),
        -3i64..=3,
    );
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(mut e, c)| {
            // clamp the total degree
            while e.iter().sum::<u32>() > max_deg {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            (MultiIndex::new(e), Rational::from_int(c))
        });
        Polynomial::from_terms(arity, terms).unwrap()
    })
}

fn arb_point(arity: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-5i64..=5, 1i64..=4), arity)
        .prop_map(|v| v.into_iter().map(|(n, d)| Rational::new(n, d)).collect())
}

fn arity_and<T: Strategy, F: Fn(usize) -> T + Clone>(f: F) -> impl Strategy<Value = T::Value> {
    (1usize..=3).prop_flat_map(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms((a, b, c) in arity_and(|n| (arb_poly(n, 4), arb_poly(n, 4), arb_poly(n, 4)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        for r in [&a + &b, &a * &b, &a - &c, -&c] {
            prop_assert!(r.is_canonical());
        }
        if let (Some(da), Some(db)) = (a.degree().finite(), b.degree().finite()) {
            prop_assert_eq!((&a * &b).degree(), Degree::Finite(da + db));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism((a, b, pt) in arity_and(|n| (arb_poly(n, 4), arb_poly(n, 4), arb_point(n)))) {
        let va = a.evaluate(&pt).unwrap();
        let vb = b.evaluate(&pt).unwrap();
        prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), &va + &vb);
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        (a, args, pt) in (1usize..=3, 1usize..=3).prop_flat_map(|(n, m)| (
            arb_poly(n, 3),
            proptest::collection::vec(arb_poly(m, 2), n),
            arb_point(m),
        ))
    ) {
        let composed = a.substitute(&args).unwrap();
        prop_assert!(composed.is_canonical());
        let inner: Vec<Rational> = args.iter().map(|g| g.evaluate(&pt).unwrap()).collect();
        prop_assert_eq!(composed.evaluate(&pt).unwrap(), a.evaluate(&inner).unwrap());
    }

    #[test]
    fn leibniz_rule((a, b, i) in arity_and(|n| (arb_poly(n, 4), arb_poly(n, 4), 0..n))) {
        let lhs = (&a * &b).partial_derivative(i).unwrap();
        let rhs = &(&a.partial_derivative(i).unwrap() * &b) + &(&a * &b.partial_derivative(i).unwrap());
        prop_assert!(lhs.is_canonical());
        prop_assert_eq!(lhs, rhs);
    }
}
