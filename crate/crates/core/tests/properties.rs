//! Cross-checks between the three deciders and the structural invariants of
//! bisymmetric polynomials, on seeded random inputs.

use medial::sampling::{
    random_class_iii_spec, random_polynomial, random_rational,
};
use medial::{
    check_randomized, check_symbolic, classify, construct_class_iii, essential_variables,
    homogeneous_component, integrality_check, verify_witness, ClassIIISpec, MultiIndex,
    Polynomial, RandomizedConfig, Rational, SymbolicConfig, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_witness(p: &Polynomial, v: &Verdict) {
    if let Some(w) = v.witness() {
        assert!(verify_witness(p, w), "witness for {p} does not re-verify");
    }
}

#[test]
fn classify_agrees_with_symbolic_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut positives = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=3);
        let p = random_polynomial(&mut rng, n, 3, 3, 5);
        let fast = classify(&p).unwrap();
        let slow = check_symbolic(&p, &SymbolicConfig::default()).unwrap();
        assert_eq!(fast.is_bisymmetric(), slow.is_bisymmetric(), "{p}");
        assert_eq!(fast.label(), slow.label(), "{p}");
        assert_witness(&p, &fast);
        assert_witness(&p, &slow);
        positives += fast.is_bisymmetric() as u32;
    }
    // univariate and low-degree draws guarantee some positives
    assert!(positives > 0);
}

#[test]
fn randomized_is_one_sided_and_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for seed in 0..150u64 {
        let n = rng.gen_range(1..=3);
        let p = random_polynomial(&mut rng, n, 3, 3, 5);
        let cfg = RandomizedConfig { trials: 8, bound: 50, seed };
        let v = check_randomized(&p, &cfg).unwrap();
        assert_witness(&p, &v);
        let reference = classify(&p).unwrap();
        assert_eq!(v.is_bisymmetric(), reference.is_bisymmetric(), "{p}");
        // the same seed reproduces the same verdict
        assert_eq!(check_randomized(&p, &cfg).unwrap(), v);
    }
}

fn random_integral_spec(rng: &mut ChaCha8Rng) -> ClassIIISpec {
    let n = rng.gen_range(1..=3);
    let total = rng.gen_range(1..=4);
    let mut e = vec![0u32; n];
    for _ in 0..total {
        e[rng.gen_range(0..n)] += 1;
    }
    let den: i64 = rng.gen_range(1..=4);
    let b = Rational::new(rng.gen_range(-6..=6), den);
    // bias a towards multiples of powers of the denominator so both outcomes occur
    let power = rng.gen_range(0..=total);
    let mut a = rng.gen_range(1..=5) * den.pow(power);
    if rng.gen_bool(0.5) {
        a = -a;
    }
    ClassIIISpec::new(Rational::from_int(a), b, MultiIndex::new(e)).unwrap()
}

#[test]
fn integrality_matches_integer_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..100 {
        let spec = random_integral_spec(&mut rng);
        let poly = construct_class_iii(&spec);
        let integer_coeffs = poly.terms().all(|(_, c)| c.is_integer());
        let check = integrality_check(&spec).unwrap();
        assert_eq!(check, integer_coeffs, "{spec:?} -> {poly}");
        if check {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 0 && no > 0, "yes={yes} no={no}");
}

#[test]
fn essential_variables_follow_top_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut checked = 0;
    let mut candidates: Vec<Polynomial> = (0..100)
        .map(|_| construct_class_iii(&random_class_iii_spec(&mut rng, 3, 4)))
        .collect();
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        candidates.push(random_polynomial(&mut rng, n, 3, 3, 4));
    }
    for p in candidates {
        let v = classify(&p).unwrap();
        let deg = match p.degree().finite() {
            Some(d) if d >= 2 => d,
            _ => continue,
        };
        if !v.is_bisymmetric() {
            continue;
        }
        let top = homogeneous_component(&p, deg);
        let (gamma, _) = top.as_monomial().expect("bisymmetric top component is a monomial");
        assert_eq!(essential_variables(&p), gamma.support(), "{p}");
        checked += 1;
    }
    assert!(checked >= 50, "only {checked} bisymmetric inputs of degree >= 2");
}

#[test]
fn shifted_monomials_with_rational_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..40 {
        let spec = random_class_iii_spec(&mut rng, 3, 4);
        let p = construct_class_iii(&spec);
        let v = classify(&p).unwrap();
        assert!(v.is_bisymmetric(), "{p}");
        // when more than one variable is essential the parameters are recovered exactly
        if spec.alpha().support().len() >= 2 {
            let label = v.label().unwrap();
            assert_eq!(label.reconstruct(p.arity()).unwrap(), p);
            if let medial::ClassLabel::ShiftedMonomial(found) = label {
                assert_eq!(found, &spec);
            } else {
                panic!("expected a shifted monomial label for {p}");
            }
        }
        let b = random_rational(&mut rng, 4, 3);
        let perturbed = &p + &Polynomial::var(p.arity(), 0).unwrap().scale(&b);
        let v = classify(&perturbed).unwrap();
        assert_witness(&perturbed, &v);
    }
}
