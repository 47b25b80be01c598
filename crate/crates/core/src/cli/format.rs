use std::fmt::Write;

use crate::polyring::{MultiIndex, Polynomial};

fn monomial_text(alpha: &MultiIndex) -> String {
    let mut parts = Vec::new();
    for (i, &e) in alpha.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

/// Canonical text form: terms in descending graded-lexicographic order,
/// reduced rational coefficients, unit coefficients omitted. The output
/// parses back to the same polynomial.
pub fn format(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (alpha, c)) in p.terms_graded_desc().into_iter().enumerate() {
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = monomial_text(alpha);
        if mono.is_empty() {
            write!(out, "{magnitude}").unwrap();
        } else if magnitude.is_one() {
            out.push_str(&mono);
        } else {
            write!(out, "{magnitude}*{mono}").unwrap();
        }
    }
    out
}
