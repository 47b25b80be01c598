//! Machine-readable result documents.
//!
//! The `check` report has exactly these fields, in this order:
//!
//! ```json
//! { "verdict": "bisymmetric" | "not_bisymmetric",
//!   "class": null | { "kind": "univariate" | "affine" | "shifted_monomial", ... },
//!   "witness": null | [["p/q", ...], ...],
//!   "method": "classify" | "symbolic" | "randomized" | "all",
//!   "seed": integer | null,
//!   "elapsed_ms": number }
//! ```
//!
//! Class parameters: `univariate` carries `index` (1-based) and `body` (a
//! polynomial in `x1`); `affine` carries `coefficients` `[a0, a1, …, an]`;
//! `shifted_monomial` carries `a`, `b` and `alpha`. Every rational is a string
//! `"p"` or `"p/q"` in lowest terms.

use serde::{Deserialize, Serialize};

use crate::bisymmetry::{ClassLabel, Verdict};
use crate::cli::format;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictTag {
    Bisymmetric,
    NotBisymmetric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassReport {
    Univariate { index: usize, body: String },
    Affine { coefficients: Vec<String> },
    ShiftedMonomial { a: String, b: String, alpha: Vec<u32> },
}

impl From<&ClassLabel> for ClassReport {
    fn from(label: &ClassLabel) -> Self {
        match label {
            ClassLabel::Univariate { index, body } => ClassReport::Univariate {
                index: index + 1,
                body: format(body),
            },
            ClassLabel::Affine { coefficients } => ClassReport::Affine {
                coefficients: coefficients.iter().map(Rational::to_string).collect(),
            },
            ClassLabel::ShiftedMonomial(spec) => ClassReport::ShiftedMonomial {
                a: spec.a().to_string(),
                b: spec.b().to_string(),
                alpha: spec.alpha().exponents().to_vec(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputReport {
    pub verdict: VerdictTag,
    pub class: Option<ClassReport>,
    pub witness: Option<Vec<Vec<String>>>,
    pub method: String,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl OutputReport {
    pub fn new(verdict: &Verdict, method: &str, seed: Option<u64>, elapsed_ms: u64) -> Self {
        let (tag, class, witness) = match verdict {
            Verdict::Bisymmetric(label) => (VerdictTag::Bisymmetric, Some(label.into()), None),
            Verdict::NotBisymmetric(w) => (
                VerdictTag::NotBisymmetric,
                None,
                Some(
                    w.matrix
                        .iter()
                        .map(|row| row.iter().map(Rational::to_string).collect())
                        .collect(),
                ),
            ),
        };
        OutputReport {
            verdict: tag,
            class,
            witness,
            method: method.to_string(),
            seed,
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
