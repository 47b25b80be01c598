//! Exact decision and classification of bisymmetric (medial) polynomial
//! functions over ℤ and ℚ.
//!
//! ```
//! use medial::{classify, parse, ClassLabel, Verdict};
//!
//! let p = parse("9*x1*x2*x3 + 3*(x1*x2 + x2*x3 + x3*x1) + x1 + x2 + x3", 3).unwrap();
//! match classify(&p).unwrap() {
//!     Verdict::Bisymmetric(ClassLabel::ShiftedMonomial(spec)) => {
//!         assert_eq!(spec.b().to_string(), "1/3");
//!     }
//!     other => panic!("{other:?}"),
//! }
//! ```

pub mod analysis;
pub mod bisymmetry;
pub mod cli;
pub mod error;
pub mod polyring;
pub mod rational;
pub mod sampling;

pub use analysis::{
    conjugate_translate, decompose, essential_variables, homogeneous_component, identify,
    permute, taylor_shift, HomogeneousDecomposition,
};
pub use bisymmetry::{
    bisymmetry_difference, check_randomized, check_symbolic, classify, classify_label,
    construct_class_iii, evaluate_sides, integrality_check, integrality_report, verify_witness,
    ClassIIISpec, ClassLabel, IntegralityReport, RandomizedConfig, Rejection, SymbolicConfig,
    Verdict, Witness,
};
pub use cli::{format, parse};
pub use error::{Error, Result};
pub use polyring::{Degree, MultiIndex, Polynomial};
pub use rational::Rational;
