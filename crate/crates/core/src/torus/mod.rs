//! Word problem in torus knot groups via the central quotient
//! ℤ/p ∗ ℤ/q, and homomorphism checks into those groups.

mod homomorphism;
mod normal_form;

pub use homomorphism::{
    verify_homomorphism, HomomorphismReport, RelatorVerdict, SurjectivityWitness,
};
pub use normal_form::{normal_form, TorusConvention, TorusGroup, TorusLetter, TorusNF};

use thiserror::Error;

use crate::group::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordProblemError {
    #[error("word problem needs p, q >= 2 (got p = {p}, q = {q})")]
    BadParams { p: i64, q: i64 },
    #[error("generator {0} is not x or y")]
    ForeignGenerator(Generator),
    #[error("no image given for generator {0}")]
    MissingImage(Generator),
}
