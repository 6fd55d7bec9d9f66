//! The torus knots T(p, p+1), their doubles, the groups Γ_p, and the
//! Alexander-ideal certificates separating the Γ_p.

mod certificate;
mod consequences;
mod gamma;
mod params;
mod torus;

pub use certificate::{
    distinctness_certificate, emit_certificate_json, parse_certificate_json, CertificateMode,
    CertificatePolynomials, DistinctnessCertificate, CERTIFICATE_SCHEMA_VERSION,
};
pub use consequences::{fold_check, fold_images, verify_tau, TauReport};
pub use gamma::{
    check_gamma_consistency, derive_gamma_consistency, gamma_presentation,
    gamma_tab_by_substitution, gamma_tab_literal, gamma_tab_presentation, order_ideal, p_poly,
    tab_product_relator, ConsistencyReport, GammaArtifacts, PForm, SubstitutionStep, TietzeStep,
};
pub use params::TorusKnotParams;
pub use torus::{
    double_presentation, standard_presentation, strand_product, tau_word, torus_wirtinger,
    WirtingerDictionary,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::fox::FoxError;
use crate::group::GroupError;
use crate::torus::WordProblemError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("p = {0} is out of range for this construction")]
    InvalidP(i64),
    #[error("T({p},{q}) needs p >= 1, q >= 2 and gcd(p, q) = 1")]
    BadParams { p: i64, q: i64 },
    #[error("certificate needs 1 <= p < k (got p = {p}, k = {k})")]
    BadPair { p: i64, k: i64 },
    #[error("substitution and literal presentations disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    WordProblem(#[from] WordProblemError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
