//! Fox free differential calculus, Alexander matrices, elementary ideals and
//! Alexander polynomials over ℤ[t, t⁻¹].

mod alexander;
mod group_ring;

pub use alexander::{
    abelianize_element, alexander_matrix, alexander_polynomial, alexander_polynomial_deleting,
    elementary_ideal, DegreeMap, IdealGenerators, ModulePresentation,
};
pub use group_ring::{fox_derivative, GroupRingElement};

use thiserror::Error;

use crate::group::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("generator {0} has no degree")]
    UnmappedGenerator(Generator),
    #[error("abelianization is not infinite cyclic")]
    NotInfiniteCyclicAbelianization,
    #[error("column of {0} has degree zero and cannot be deleted")]
    ZeroDegreeColumn(Generator),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
