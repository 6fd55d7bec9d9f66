//! Exact computations with knot-group presentations: free-group words and
//! Tietze moves, Fox calculus and Alexander ideals over ℤ[t, t⁻¹], the torus
//! knot word problem, and certificates that the groups Γ_p are pairwise
//! non-isomorphic.

pub mod algebra;
pub mod fox;
pub mod group;
pub mod knots;
pub mod selftest;
pub mod torus;

pub use algebra::{
    cyclotomic, laurent_gcd, smith_normal_form, AlgebraError, IntMatrix, LaurentMatrix, LaurentPoly,
};
pub use fox::{
    alexander_polynomial, elementary_ideal, fox_derivative, FoxError, IdealGenerators,
    ModulePresentation,
};
pub use group::text::{parse_presentation, print_presentation, ParseError};
pub use group::{AbelianizationResult, Generator, GroupError, Presentation, Word};
pub use knots::{ConstructionError, DistinctnessCertificate, GammaArtifacts, TorusKnotParams};
pub use torus::{normal_form, TorusConvention, TorusGroup, TorusNF, WordProblemError};
