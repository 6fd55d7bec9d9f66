//! Exact arithmetic: ℤ[t, t⁻¹], cyclotomic polynomials, integer Smith normal
//! form, and minors of matrices over the Laurent ring.

mod cyclotomic;
mod int_matrix;
mod laurent;
mod laurent_matrix;

pub use cyclotomic::{cyclotomic, cyclotomic_table, divisors};
pub use int_matrix::{smith_normal_form, IntMatrix, SnfResult};
pub use laurent::{laurent_gcd, DenseCoeffs, LaurentPoly};
pub use laurent_matrix::{minors, LaurentMatrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend in Z[t, t^-1]")]
    NotDivisible,
    #[error("cyclotomic index must be positive")]
    InvalidIndex,
    #[error("minor size {k} exceeds matrix dimensions {rows}x{cols}")]
    SizeTooLarge { k: usize, rows: usize, cols: usize },
    #[error("gcd of an all-zero list is undefined")]
    AllZero,
    #[error("not a decimal integer: {0:?}")]
    BadCoefficient(String),
}
