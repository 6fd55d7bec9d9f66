//! Words in free groups, finite presentations, checked Tietze moves and
//! abelianization.

mod presentation;
pub mod text;
mod word;

pub use presentation::{degree_map_gcd, degree_map_is_valid, AbelianizationResult, Presentation};
pub use word::{Generator, Syllable, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {0} is not in the presentation")]
    ForeignGenerator(Generator),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(Generator),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("no relator defines {0} by the given word")]
    NoDefiningRelator(Generator),
}
