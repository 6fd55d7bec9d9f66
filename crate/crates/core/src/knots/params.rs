use std::fmt;

use serde::{Deserialize, Serialize};

use super::ConstructionError;

/// Parameters of the torus knot T(p, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusKnotParams {
    p: i64,
    q: i64,
}

impl TorusKnotParams {
    /// Requires `p ≥ 1`, `q ≥ 2` and `gcd(p, q) = 1`.
    pub fn new(p: i64, q: i64) -> Result<Self, ConstructionError> {
        if p < 1 || q < 2 || num_integer::gcd(p, q) != 1 {
            return Err(ConstructionError::BadParams { p, q });
        }
        Ok(Self { p, q })
    }

    /// T(p, p+1), the knot γ_p.
    pub fn consecutive(p: i64) -> Result<Self, ConstructionError> {
        Self::new(p, p + 1)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for TorusKnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}
