use serde::{Deserialize, Serialize};

use crate::algebra::{cyclotomic, LaurentPoly};

use super::gamma::{order_ideal, p_poly, PForm};
use super::ConstructionError;

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMode {
    Cyclotomic,
    UnitIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePolynomials {
    pub p_poly_p: LaurentPoly,
    pub p_poly_k: LaurentPoly,
    pub phi: LaurentPoly,
}

/// Exact divisibility facts separating the order ideals of Γ_p and Γ_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessCertificate {
    pub schema_version: u32,
    pub p: i64,
    pub k: i64,
    pub mode: CertificateMode,
    /// `k(k+1)`
    pub phi_index: u64,
    /// Φ divides both generators of the order ideal of Γ_k.
    pub divides_in_k: bool,
    /// Φ divides 𝔭_p.
    pub divides_in_p: bool,
    pub valid: bool,
    pub polynomials: CertificatePolynomials,
}

impl DistinctnessCertificate {
    /// Recomputes validity from the stored polynomials alone.
    pub fn recheck(&self) -> bool {
        let CertificatePolynomials {
            p_poly_p,
            p_poly_k,
            phi,
        } = &self.polynomials;
        if self.k <= self.p || *phi != cyclotomic_for(self.k).unwrap_or_default() {
            return false;
        }
        let k_side =
            phi.divides(p_poly_k) && phi.divides(&(p_poly_k * &LaurentPoly::t_pow_minus_one(1)));
        let ok = match self.mode {
            CertificateMode::Cyclotomic => k_side && !phi.divides(p_poly_p),
            CertificateMode::UnitIdeal => p_poly_p.is_one() && !p_poly_k.is_unit() && k_side,
        };
        ok == self.valid
            && k_side == self.divides_in_k
            && phi.divides(p_poly_p) == self.divides_in_p
    }
}

fn cyclotomic_for(k: i64) -> Result<LaurentPoly, ConstructionError> {
    Ok(cyclotomic((k * (k + 1)) as u64)?)
}

/// Certificate that Γ_p and Γ_k are not isomorphic, for `1 ≤ p < k`.
///
/// For `p ≥ 2` a primitive `k(k+1)`-th root of unity is a common zero of the
/// order ideal of Γ_k but not a zero of 𝔭_p. For `p = 1` the order ideal of
/// Γ_1 is the unit ideal while that of Γ_k lies in (Φ_{k(k+1)}).
pub fn distinctness_certificate(
    p: i64,
    k: i64,
) -> Result<DistinctnessCertificate, ConstructionError> {
    if p < 1 || p >= k {
        return Err(ConstructionError::BadPair { p, k });
    }
    let phi = cyclotomic_for(k)?;
    let pp = p_poly(p, PForm::Sum)?;
    let pk = p_poly(k, PForm::Sum)?;
    let (_, ideal_k) = order_ideal(k)?;
    let (_, ideal_p) = order_ideal(p)?;

    let divides_in_k =
        phi.divides(&pk) && phi.divides(&(&pk * &LaurentPoly::t_pow_minus_one(1)).canonicalize());
    let divides_in_p = phi.divides(&pp);
    let (mode, valid) = if p == 1 {
        let k_proper = ideal_k.all_divisible_by(&phi) && !ideal_k.is_zero_ideal();
        (
            CertificateMode::UnitIdeal,
            ideal_p.contains_unit() && k_proper,
        )
    } else {
        (CertificateMode::Cyclotomic, divides_in_k && !divides_in_p)
    };
    Ok(DistinctnessCertificate {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        p,
        k,
        mode,
        phi_index: (k * (k + 1)) as u64,
        divides_in_k,
        divides_in_p,
        valid,
        polynomials: CertificatePolynomials {
            p_poly_p: pp,
            p_poly_k: pk,
            phi,
        },
    })
}

/// Pretty-printed JSON with keys sorted at every level.
pub fn emit_certificate_json(c: &DistinctnessCertificate) -> String {
    // serde_json's default map is ordered, so going through Value sorts keys.
    let value = serde_json::to_value(c).expect("certificate fields are always representable");
    serde_json::to_string_pretty(&value).expect("values serialize")
}

pub fn parse_certificate_json(text: &str) -> Result<DistinctnessCertificate, serde_json::Error> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_2_3() {
        let c = distinctness_certificate(2, 3).unwrap();
        assert_eq!(c.mode, CertificateMode::Cyclotomic);
        assert_eq!(c.phi_index, 12);
        assert_eq!(
            c.polynomials.phi,
            LaurentPoly::from_coeffs(0, [1, 0, -1, 0, 1])
        );
        assert!(c.divides_in_k);
        assert!(!c.divides_in_p);
        assert!(c.valid);
        assert!(c.recheck());
    }

    #[test]
    fn certificate_1_2_uses_unit_ideal() {
        let c = distinctness_certificate(1, 2).unwrap();
        assert_eq!(c.mode, CertificateMode::UnitIdeal);
        assert!(c.valid);
        assert!(c.recheck());
        assert!(emit_certificate_json(&c).contains("\"mode\": \"unit_ideal\""));
    }

    #[test]
    fn bad_pairs() {
        assert_eq!(
            distinctness_certificate(3, 2),
            Err(ConstructionError::BadPair { p: 3, k: 2 })
        );
        assert!(distinctness_certificate(2, 2).is_err());
        assert!(distinctness_certificate(0, 2).is_err());
    }

    #[test]
    fn json_round_trip_and_layout() {
        let c = distinctness_certificate(2, 3).unwrap();
        let text = emit_certificate_json(&c);
        assert_eq!(text, emit_certificate_json(&c));
        assert!(text.contains("\"phi_index\": 12"));
        assert!(text.contains("\"valid\": true"));
        assert!(text.contains("\"schema_version\": 1"));
        assert_eq!(parse_certificate_json(&text).unwrap(), c);
        let keys: Vec<usize> = [
            "divides_in_k",
            "divides_in_p",
            "k",
            "mode",
            "p\"",
            "phi_index",
            "polynomials",
        ]
        .iter()
        .map(|k| text.find(&format!("\"{}", k)).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let mut c = distinctness_certificate(3, 5).unwrap();
        c.polynomials.p_poly_p = c.polynomials.p_poly_k.clone();
        assert!(!c.recheck());
    }
}
