use std::collections::BTreeMap;

use crate::algebra::LaurentPoly;
use crate::fox::{alexander_polynomial, DegreeMap};
use crate::group::{AbelianizationResult, Generator, Word};
use crate::torus::{verify_homomorphism, HomomorphismReport, TorusConvention, TorusGroup, TorusNF};

use super::gamma::gamma_presentation;
use super::torus::{check_p, tau_word, torus_wirtinger, WirtingerDictionary};
use super::{ConstructionError, TorusKnotParams};

/// Consequences of killing τ = [a1, a1…ap] in the group of T(p, p+1).
#[derive(Clone, Debug)]
pub struct TauReport {
    pub p: i64,
    pub tau: Word,
    /// Image of τ in ℤ; the linking number with the knot.
    pub degree: i64,
    pub image: Word,
    pub image_normal_form: TorusNF,
    pub image_in_commutator_subgroup: bool,
    pub quotient_abelianization: AbelianizationResult,
    pub quotient_alexander: LaurentPoly,
}

impl TauReport {
    pub fn image_nontrivial(&self) -> bool {
        !self.image_normal_form.is_trivial()
    }

    pub fn verified(&self) -> bool {
        self.degree == 0
            && self.image_nontrivial()
            && self.image_in_commutator_subgroup
            && self.quotient_abelianization.is_infinite_cyclic()
            && self.quotient_alexander.is_one()
    }
}

pub fn verify_tau(p: i64) -> Result<TauReport, ConstructionError> {
    let wirtinger = torus_wirtinger(p)?;
    let tau = tau_word(p)?;
    let degree_map = DegreeMap::for_presentation(&wirtinger)?;
    let degree = tau.weighted_sum(|g| degree_map.get(g)).ok_or_else(|| {
        ConstructionError::Internal("tau uses a generator without a degree".into())
    })?;

    let dictionary = WirtingerDictionary::new(p)?;
    let target = TorusGroup::new(
        TorusKnotParams::consecutive(p)?,
        TorusConvention::ProductTrivial,
    )?;
    let image = dictionary.apply(&tau);
    let image_normal_form = target.normal_form(&image)?;
    let image_in_commutator_subgroup = target.is_in_commutator_subgroup(&image)?;

    let quotient = wirtinger.add_relator(&tau)?;
    Ok(TauReport {
        p,
        degree,
        image_normal_form,
        image_in_commutator_subgroup,
        image,
        tau,
        quotient_abelianization: quotient.abelianization(),
        quotient_alexander: alexander_polynomial(&quotient)?,
    })
}

/// `u ↦ x, v ↦ y, x ↦ x, y ↦ y`
pub fn fold_images() -> BTreeMap<Generator, Word> {
    [("u", "x"), ("v", "y"), ("x", "x"), ("y", "y")]
        .into_iter()
        .map(|(s, t)| (Generator::from(s), Word::generator(t)))
        .collect()
}

/// The fold Γ_p → ⟨x, y | x^p y^(p+1)⟩.
pub fn fold_check(p: i64) -> Result<HomomorphismReport, ConstructionError> {
    check_p(p, 2)?;
    let target = TorusGroup::new(
        TorusKnotParams::consecutive(p)?,
        TorusConvention::ProductTrivial,
    )?;
    Ok(verify_homomorphism(
        &gamma_presentation(p)?,
        &target,
        &fold_images(),
        &[],
    )?)
}
