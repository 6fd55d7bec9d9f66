use std::collections::BTreeMap;

use crate::group::{Generator, Presentation, Word};
use crate::torus::{
    verify_homomorphism, HomomorphismReport, TorusConvention, TorusGroup, TorusLetter,
};

use super::{ConstructionError, TorusKnotParams};

pub(crate) fn check_p(p: i64, min: i64) -> Result<(), ConstructionError> {
    if p < min {
        return Err(ConstructionError::InvalidP(p));
    }
    Ok(())
}

fn strand(prefix: &str, k: i64) -> Generator {
    Generator::new(format!("{prefix}{k}"))
}

/// `gens: over, s1, …, sp` with relators `over = s1…sp·s1` and
/// `over·s(k+1)·over⁻¹ = sk` (indices mod p).
fn twisted_stack(over: &str, strand_prefix: &str, p: i64) -> (Vec<Generator>, Vec<Word>) {
    let over_g = Generator::from(over);
    let s = |k: i64| Word::generator(strand(strand_prefix, k));
    let mut gens = vec![over_g.clone()];
    gens.extend((1..=p).map(|k| strand(strand_prefix, k)));

    let over_w = Word::generator(over_g);
    let product: Word = (1..=p).map(s).chain([s(1)]).collect();
    let mut relators = vec![&over_w * &product.inverse()];
    // over·s1·over⁻¹ = sp, then over·s(k+1)·over⁻¹ = sk
    relators.push(&s(1).conjugate_by(&over_w) * &s(p).inverse());
    for k in 1..p {
        relators.push(&s(k + 1).conjugate_by(&over_w) * &s(k).inverse());
    }
    (gens, relators)
}

/// Wirtinger-style presentation of T(p, p+1):
/// `⟨z, a1…ap | z = a1…ap·a1, z a1 z⁻¹ = ap, z a(k+1) z⁻¹ = ak⟩`.
///
/// Flagged Wirtinger: its last relator follows from the others.
pub fn torus_wirtinger(p: i64) -> Result<Presentation, ConstructionError> {
    check_p(p, 2)?;
    let (gens, rels) = twisted_stack("z", "a", p);
    Ok(Presentation::new(gens, rels)?.flagged_wirtinger())
}

/// `a1 · a2 · … · ap`, the element the construction calls `y`.
pub fn strand_product(prefix: &str, p: i64) -> Word {
    (1..=p)
        .map(|k| Word::generator(strand(prefix, k)))
        .collect()
}

/// τ = [a1, a1…ap] in the group of [`torus_wirtinger`].
pub fn tau_word(p: i64) -> Result<Word, ConstructionError> {
    check_p(p, 2)?;
    Ok(Word::commutator(
        &Word::generator("a1"),
        &strand_product("a", p),
    ))
}

/// `⟨x, y | x^p y^q⟩`
pub fn standard_presentation(tk: TorusKnotParams) -> Presentation {
    Presentation::from_names(
        &["x", "y"],
        vec![Word::reduce([("x", tk.p()), ("y", tk.q())])],
    )
    .expect("fixed generator names")
}

/// The gluing of two copies of the T(p, p+1) complement: generators
/// `z, a1…ap, w, b1…bp`, both Wirtinger families and the meridian
/// identification `a1 = b1`. Also returns `[a1, a1…ap]·[b1, b1…bp]⁻¹`.
pub fn double_presentation(p: i64) -> Result<(Presentation, Word), ConstructionError> {
    check_p(p, 2)?;
    let (mut gens, mut rels) = twisted_stack("z", "a", p);
    let (gens_b, rels_b) = twisted_stack("w", "b", p);
    gens.extend(gens_b);
    rels.extend(rels_b);
    rels.push(Word::reduce([("a1", 1), ("b1", -1)]));
    let tau_a = Word::commutator(&Word::generator("a1"), &strand_product("a", p));
    let tau_b = Word::commutator(&Word::generator("b1"), &strand_product("b", p));
    Ok((Presentation::new(gens, rels)?, &tau_a * &tau_b.inverse()))
}

/// Images of the Wirtinger generators in `⟨x, y | x^p y^(p+1)⟩`.
///
/// From `x = a1⁻¹y⁻¹` with `y = a1…ap` and `z = y·a1` one gets `z = x⁻¹`,
/// `a1 = y⁻¹x⁻¹`, and `a(k+1) = z⁻¹ ak z`, hence `ak ↦ x^(k−1) y⁻¹ x^(−k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerDictionary {
    pub p: i64,
    pub images: BTreeMap<Generator, Word>,
    /// Words in the Wirtinger generators claimed to map to `x` and `y`.
    pub witnesses: Vec<(TorusLetter, Word)>,
}

impl WirtingerDictionary {
    pub fn new(p: i64) -> Result<Self, ConstructionError> {
        check_p(p, 2)?;
        let mut images = BTreeMap::new();
        images.insert(Generator::from("z"), Word::power("x", -1));
        for k in 1..=p {
            images.insert(
                strand("a", k),
                Word::reduce([("x", k - 1), ("y", -1), ("x", -k)]),
            );
        }
        let witnesses = vec![
            (TorusLetter::X, Word::power("z", -1)),
            (TorusLetter::Y, strand_product("a", p)),
        ];
        Ok(Self {
            p,
            images,
            witnesses,
        })
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.map_generators(|g| self.images.get(g).cloned())
    }

    /// Verifies the dictionary as a map into T(p, p+1) under `convention`.
    pub fn verify(
        &self,
        convention: TorusConvention,
    ) -> Result<HomomorphismReport, ConstructionError> {
        let target = TorusGroup::new(TorusKnotParams::consecutive(self.p)?, convention)?;
        Ok(verify_homomorphism(
            &torus_wirtinger(self.p)?,
            &target,
            &self.images,
            &self.witnesses,
        )?)
    }

    /// Conventions under which every Wirtinger relator maps to the identity.
    pub fn verified_conventions(&self) -> Result<Vec<TorusConvention>, ConstructionError> {
        let mut out = Vec::new();
        for c in [
            TorusConvention::ProductTrivial,
            TorusConvention::PowersEqual,
        ] {
            if self.verify(c)?.is_homomorphism() {
                out.push(c);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[(&str, i64)]) -> Word {
        Word::reduce(raw.iter().copied())
    }

    #[test]
    fn wirtinger_p2_matches_quoted_presentation() {
        let p = torus_wirtinger(2).unwrap();
        let names: Vec<&str> = p.generators().iter().map(Generator::name).collect();
        assert_eq!(names, ["z", "a1", "a2"]);
        assert_eq!(
            p.relators(),
            &[
                w(&[("z", 1), ("a1", -1), ("a2", -1), ("a1", -1)]),
                w(&[("z", 1), ("a1", 1), ("z", -1), ("a2", -1)]),
                w(&[("z", 1), ("a2", 1), ("z", -1), ("a1", -1)]),
            ]
        );
        assert!(p.is_wirtinger());
    }

    #[test]
    fn wirtinger_p3_shape() {
        let p = torus_wirtinger(3).unwrap();
        assert_eq!(p.generators().len(), 4);
        assert_eq!(p.relators().len(), 4);
        assert_eq!(
            p.relators()[3],
            w(&[("z", 1), ("a3", 1), ("z", -1), ("a2", -1)])
        );
        assert_eq!(torus_wirtinger(1), Err(ConstructionError::InvalidP(1)));
    }

    #[test]
    fn tau_words() {
        assert_eq!(
            tau_word(2).unwrap(),
            w(&[("a1", 2), ("a2", 1), ("a1", -1), ("a2", -1), ("a1", -1)])
        );
        let t3 = tau_word(3).unwrap();
        assert_eq!(
            t3,
            w(&[
                ("a1", 2),
                ("a2", 1),
                ("a3", 1),
                ("a1", -1),
                ("a3", -1),
                ("a2", -1),
                ("a1", -1)
            ])
        );
        assert!(t3.exponent_sums().values().all(|&e| e == 0));
        assert!(tau_word(1).is_err());
    }

    #[test]
    fn standard_presentations_and_degrees() {
        let tk = TorusKnotParams::new(3, 4).unwrap();
        let p = standard_presentation(tk);
        assert_eq!(p.relators(), &[w(&[("x", 3), ("y", 4)])]);
        let dm = p.abelianization().degree_map.unwrap();
        assert_eq!(dm[&Generator::from("x")], 4);
        assert_eq!(dm[&Generator::from("y")], -3);
    }

    #[test]
    fn double_counts_and_abelianization() {
        let (p, word) = double_presentation(2).unwrap();
        assert_eq!(p.generators().len(), 6);
        assert_eq!(p.relators().len(), 7);
        assert!(word.exponent_sums().values().all(|&e| e == 0));
        let ab = p.abelianization();
        let dm = ab.degree_map.expect("abelianizes to Z");
        for g in ["a1", "a2", "b1", "b2"] {
            assert_eq!(dm[&Generator::from(g)], 1, "{g}");
        }
        assert_eq!(dm[&Generator::from("z")], 3);
    }

    #[test]
    fn double_without_meridian_identification_is_z_squared() {
        let (p, _) = double_presentation(3).unwrap();
        let mut rels = p.relators().to_vec();
        rels.pop();
        let free_product = Presentation::new(p.generators().to_vec(), rels).unwrap();
        assert_eq!(free_product.abelianization().free_rank, 2);
    }

    #[test]
    fn dictionary_lands_in_product_trivial_convention() {
        for p in 2..=5 {
            let d = WirtingerDictionary::new(p).unwrap();
            assert_eq!(
                d.verified_conventions().unwrap(),
                vec![TorusConvention::ProductTrivial],
                "p = {p}"
            );
            let report = d.verify(TorusConvention::ProductTrivial).unwrap();
            assert!(report.is_surjective());
        }
    }

    #[test]
    fn dictionary_sends_meridian_to_degree_one() {
        for p in 2..=5 {
            let d = WirtingerDictionary::new(p).unwrap();
            let g = TorusGroup::new(
                TorusKnotParams::consecutive(p).unwrap(),
                TorusConvention::ProductTrivial,
            )
            .unwrap();
            let (dx, dy) = g.degrees();
            let image = &d.images[&Generator::from("a1")];
            let degree = image.weighted_sum(|h| match h.name() {
                "x" => Some(dx),
                "y" => Some(dy),
                _ => None,
            });
            assert_eq!(degree.map(i64::abs), Some(1), "p = {p}");
        }
    }
}
