use std::collections::BTreeMap;

use crate::group::{Generator, GroupError, Presentation, Word};

use super::{TorusGroup, TorusLetter, TorusNF, WordProblemError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorVerdict {
    pub relator: Word,
    pub image: Word,
    pub normal_form: TorusNF,
    pub trivial: bool,
}

/// How a target generator was shown to lie in the image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurjectivityWitness {
    /// The image of this source generator equals the target generator.
    ImageOf(Generator),
    /// This word in the source generators maps to the target generator.
    Word(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub relators: Vec<RelatorVerdict>,
    pub x_witness: Option<SurjectivityWitness>,
    pub y_witness: Option<SurjectivityWitness>,
}

impl HomomorphismReport {
    pub fn is_homomorphism(&self) -> bool {
        self.relators.iter().all(|r| r.trivial)
    }

    pub fn is_surjective(&self) -> bool {
        self.is_homomorphism() && self.x_witness.is_some() && self.y_witness.is_some()
    }
}

/// Checks that `images` defines a homomorphism from `source` into `target`
/// and looks for evidence that `x` and `y` are in its image.
///
/// `witnesses` are optional words over the source generators, each claimed to
/// map to the given target generator; claims are verified, not trusted.
pub fn verify_homomorphism(
    source: &Presentation,
    target: &TorusGroup,
    images: &BTreeMap<Generator, Word>,
    witnesses: &[(TorusLetter, Word)],
) -> Result<HomomorphismReport, WordProblemError> {
    if let Some(g) = source
        .generators()
        .iter()
        .find(|g| !images.contains_key(*g))
    {
        return Err(WordProblemError::MissingImage(g.clone()));
    }
    let apply = |w: &Word| w.map_generators(|g| images.get(g).cloned());

    let relators = source
        .relators()
        .iter()
        .map(|r| {
            let image = apply(r);
            let nf = target.normal_form(&image)?;
            Ok(RelatorVerdict {
                relator: r.clone(),
                image,
                trivial: nf.is_trivial(),
                normal_form: nf,
            })
        })
        .collect::<Result<Vec<_>, WordProblemError>>()?;

    let found = |letter: TorusLetter| -> Result<Option<SurjectivityWitness>, WordProblemError> {
        let goal = target.normal_form(&Word::generator(letter.name()))?;
        for g in source.generators() {
            if target.normal_form(&images[g])? == goal {
                return Ok(Some(SurjectivityWitness::ImageOf(g.clone())));
            }
        }
        for (_, w) in witnesses.iter().filter(|(l, _)| *l == letter) {
            if let Err(GroupError::ForeignGenerator(g)) = source.check_word(w) {
                return Err(WordProblemError::ForeignGenerator(g));
            }
            if target.normal_form(&apply(w))? == goal {
                return Ok(Some(SurjectivityWitness::Word(w.clone())));
            }
        }
        Ok(None)
    };
    let x_witness = found(TorusLetter::X)?;
    let y_witness = found(TorusLetter::Y)?;
    Ok(HomomorphismReport {
        relators,
        x_witness,
        y_witness,
    })
}
