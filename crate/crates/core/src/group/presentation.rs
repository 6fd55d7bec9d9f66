use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{Generator, GroupError, Word};
use crate::algebra::{smith_normal_form, IntMatrix, SnfResult};

/// A finite presentation `⟨generators | relators⟩`.
///
/// Relators are stored freely and cyclically reduced. The `wirtinger` flag
/// marks presentations with one relator per generator of which one is a
/// consequence of the others.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    wirtinger: bool,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>, relators: Vec<Word>) -> Result<Self, GroupError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !Generator::is_valid_name(g.name()) {
                return Err(GroupError::InvalidName(g.name().to_string()));
            }
            if !seen.insert(g.clone()) {
                return Err(GroupError::DuplicateGenerator(g.clone()));
            }
        }
        let mut p = Self {
            generators,
            relators: Vec::with_capacity(relators.len()),
            wirtinger: false,
        };
        for r in relators {
            p.check_word(&r)?;
            p.relators.push(r.cyclically_reduce());
        }
        Ok(p)
    }

    /// Convenience constructor from generator names.
    pub fn from_names(names: &[&str], relators: Vec<Word>) -> Result<Self, GroupError> {
        Self::new(
            names.iter().map(|&n| Generator::from(n)).collect(),
            relators,
        )
    }

    pub fn flagged_wirtinger(mut self) -> Self {
        self.wirtinger = true;
        self
    }

    pub fn is_wirtinger(&self) -> bool {
        self.wirtinger
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, g: &Generator) -> Option<usize> {
        self.generators.iter().position(|h| h == g)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), GroupError> {
        match w
            .generators()
            .into_iter()
            .find(|g| self.generator_index(g).is_none())
        {
            Some(g) => Err(GroupError::ForeignGenerator(g)),
            None => Ok(()),
        }
    }

    /// Presentation of the quotient by the normal closure of `w`.
    pub fn add_relator(&self, w: &Word) -> Result<Presentation, GroupError> {
        self.check_word(w)?;
        let mut out = self.clone();
        out.relators.push(w.cyclically_reduce());
        Ok(out)
    }

    /// Adds a new generator `g` together with the defining relator
    /// `g · defining⁻¹` (the inverse of [`eliminate_generator`](Self::eliminate_generator)).
    pub fn introduce_generator(
        &self,
        g: Generator,
        defining: &Word,
    ) -> Result<Presentation, GroupError> {
        if self.generator_index(&g).is_some() {
            return Err(GroupError::DuplicateGenerator(g));
        }
        self.check_word(defining)?;
        let mut gens = self.generators.clone();
        gens.push(g.clone());
        let mut rels = self.relators.clone();
        rels.push(&Word::generator(g) * &defining.inverse());
        Presentation::new(gens, rels)
    }

    /// Removes `g` using a relator equivalent to `g · defining⁻¹`, replacing
    /// `g` by `defining` in every other relator.
    pub fn eliminate_generator(
        &self,
        g: &Generator,
        defining: &Word,
    ) -> Result<Presentation, GroupError> {
        let no_relator = || GroupError::NoDefiningRelator(g.clone());
        if self.generator_index(g).is_none() || defining.contains(g) {
            return Err(no_relator());
        }
        self.check_word(defining)?;
        let target = &Word::generator(g.clone()) * &defining.inverse();
        let pos = self
            .relators
            .iter()
            .position(|r| r.relator_equivalent(&target))
            .ok_or_else(no_relator)?;
        let generators = self
            .generators
            .iter()
            .filter(|h| *h != g)
            .cloned()
            .collect();
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, r)| r.substitute(g, defining))
            .collect();
        Presentation::new(generators, relators)
    }

    /// Rows are relators, columns generators.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| self.generators.iter().map(|g| r.exponent_sum(g)).collect())
            .collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, self.generators.len());
        }
        IntMatrix::from_rows(&rows)
    }

    pub fn abelianization(&self) -> AbelianizationResult {
        let snf = smith_normal_form(&self.exponent_matrix());
        AbelianizationResult::from_snf(self, snf)
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Presentation, GroupError> {
        let mut p = Presentation::new(self.generators.clone(), relators)?;
        p.wirtinger = self.wirtinger;
        Ok(p)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.generators.iter().map(Generator::name).collect();
        let rels: Vec<String> = self.relators.iter().map(ToString::to_string).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation{self}")
    }
}

/// `ℤ^free_rank ⊕ ⨁ ℤ/torsion`, plus the map onto ℤ when the group
/// abelianizes to ℤ exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationResult {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub degree_map: Option<BTreeMap<Generator, i64>>,
    pub snf_diagonal: Vec<BigInt>,
}

impl AbelianizationResult {
    fn from_snf(p: &Presentation, snf: SnfResult) -> Self {
        let n = p.generators.len();
        let diag = snf.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let torsion: Vec<BigInt> = diag
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect();
        let free_rank = n - rank;

        // g_j maps to row j of V; the free coordinates are columns rank..n
        let degree_map = (free_rank == 1 && torsion.is_empty()).then(|| {
            let free_col = n - 1;
            let mut images: Vec<i64> = (0..n)
                .map(|j| snf.v.get(j, free_col).to_i64().expect("degree fits in i64"))
                .collect();
            if images.iter().find(|d| **d != 0).is_some_and(|d| *d < 0) {
                images.iter_mut().for_each(|d| *d = -*d);
            }
            p.generators.iter().cloned().zip(images).collect()
        });
        Self {
            free_rank,
            torsion,
            degree_map,
            snf_diagonal: diag,
        }
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.degree_map.is_some()
    }
}

impl fmt::Display for AbelianizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Checks that `degree_map` kills every relator of `p`.
pub fn degree_map_is_valid(p: &Presentation, degree_map: &BTreeMap<Generator, i64>) -> bool {
    p.relators()
        .iter()
        .all(|r| r.weighted_sum(|g| degree_map.get(g).copied()) == Some(0))
}

/// gcd of the absolute values of the images; 1 exactly when the map is onto ℤ.
pub fn degree_map_gcd(degree_map: &BTreeMap<Generator, i64>) -> i64 {
    degree_map
        .values()
        .fold(0i64, |g, &d| num_integer::gcd(g, d.abs()))
}
