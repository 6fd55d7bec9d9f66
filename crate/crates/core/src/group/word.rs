use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// A named generator of a free group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Generator(String);

impl Generator {
    pub fn new(name: impl Into<String>) -> Self {
        Self(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Letters, digits and underscores only; nonempty.
    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

impl From<&str> for Generator {
    fn from(s: &str) -> Self {
        Self::new(s)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `generator^exponent` with a nonzero exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

/// A freely reduced word in a free group: no zero exponents and no two
/// adjacent syllables on the same generator. The identity is empty.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: impl Into<Generator>) -> Self {
        Self::power(g, 1)
    }

    /// `g^k`
    pub fn power(g: impl Into<Generator>, k: i64) -> Self {
        Self::reduce([(g.into(), k)])
    }

    /// Freely reduces a raw syllable sequence.
    pub fn reduce<G: Into<Generator>>(raw: impl IntoIterator<Item = (G, i64)>) -> Self {
        let mut out: Vec<Syllable> = Vec::new();
        for (g, e) in raw {
            push_syllable(&mut out, g.into(), e);
        }
        Self { syllables: out }
    }

    /// Product of words given as plain letter lists, e.g. `&["a1", "a2"]`.
    pub fn from_letters(letters: &[&str]) -> Self {
        Self::reduce(letters.iter().map(|&l| (l, 1)))
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn num_syllables(&self) -> usize {
        self.syllables.len()
    }

    /// Length as a product of letters `g^{±1}`.
    pub fn letter_len(&self) -> u64 {
        self.syllables
            .iter()
            .map(|s| s.exponent.unsigned_abs())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        Self {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    generator: s.generator.clone(),
                    exponent: -s.exponent,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    pub fn commutator(a: &Word, b: &Word) -> Self {
        &(&(a * b) * &a.inverse()) * &b.inverse()
    }

    /// `c w c⁻¹`
    pub fn conjugate_by(&self, c: &Word) -> Self {
        &(c * self) * &c.inverse()
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.syllables.iter().map(|s| s.generator.clone()).collect()
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.syllables.iter().any(|s| &s.generator == g)
    }

    pub fn exponent_sum(&self, g: &Generator) -> i64 {
        self.syllables
            .iter()
            .filter(|s| &s.generator == g)
            .map(|s| s.exponent)
            .sum()
    }

    pub fn exponent_sums(&self) -> BTreeMap<Generator, i64> {
        let mut out = BTreeMap::new();
        for s in &self.syllables {
            *out.entry(s.generator.clone()).or_insert(0) += s.exponent;
        }
        out
    }

    /// Weighted exponent sum `Σ weight(g)·e` over the syllables; `None` if a
    /// generator has no weight.
    pub fn weighted_sum(&self, weight: impl Fn(&Generator) -> Option<i64>) -> Option<i64> {
        self.syllables
            .iter()
            .map(|s| weight(&s.generator).map(|w| w * s.exponent))
            .sum()
    }

    /// Replaces every `g^{±1}` by `replacement^{±1}` and reduces.
    pub fn substitute(&self, g: &Generator, replacement: &Word) -> Word {
        self.map_generators(|h| (h == g).then(|| replacement.clone()))
    }

    /// Simultaneous substitution: generators for which `f` returns `None`
    /// are kept.
    pub fn map_generators(&self, f: impl Fn(&Generator) -> Option<Word>) -> Word {
        let mut out: Vec<Syllable> = Vec::new();
        for s in &self.syllables {
            match f(&s.generator) {
                None => push_syllable(&mut out, s.generator.clone(), s.exponent),
                Some(image) => {
                    let piece = if s.exponent < 0 {
                        image.inverse()
                    } else {
                        image
                    };
                    for _ in 0..s.exponent.unsigned_abs() {
                        for p in &piece.syllables {
                            push_syllable(&mut out, p.generator.clone(), p.exponent);
                        }
                    }
                }
            }
        }
        Word { syllables: out }
    }

    /// Strips conjugating syllables until the first and last syllables are on
    /// different generators.
    pub fn cyclically_reduce(&self) -> Word {
        let mut s = self.syllables.clone();
        while s.len() >= 2 && s[0].generator == s[s.len() - 1].generator {
            let last = s.pop().expect("len >= 2");
            let merged = s[0].exponent + last.exponent;
            if merged == 0 {
                s.remove(0);
            } else {
                s[0].exponent = merged;
            }
        }
        Word { syllables: s }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        *self == self.cyclically_reduce()
    }

    /// Rotations at syllable boundaries of the cyclic reduction.
    pub fn cyclic_permutations(&self) -> Vec<Word> {
        let base = self.cyclically_reduce();
        let n = base.syllables.len();
        if n == 0 {
            return vec![base];
        }
        (0..n)
            .map(|i| {
                let mut s = base.syllables[i..].to_vec();
                s.extend_from_slice(&base.syllables[..i]);
                Word { syllables: s }
            })
            .collect()
    }

    /// Equality of the relators `self` and `other`, i.e. up to conjugation
    /// and inversion.
    pub fn relator_equivalent(&self, other: &Word) -> bool {
        let a = self.cyclically_reduce();
        let b = other.cyclically_reduce();
        if a.syllables.len() != b.syllables.len() {
            return false;
        }
        let b_inv = b.inverse();
        a.cyclic_permutations()
            .iter()
            .any(|r| *r == b || *r == b_inv)
    }

    /// Splits into single letters `(g, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.syllables.iter().flat_map(|s| {
            std::iter::repeat_n(
                (&s.generator, s.exponent.signum()),
                s.exponent.unsigned_abs() as usize,
            )
        })
    }
}

fn push_syllable(out: &mut Vec<Syllable>, g: Generator, e: i64) {
    if e == 0 {
        return;
    }
    match out.last_mut() {
        Some(last) if last.generator == g => {
            last.exponent += e;
            if last.exponent == 0 {
                out.pop();
            }
        }
        _ => out.push(Syllable {
            generator: g,
            exponent: e,
        }),
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.syllables.clone();
        for s in &rhs.syllables {
            push_syllable(&mut out, s.generator.clone(), s.exponent);
        }
        Word { syllables: out }
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl FromIterator<Word> for Word {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        iter.into_iter().fold(Word::identity(), |acc, w| &acc * &w)
    }
}

/// Tokens `g` or `g^k`, space separated; the identity prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        f.write_str(&self.tokens())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Word {
    /// The token form used in presentation files; empty for the identity.
    pub fn tokens(&self) -> String {
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| match s.exponent {
                1 => s.generator.to_string(),
                e => format!("{}^{}", s.generator, e),
            })
            .collect();
        parts.join(" ")
    }
}
