use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::group::{Generator, Word};

/// An element of the integral group ring ℤ[F] of a free group: a finite
/// ℤ-combination of reduced words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, BigInt::one())
    }

    pub fn term(w: Word, c: BigInt) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// `w · self`
    pub fn left_mul_word(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(w * v, c.clone());
        }
        out
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u * v, a * b);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs().is_one() {
                write!(f, "[{w}]")?;
            } else {
                write!(f, "{}*[{w}]", c.abs())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}

/// The Fox derivative ∂w/∂g.
///
/// For each syllable `h^e` at prefix `u`, contributes `u·∂(h^e)/∂g` where
/// `∂(g^e)/∂g = 1 + g + … + g^(e−1)` for `e > 0` and
/// `−(g^−1 + … + g^e)` for `e < 0`.
pub fn fox_derivative(w: &Word, g: &Generator) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for s in w.syllables() {
        if &s.generator == g {
            if s.exponent > 0 {
                for j in 0..s.exponent {
                    out.add_term(&prefix * &Word::power(g.clone(), j), BigInt::one());
                }
            } else {
                for j in s.exponent..0 {
                    out.add_term(&prefix * &Word::power(g.clone(), j), -BigInt::one());
                }
            }
        }
        prefix = &prefix * &Word::power(s.generator.clone(), s.exponent);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[(&str, i64)]) -> Word {
        Word::reduce(raw.iter().copied())
    }

    fn x() -> Generator {
        "x".into()
    }

    #[test]
    fn power_rule() {
        let d = fox_derivative(&Word::power("x", 3), &x());
        let expected = &(&GroupRingElement::one()
            + &GroupRingElement::from_word(Word::generator("x")))
            + &GroupRingElement::from_word(Word::power("x", 2));
        assert_eq!(d, expected);
    }

    #[test]
    fn inverse_axiom() {
        let d = fox_derivative(&Word::power("x", -1), &x());
        assert_eq!(d, -&GroupRingElement::from_word(Word::power("x", -1)));
    }

    #[test]
    fn commutator_derivative() {
        let c = w(&[("x", 1), ("y", 1), ("x", -1), ("y", -1)]);
        let d = fox_derivative(&c, &x());
        let expected = &GroupRingElement::one()
            - &GroupRingElement::from_word(w(&[("x", 1), ("y", 1), ("x", -1)]));
        assert_eq!(d, expected);
        assert!(fox_derivative(&c, &"z".into()).is_zero());
    }
}
