use std::fmt;

use crate::group::{Generator, Word};
use crate::knots::TorusKnotParams;

use super::WordProblemError;

/// Which relation the generators `x`, `y` satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusConvention {
    /// `x^p = y^q`
    PowersEqual,
    /// `x^p y^q = 1`, the relator form of [`standard_presentation`](crate::knots::standard_presentation).
    ProductTrivial,
}

impl fmt::Display for TorusConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorusConvention::PowersEqual => "x^p = y^q",
            TorusConvention::ProductTrivial => "x^p y^q = 1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusLetter {
    X,
    Y,
}

impl TorusLetter {
    pub fn name(self) -> &'static str {
        match self {
            TorusLetter::X => "x",
            TorusLetter::Y => "y",
        }
    }

    fn from_generator(g: &Generator) -> Option<Self> {
        match g.name() {
            "x" => Some(TorusLetter::X),
            "y" => Some(TorusLetter::Y),
            _ => None,
        }
    }
}

/// `c^m · s` with `c = x^p = y^q` central and `s` an alternating product of
/// `x^i` (1 ≤ i < p) and `y^j` (1 ≤ j < q), both in the `x^p = y^q`
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusNF {
    pub params: TorusKnotParams,
    pub central_exponent: i64,
    pub syllables: Vec<(TorusLetter, i64)>,
}

impl TorusNF {
    pub fn is_trivial(&self) -> bool {
        self.central_exponent == 0 && self.syllables.is_empty()
    }
}

impl fmt::Display for TorusNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        if self.central_exponent != 0 {
            parts.push(format!("c^{}", self.central_exponent));
        }
        parts.extend(
            self.syllables
                .iter()
                .map(|(l, e)| format!("{}^{e}", l.name())),
        );
        f.write_str(&parts.join(" "))
    }
}

/// The torus knot group on generators `x`, `y` under a fixed convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusGroup {
    params: TorusKnotParams,
    convention: TorusConvention,
}

impl TorusGroup {
    /// Requires `p, q ≥ 2`; smaller orders make the group abelian.
    pub fn new(
        params: TorusKnotParams,
        convention: TorusConvention,
    ) -> Result<Self, WordProblemError> {
        if params.p() < 2 || params.q() < 2 {
            return Err(WordProblemError::BadParams {
                p: params.p(),
                q: params.q(),
            });
        }
        Ok(Self { params, convention })
    }

    pub fn params(&self) -> TorusKnotParams {
        self.params
    }

    pub fn convention(&self) -> TorusConvention {
        self.convention
    }

    fn order(&self, l: TorusLetter) -> i64 {
        match l {
            TorusLetter::X => self.params.p(),
            TorusLetter::Y => self.params.q(),
        }
    }

    /// The defining relator in this convention.
    pub fn relator(&self) -> Word {
        let (p, q) = (self.params.p(), self.params.q());
        match self.convention {
            TorusConvention::PowersEqual => Word::reduce([("x", p), ("y", -q)]),
            TorusConvention::ProductTrivial => Word::reduce([("x", p), ("y", q)]),
        }
    }

    /// Image in ℤ of `x` and `y` under the abelianization.
    pub fn degrees(&self) -> (i64, i64) {
        let (p, q) = (self.params.p(), self.params.q());
        match self.convention {
            TorusConvention::PowersEqual => (q, p),
            TorusConvention::ProductTrivial => (q, -p),
        }
    }

    pub fn normal_form(&self, w: &Word) -> Result<TorusNF, WordProblemError> {
        let mut central = 0i64;
        let mut stack: Vec<(TorusLetter, i64)> = Vec::new();
        for s in w.syllables() {
            let letter = TorusLetter::from_generator(&s.generator)
                .ok_or_else(|| WordProblemError::ForeignGenerator(s.generator.clone()))?;
            let mut e = s.exponent;
            if letter == TorusLetter::Y && self.convention == TorusConvention::ProductTrivial {
                e = -e;
            }
            let ord = self.order(letter);
            central += e.div_euclid(ord);
            let r = e.rem_euclid(ord);
            if r == 0 {
                continue;
            }
            match stack.last_mut() {
                Some((top, exp)) if *top == letter => {
                    *exp += r;
                    if *exp >= ord {
                        *exp -= ord;
                        central += 1;
                    }
                    if *exp == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((letter, r)),
            }
        }
        Ok(TorusNF {
            params: self.params,
            central_exponent: central,
            syllables: stack,
        })
    }

    /// A word in this convention's generators representing `nf`.
    pub fn nf_to_word(&self, nf: &TorusNF) -> Word {
        let y_sign = match self.convention {
            TorusConvention::PowersEqual => 1,
            TorusConvention::ProductTrivial => -1,
        };
        let central = Word::power("x", self.params.p() * nf.central_exponent);
        let rest: Word = nf
            .syllables
            .iter()
            .map(|&(l, e)| match l {
                TorusLetter::X => Word::power("x", e),
                TorusLetter::Y => Word::power("y", y_sign * e),
            })
            .collect();
        &central * &rest
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool, WordProblemError> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Whether `w` lies in the commutator subgroup, i.e. has degree zero.
    pub fn is_in_commutator_subgroup(&self, w: &Word) -> Result<bool, WordProblemError> {
        let (dx, dy) = self.degrees();
        let mut total = 0;
        for s in w.syllables() {
            match TorusLetter::from_generator(&s.generator) {
                Some(TorusLetter::X) => total += dx * s.exponent,
                Some(TorusLetter::Y) => total += dy * s.exponent,
                None => return Err(WordProblemError::ForeignGenerator(s.generator.clone())),
            }
        }
        Ok(total == 0)
    }
}

/// Normal form in `⟨x, y | x^p = y^q⟩`.
pub fn normal_form(tk: TorusKnotParams, w: &Word) -> Result<TorusNF, WordProblemError> {
    TorusGroup::new(tk, TorusConvention::PowersEqual)?.normal_form(w)
}
