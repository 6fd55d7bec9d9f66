//! Laurent polynomials in one variable `t` with arbitrary-precision integer
//! coefficients, i.e. elements of ℤ[t, t⁻¹].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// A finitely supported map from exponents to nonzero integer coefficients.
///
/// The zero polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "DenseCoeffs", try_from = "DenseCoeffs")]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Dense wire form: `min_exp` plus ascending coefficients as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseCoeffs {
    pub min_exp: i64,
    pub coeffs: Vec<String>,
}

impl From<LaurentPoly> for DenseCoeffs {
    fn from(f: LaurentPoly) -> Self {
        f.to_dense()
    }
}

impl TryFrom<DenseCoeffs> for LaurentPoly {
    type Error = AlgebraError;

    fn try_from(d: DenseCoeffs) -> Result<Self, AlgebraError> {
        Self::from_dense(&d)
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds `Σ cᵢ t^(min_exp + i)`.
    pub fn from_coeffs<C: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut out = BTreeMap::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            let c = c.into();
            if !c.is_zero() {
                out.insert(min_exp + i as i64, c);
            }
        }
        Self { coeffs: out }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// `t^n − 1` for `n ≥ 0` (zero when `n = 0`).
    pub fn t_pow_minus_one(n: i64) -> Self {
        Self::from_terms([(n, 1), (0, -1)])
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for `±t^k`, the units of ℤ[t, t⁻¹].
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().all(|c| c.abs().is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Width of the support, `max_exp − min_exp`; `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Evaluation at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Unit-normal representative: multiplies by the unique `±t^k` that
    /// makes the minimum exponent 0 and the leading coefficient positive.
    pub fn canonicalize(&self) -> Self {
        let Some(min) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-min);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            -shifted
        } else {
            shifted
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// Equality up to multiplication by a unit `±t^k`.
    pub fn associated(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Exact quotient `q` with `self = q · divisor` in ℤ[t, t⁻¹].
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (Some(g_min), Some(g_max)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(AlgebraError::DivisionByZero);
        };
        let Some(f_min) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let lead = divisor.coeff(g_max);
        let g_span = g_max - g_min;
        // work on t^-f_min·f and t^-g_min·g, both with nonzero constant term
        let mut rem = self.shift(-f_min);
        let g = divisor.shift(-g_min);
        let mut quotient = Self::zero();
        while let Some(r_max) = rem.max_exp() {
            if r_max < g_span {
                return Err(AlgebraError::NotDivisible);
            }
            let (q, r) = rem.coeff(r_max).div_rem(&lead);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let k = r_max - g_span;
            rem = &rem - &g.scale(&q).shift(k);
            quotient.add_term(k, q);
        }
        Ok(quotient.shift(f_min - g_min))
    }

    /// Whether `self` divides `f` in ℤ[t, t⁻¹]. Zero divides only zero.
    pub fn divides(&self, f: &Self) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.divide_exact(self).is_ok()
    }

    pub fn to_dense(&self) -> DenseCoeffs {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => DenseCoeffs {
                min_exp: lo,
                coeffs: (lo..=hi).map(|e| self.coeff(e).to_string()).collect(),
            },
            _ => DenseCoeffs {
                min_exp: 0,
                coeffs: Vec::new(),
            },
        }
    }

    pub fn from_dense(d: &DenseCoeffs) -> Result<Self, AlgebraError> {
        let coeffs = d
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| AlgebraError::BadCoefficient(s.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(d.min_exp, coeffs))
    }
}

// Pseudo-remainder of `a` by `b` for ordinary polynomials (min exponent ≥ 0).
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let b_deg = b.max_exp().expect("nonzero divisor");
    let lead = b.leading_coeff().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while let Some(r_deg) = r.max_exp() {
        if r_deg < b_deg {
            break;
        }
        let rl = r.coeff(r_deg);
        r = &r.scale(&lead) - &b.scale(&rl).shift(r_deg - b_deg);
    }
    r
}

fn primitive_part(f: &LaurentPoly) -> LaurentPoly {
    let c = f.content();
    LaurentPoly {
        coeffs: f.coeffs.iter().map(|(e, v)| (*e, v / &c)).collect(),
    }
}

fn primitive_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.max_exp() < b.max_exp() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() { r } else { primitive_part(&r) };
    }
    a
}

/// Canonical gcd in ℤ[t, t⁻¹] of a list of Laurent polynomials.
///
/// Zero entries are ignored; the content gcd multiplies the gcd of the
/// primitive parts, which is found with a primitive remainder sequence.
pub fn laurent_gcd(fs: &[LaurentPoly]) -> Result<LaurentPoly, AlgebraError> {
    let nonzero: Vec<LaurentPoly> = fs
        .iter()
        .filter(|f| !f.is_zero())
        .map(LaurentPoly::canonicalize)
        .collect();
    let Some(first) = nonzero.first() else {
        return Err(AlgebraError::AllZero);
    };
    let mut content = first.content();
    let mut prim = primitive_part(first);
    for f in &nonzero[1..] {
        content = content.gcd(&f.content());
        if prim.max_exp() != Some(0) {
            prim = primitive_gcd(&prim, f);
        }
    }
    Ok(prim.canonicalize().scale(&content))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            match e {
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
