use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{laurent_gcd, minors, LaurentMatrix, LaurentPoly};
use crate::group::{degree_map_is_valid, Generator, Presentation};

use super::{fox_derivative, FoxError, GroupRingElement};

/// A homomorphism from the generators onto ℤ = ⟨t⟩ that kills every relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMap(BTreeMap<Generator, i64>);

impl DegreeMap {
    /// Unchecked; see [`for_presentation`](Self::for_presentation).
    pub fn new(assignment: BTreeMap<Generator, i64>) -> Self {
        Self(assignment)
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Self(
            pairs
                .iter()
                .map(|&(g, d)| (Generator::from(g), d))
                .collect(),
        )
    }

    /// The degree map of a presentation whose abelianization is ℤ.
    pub fn for_presentation(p: &Presentation) -> Result<Self, FoxError> {
        p.abelianization()
            .degree_map
            .map(Self)
            .ok_or(FoxError::NotInfiniteCyclicAbelianization)
    }

    pub fn get(&self, g: &Generator) -> Option<i64> {
        self.0.get(g).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<Generator, i64> {
        &self.0
    }

    pub fn kills_relators_of(&self, p: &Presentation) -> bool {
        degree_map_is_valid(p, &self.0)
    }
}

/// Sends each word to `t^(weighted exponent sum)`.
pub fn abelianize_element(e: &GroupRingElement, d: &DegreeMap) -> Result<LaurentPoly, FoxError> {
    let mut out = LaurentPoly::zero();
    for (w, c) in e.terms() {
        let exp = w.weighted_sum(|g| d.get(g)).ok_or_else(|| {
            let g = w
                .generators()
                .into_iter()
                .find(|g| d.get(g).is_none())
                .expect("some generator is unmapped");
            FoxError::UnmappedGenerator(g)
        })?;
        out = &out + &LaurentPoly::monomial(c.clone(), exp);
    }
    Ok(out)
}

/// The abelianized Fox Jacobian: one row per relator, one column per generator.
pub fn alexander_matrix(p: &Presentation, d: &DegreeMap) -> Result<LaurentMatrix, FoxError> {
    let rows = p
        .relators()
        .iter()
        .map(|r| {
            p.generators()
                .iter()
                .map(|g| abelianize_element(&fox_derivative(r, g), d))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LaurentMatrix::with_shape(rows, p.generators().len()))
}

/// A finitely presented ℤ[t, t⁻¹]-module: rows of `relations` are relations,
/// columns correspond to `module_generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub module_generators: Vec<String>,
    pub relations: LaurentMatrix,
}

impl ModulePresentation {
    pub fn new(module_generators: Vec<String>, relations: LaurentMatrix) -> Self {
        assert_eq!(
            module_generators.len(),
            relations.cols(),
            "one column per module generator"
        );
        Self {
            module_generators,
            relations,
        }
    }
}

/// Generators of an ideal of ℤ[t, t⁻¹]: canonical, nonzero, deduplicated.
///
/// A list containing `1` collapses to `{1}`; the empty list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerators {
    gens: Vec<LaurentPoly>,
}

impl IdealGenerators {
    pub fn new(polys: impl IntoIterator<Item = LaurentPoly>) -> Self {
        let mut gens: Vec<LaurentPoly> = Vec::new();
        for f in polys {
            let f = f.canonicalize();
            if f.is_zero() || gens.contains(&f) {
                continue;
            }
            if f.is_one() {
                return Self::unit();
            }
            gens.push(f);
        }
        Self { gens }
    }

    pub fn unit() -> Self {
        Self {
            gens: vec![LaurentPoly::one()],
        }
    }

    pub fn zero() -> Self {
        Self { gens: Vec::new() }
    }

    pub fn gens(&self) -> &[LaurentPoly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether a generator is a unit; sufficient, not necessary, for the
    /// ideal to be the whole ring.
    pub fn contains_unit(&self) -> bool {
        self.gens.iter().any(LaurentPoly::is_one)
    }

    /// Canonical gcd of the generators; `None` for the zero ideal.
    pub fn gcd(&self) -> Option<LaurentPoly> {
        laurent_gcd(&self.gens).ok()
    }

    /// Whether `f` divides every generator.
    pub fn all_divisible_by(&self, f: &LaurentPoly) -> bool {
        self.gens.iter().all(|g| f.divides(g))
    }
}

impl fmt::Display for IdealGenerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The `k`-th elementary (Fitting) ideal: the `(n−k)`-minors of `m`, where
/// `n` is the number of columns.
pub fn elementary_ideal(m: &LaurentMatrix, k: usize) -> IdealGenerators {
    let n = m.cols();
    if k >= n {
        return IdealGenerators::unit();
    }
    let size = n - k;
    if size > m.rows() {
        return IdealGenerators::zero();
    }
    IdealGenerators::new(minors(m, size).expect("size checked against both dimensions"))
}

/// Alexander polynomial of a presentation with abelianization ℤ.
///
/// Deletes the column of the first generator of nonzero degree.
pub fn alexander_polynomial(p: &Presentation) -> Result<LaurentPoly, FoxError> {
    let d = DegreeMap::for_presentation(p)?;
    let col = p
        .generators()
        .iter()
        .position(|g| d.get(g) != Some(0))
        .expect("a surjection onto Z has a generator of nonzero degree");
    alexander_polynomial_deleting(p, &d, col)
}

/// Alexander polynomial computed by deleting column `col`.
///
/// The maximal minors after deleting the column of a generator of degree `e`
/// are the first elementary ideal multiplied by `(t^|e| − 1)/(t − 1)`; that
/// factor is divided out, so every admissible column gives the same result.
pub fn alexander_polynomial_deleting(
    p: &Presentation,
    d: &DegreeMap,
    col: usize,
) -> Result<LaurentPoly, FoxError> {
    let deg = d
        .get(&p.generators()[col])
        .ok_or_else(|| FoxError::UnmappedGenerator(p.generators()[col].clone()))?;
    if deg == 0 {
        return Err(FoxError::ZeroDegreeColumn(p.generators()[col].clone()));
    }
    let mut m = alexander_matrix(p, d)?;
    if p.is_wirtinger() && m.rows() == p.generators().len() && m.rows() > 0 {
        m = m.without_row(m.rows() - 1);
    }
    let reduced = m.without_col(col);
    let size = reduced.cols();
    if size > reduced.rows() {
        return Ok(LaurentPoly::zero());
    }
    let ms = minors(&reduced, size).expect("size checked");
    let Ok(g) = laurent_gcd(&ms) else {
        return Ok(LaurentPoly::zero());
    };
    let excess = LaurentPoly::t_pow_minus_one(deg.abs())
        .divide_exact(&LaurentPoly::t_pow_minus_one(1))
        .expect("t - 1 divides t^n - 1");
    g.divide_exact(&excess)
        .map(|q| q.canonicalize())
        .map_err(|_| FoxError::Internal(format!("({excess}) does not divide the minor gcd {g}")))
}
