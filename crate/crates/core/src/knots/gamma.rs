use crate::algebra::{LaurentMatrix, LaurentPoly};
use crate::fox::{
    alexander_matrix, elementary_ideal, DegreeMap, IdealGenerators, ModulePresentation,
};
use crate::group::{AbelianizationResult, Generator, Presentation, Word};

use super::torus::check_p;
use super::ConstructionError;

/// `⟨u, v, x, y | u^p v^(p+1), x^p y^(p+1), u v (x y)⁻¹, v u (y x)⁻¹⟩`
pub fn gamma_presentation(p: i64) -> Result<Presentation, ConstructionError> {
    check_p(p, 1)?;
    let rels = vec![
        Word::reduce([("u", p), ("v", p + 1)]),
        Word::reduce([("x", p), ("y", p + 1)]),
        Word::reduce([("u", 1), ("v", 1), ("y", -1), ("x", -1)]),
        Word::reduce([("v", 1), ("u", 1), ("x", -1), ("y", -1)]),
    ];
    Ok(Presentation::from_names(&["u", "v", "x", "y"], rels)?)
}

fn t_pow(k: i64) -> Word {
    Word::power("t", k)
}

fn conj_by_t(k: i64, g: &str, e: i64) -> Word {
    Word::power(g, e).conjugate_by(&t_pow(k))
}

/// `∏_{k<p} t^(k(p+1)+1) g⁻¹ t^−(k(p+1)+1) · ∏_{k≤p} t^(p²−kp) g t^−(p²−kp)`
pub fn tab_product_relator(p: i64, g: &str) -> Word {
    let negative = (0..p).map(|k| conj_by_t(k * (p + 1) + 1, g, -1));
    let positive = (0..=p).map(|k| conj_by_t(p * p - k * p, g, 1));
    negative.chain(positive).collect()
}

/// The t, a, b presentation written out term by term.
pub fn gamma_tab_literal(p: i64) -> Result<Presentation, ConstructionError> {
    check_p(p, 1)?;
    let exchange = Word::reduce([
        ("a", 1),
        ("t", 1),
        ("a", -1),
        ("t", -1),
        ("t", 1),
        ("b", 1),
        ("t", -1),
        ("b", -1),
    ]);
    let rels = vec![
        tab_product_relator(p, "a"),
        tab_product_relator(p, "b"),
        exchange,
    ];
    Ok(Presentation::from_names(&["t", "a", "b"], rels)?)
}

/// One Tietze move of the change of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TietzeStep {
    pub description: String,
    pub presentation: Presentation,
}

/// Γ_p rewritten in `t = xy`, `a = t^p v`, `b = t^p y` by checked Tietze
/// moves, with the trace of intermediate presentations.
pub fn gamma_tab_by_substitution(
    p: i64,
) -> Result<(Presentation, Vec<TietzeStep>), ConstructionError> {
    let mut steps = Vec::new();
    let mut cur = gamma_presentation(p)?;
    let mut record = |description: String, pres: &Presentation| {
        steps.push(TietzeStep {
            description,
            presentation: pres.clone(),
        })
    };

    let t = Word::generator("t");
    let tp = t_pow(p);
    let introductions = [
        ("t", Word::from_letters(&["x", "y"])),
        ("a", &tp * &Word::generator("v")),
        ("b", &tp * &Word::generator("y")),
    ];
    for (g, def) in introductions {
        cur = cur.introduce_generator(Generator::from(g), &def)?;
        record(format!("introduce {g} = {def}"), &cur);
    }

    let t_inv_p = t_pow(-p);
    let eliminations = [
        ("v", &t_inv_p * &Word::generator("a")),
        ("y", &t_inv_p * &Word::generator("b")),
        ("x", &(&t * &Word::power("b", -1)) * &tp),
        ("u", &(&t * &Word::power("a", -1)) * &tp),
    ];
    for (g, def) in eliminations {
        cur = cur.eliminate_generator(&Generator::from(g), &def)?;
        record(format!("eliminate {g} = {def}"), &cur);
    }
    Ok((cur, steps))
}

/// The t, a, b presentation, built by substitution and checked relator by
/// relator against the literal formulas.
pub fn gamma_tab_presentation(p: i64) -> Result<Presentation, ConstructionError> {
    let (by_substitution, _) = gamma_tab_by_substitution(p)?;
    let literal = gamma_tab_literal(p)?;
    if by_substitution.generators() != literal.generators() {
        return Err(ConstructionError::Mismatch(format!(
            "generator lists differ: {by_substitution} vs {literal}"
        )));
    }
    if by_substitution.relators() != literal.relators() {
        return Err(ConstructionError::Mismatch(format!(
            "relators differ: {by_substitution} vs {literal}"
        )));
    }
    Ok(literal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PForm {
    /// `Σ_{k=0}^{p} t^(p²−kp) − Σ_{k=0}^{p−1} t^(k(p+1)+1)`
    Sum,
    /// `(t^(p(p+1)) − 1)(t − 1) / ((t^(p+1) − 1)(t^p − 1))`
    Closed,
}

/// The Alexander polynomial 𝔭_p of T(p, p+1), canonicalized.
pub fn p_poly(p: i64, form: PForm) -> Result<LaurentPoly, ConstructionError> {
    check_p(p, 1)?;
    let out = match form {
        PForm::Sum => {
            let pos = (0..=p).map(|k| (p * p - k * p, 1));
            let neg = (0..p).map(|k| (k * (p + 1) + 1, -1));
            LaurentPoly::from_terms(pos.chain(neg))
        }
        PForm::Closed => {
            let num = LaurentPoly::t_pow_minus_one(p * (p + 1)) * LaurentPoly::t_pow_minus_one(1);
            let den = LaurentPoly::t_pow_minus_one(p + 1) * LaurentPoly::t_pow_minus_one(p);
            num.divide_exact(&den)
                .map_err(|e| ConstructionError::Internal(format!("closed form of p_{p}: {e}")))?
        }
    };
    Ok(out.canonicalize())
}

/// The relation matrix `[[𝔭, 0], [0, 𝔭], [1−t, −(1−t)]]` on module
/// generators `a`, `b`, and its 2×2-minor ideal.
pub fn order_ideal(p: i64) -> Result<(ModulePresentation, IdealGenerators), ConstructionError> {
    let pp = p_poly(p, PForm::Sum)?;
    let one_minus_t = LaurentPoly::from_coeffs(0, [1, -1]);
    let relations = LaurentMatrix::from_rows(vec![
        vec![pp.clone(), LaurentPoly::zero()],
        vec![LaurentPoly::zero(), pp],
        vec![one_minus_t.clone(), -one_minus_t],
    ]);
    let module = ModulePresentation::new(vec!["a".into(), "b".into()], relations);
    let ideal = elementary_ideal(&module.relations, 0);
    Ok((module, ideal))
}

/// Everything computed for one Γ_p.
#[derive(Clone, Debug)]
pub struct GammaArtifacts {
    pub p: i64,
    pub presentation: Presentation,
    pub tab_presentation: Presentation,
    pub abelianization: AbelianizationResult,
    pub p_poly: LaurentPoly,
    pub module_presentation: ModulePresentation,
    pub order_ideal: IdealGenerators,
    /// E₁ of the Fox matrix of the four-generator presentation.
    pub fox_ideal: IdealGenerators,
    /// E₁ of the Fox matrix of the t, a, b presentation.
    pub fox_ideal_tab: IdealGenerators,
    /// Framing defect λ(γ_p) = p + 1; a recorded constant, not computed.
    pub framing_defect: i64,
}

impl GammaArtifacts {
    pub fn build(p: i64) -> Result<Self, ConstructionError> {
        let presentation = gamma_presentation(p)?;
        let tab_presentation = gamma_tab_presentation(p)?;
        let sum = p_poly(p, PForm::Sum)?;
        let closed = p_poly(p, PForm::Closed)?;
        if sum != closed {
            return Err(ConstructionError::Internal(format!(
                "p_{p}: sum form {sum} != closed form {closed}"
            )));
        }
        let (module_presentation, order_ideal) = order_ideal(p)?;
        let fox_e1 = |pres: &Presentation| -> Result<IdealGenerators, ConstructionError> {
            let d = DegreeMap::for_presentation(pres)?;
            Ok(elementary_ideal(&alexander_matrix(pres, &d)?, 1))
        };
        Ok(Self {
            p,
            abelianization: presentation.abelianization(),
            fox_ideal: fox_e1(&presentation)?,
            fox_ideal_tab: fox_e1(&tab_presentation)?,
            presentation,
            tab_presentation,
            p_poly: sum,
            module_presentation,
            order_ideal,
            framing_defect: p + 1,
        })
    }

    /// Whether the Fox-calculus ideal has the same gcd as the order ideal.
    pub fn fox_gcd_matches(&self) -> bool {
        self.fox_ideal.gcd() == self.order_ideal.gcd()
    }
}

/// One rewriting step of the consistency check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionStep {
    pub rule: String,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub start: Word,
    pub steps: Vec<SubstitutionStep>,
    /// `(xy)·w·(xy)⁻¹ · r` after the steps, where `r` is the rewritten
    /// fourth relator; empty exactly when the check passes.
    pub residue: Word,
}

impl ConsistencyReport {
    pub fn verified(&self) -> bool {
        self.residue.is_identity()
    }
}

/// Checks that killing `[a1, y]·[b1, v]⁻¹` with `a1 = (xy)⁻¹`, `b1 = (uv)⁻¹`
/// and `uv = xy` is the same as imposing `fourth_relator`.
pub fn check_gamma_consistency(fourth_relator: &Word) -> ConsistencyReport {
    let g = |n: &str| Word::generator(n);
    let start =
        &Word::commutator(&g("a1"), &g("y")) * &Word::commutator(&g("b1"), &g("v")).inverse();
    let rules = [
        ("a1", Word::from_letters(&["x", "y"]).inverse()),
        ("b1", Word::from_letters(&["u", "v"]).inverse()),
        ("u", Word::reduce([("x", 1), ("y", 1), ("v", -1)])),
    ];
    let mut steps = Vec::new();
    let mut cur = start.clone();
    for (name, image) in &rules {
        cur = cur.substitute(&Generator::from(*name), image);
        steps.push(SubstitutionStep {
            rule: format!("{name} -> {image}"),
            result: cur.clone(),
        });
    }
    let (u_name, u_image) = &rules[2];
    let rel = fourth_relator.substitute(&Generator::from(*u_name), u_image);
    let residue = &cur.conjugate_by(&Word::from_letters(&["x", "y"])) * &rel;
    ConsistencyReport {
        start,
        steps,
        residue,
    }
}

/// Runs [`check_gamma_consistency`] on the relator `vu = yx` of Γ_p.
pub fn derive_gamma_consistency(p: i64) -> Result<ConsistencyReport, ConstructionError> {
    check_p(p, 2)?;
    let gamma = gamma_presentation(p)?;
    Ok(check_gamma_consistency(&gamma.relators()[3]))
}
