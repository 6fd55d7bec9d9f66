use std::collections::BTreeSet;
use std::fmt::{self, Write};
use std::path::Path;

use knotgroup::fox::{alexander_polynomial, FoxError, IdealGenerators};
use knotgroup::group::text::parse_word;
use knotgroup::knots::{
    self, distinctness_certificate, double_presentation, emit_certificate_json, fold_check,
    gamma_presentation, gamma_tab_presentation, standard_presentation, torus_wirtinger,
    DistinctnessCertificate, GammaArtifacts,
};
use knotgroup::torus::SurjectivityWitness;
use knotgroup::{
    parse_presentation, print_presentation, selftest as suite, ConstructionError, LaurentPoly,
    ParseError, TorusConvention, TorusGroup, TorusKnotParams, WordProblemError,
};
use rayon::prelude::*;

use crate::Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Refuted,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Refuted => 1,
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Refuted
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
        })
    }
}

pub struct Report {
    pub status: Status,
    pub text: String,
}

impl Report {
    fn new(status: Status, mut text: String) -> Self {
        let _ = writeln!(text, "status: {status}");
        Self { status, text }
    }

    /// Plain output with no status line.
    fn output(text: String) -> Self {
        Self {
            status: Status::Verified,
            text,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Refuted(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Refuted(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Refuted(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        let msg = e.to_string();
        match e {
            ConstructionError::InvalidP(_)
            | ConstructionError::BadParams { .. }
            | ConstructionError::BadPair { .. } => CliError::Usage(msg),
            ConstructionError::WordProblem(WordProblemError::BadParams { .. }) => {
                CliError::Usage(msg)
            }
            ConstructionError::Mismatch(_) => CliError::Refuted(msg),
            ConstructionError::Fox(e) => e.into(),
            _ => CliError::Internal(msg),
        }
    }
}

impl From<FoxError> for CliError {
    fn from(e: FoxError) -> Self {
        match e {
            FoxError::NotInfiniteCyclicAbelianization => CliError::Refuted(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<WordProblemError> for CliError {
    fn from(e: WordProblemError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// `min_exp m: c_m c_(m+1) …`
fn dense(f: &LaurentPoly) -> String {
    let d = f.to_dense();
    format!("min_exp {}: {}", d.min_exp, d.coeffs.join(" "))
}

fn ideal_lines(out: &mut String, label: &str, ideal: &IdealGenerators) {
    let _ = writeln!(out, "{label}:");
    for g in ideal.gens() {
        let _ = writeln!(out, "  {}", dense(g));
    }
    if let Some(g) = ideal.gcd() {
        let _ = writeln!(out, "  gcd {}", dense(&g));
    }
}

pub fn present(p: i64, form: Form) -> Result<Report, CliError> {
    let text = match form {
        Form::Wirtinger => print_presentation(&torus_wirtinger(p)?),
        Form::Standard => {
            print_presentation(&standard_presentation(TorusKnotParams::consecutive(p)?))
        }
        Form::Gamma => print_presentation(&gamma_presentation(p)?),
        Form::GammaTab => print_presentation(&gamma_tab_presentation(p)?),
        Form::Double => {
            let (pres, word) = double_presentation(p)?;
            format!("# word: {}\n{}", word.tokens(), print_presentation(&pres))
        }
    };
    Ok(Report::output(text))
}

pub fn alexander(file: &Path) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
    let pres = parse_presentation(&text)?;
    let delta = alexander_polynomial(&pres)?.canonicalize();
    let line = if delta.is_zero() {
        "0".to_string()
    } else {
        delta.to_dense().coeffs.join(" ")
    };
    Ok(Report::output(format!("{line}\n")))
}

pub fn gamma(p: i64) -> Result<Report, CliError> {
    let g = GammaArtifacts::build(p)?;
    let mut out = String::new();
    let _ = writeln!(out, "p: {p}");
    let _ = writeln!(out, "presentation: {}", g.presentation);
    let _ = writeln!(out, "tab presentation: {}", g.tab_presentation);
    let ab = &g.abelianization;
    let diag: Vec<String> = ab.snf_diagonal.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "abelianization: {ab} (snf diagonal {})",
        diag.join(" ")
    );
    if let Some(dm) = &ab.degree_map {
        let parts: Vec<String> = dm.iter().map(|(g, d)| format!("{g}={d}")).collect();
        let _ = writeln!(out, "degree map: {}", parts.join(" "));
    }
    let _ = writeln!(out, "p-polynomial: {}", dense(&g.p_poly));
    ideal_lines(&mut out, "order ideal", &g.order_ideal);
    ideal_lines(&mut out, "fox E1 (u, v, x, y)", &g.fox_ideal);
    ideal_lines(&mut out, "fox E1 (t, a, b)", &g.fox_ideal_tab);
    let _ = writeln!(
        out,
        "fox E1 (t, a, b) equals order ideal: {}",
        g.fox_ideal_tab == g.order_ideal
    );
    let _ = writeln!(
        out,
        "fox E1 gcd equals order ideal gcd: {}",
        g.fox_gcd_matches()
    );
    let _ = writeln!(
        out,
        "framing defect (recorded constant): {}",
        g.framing_defect
    );
    let ok = ab.is_infinite_cyclic() && g.fox_gcd_matches() && g.fox_ideal_tab == g.order_ideal;
    Ok(Report::new(Status::from_bool(ok), out))
}

fn certificate_line(c: &DistinctnessCertificate) -> String {
    let mode = match c.mode {
        knots::CertificateMode::Cyclotomic => "cyclotomic",
        knots::CertificateMode::UnitIdeal => "unit_ideal",
    };
    format!(
        "p={} k={} mode={mode} phi_index={} divides_in_k={} divides_in_p={} valid={}",
        c.p, c.k, c.phi_index, c.divides_in_k, c.divides_in_p, c.valid
    )
}

pub fn distinct(p: i64, k: i64, json: bool) -> Result<Report, CliError> {
    let c = distinctness_certificate(p, k)?;
    let status = Status::from_bool(c.valid);
    if json {
        return Ok(Report {
            status,
            text: emit_certificate_json(&c) + "\n",
        });
    }
    let mut out = certificate_line(&c) + "\n";
    let _ = writeln!(out, "p_poly_p: {}", dense(&c.polynomials.p_poly_p));
    let _ = writeln!(out, "p_poly_k: {}", dense(&c.polynomials.p_poly_k));
    let _ = writeln!(out, "phi: {}", dense(&c.polynomials.phi));
    Ok(Report::new(status, out))
}

pub fn distinct_range(min: i64, max: i64) -> Result<Report, CliError> {
    if min < 1 || max <= min {
        return Err(CliError::Usage(format!(
            "need 1 <= min < max (got {min}, {max})"
        )));
    }
    let pairs: Vec<(i64, i64)> = (min..=max)
        .flat_map(|p| (p + 1..=max).map(move |k| (p, k)))
        .collect();
    let certs = pairs
        .par_iter()
        .map(|&(p, k)| distinctness_certificate(p, k))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    for c in &certs {
        let _ = writeln!(out, "{}", certificate_line(c));
    }
    let valid = certs.iter().filter(|c| c.valid).count();
    let _ = writeln!(out, "summary: {} pairs, {valid} valid", certs.len());
    Ok(Report::new(Status::from_bool(valid == certs.len()), out))
}

pub fn verify_tau(p: i64) -> Result<Report, CliError> {
    let r = knots::verify_tau(p)?;
    let mut out = String::new();
    let _ = writeln!(out, "tau: {}", r.tau.tokens());
    let _ = writeln!(out, "degree: {}", r.degree);
    let _ = writeln!(
        out,
        "image in <x, y | x^{p} y^{}>: {}",
        p + 1,
        r.image.tokens()
    );
    let _ = writeln!(out, "image normal form: {}", r.image_normal_form);
    let _ = writeln!(out, "image nontrivial: {}", r.image_nontrivial());
    let _ = writeln!(
        out,
        "image in commutator subgroup: {}",
        r.image_in_commutator_subgroup
    );
    let _ = writeln!(
        out,
        "quotient abelianization: {}",
        r.quotient_abelianization
    );
    let _ = writeln!(
        out,
        "quotient alexander polynomial: {}",
        dense(&r.quotient_alexander)
    );
    Ok(Report::new(Status::from_bool(r.verified()), out))
}

pub fn fold(p: i64) -> Result<Report, CliError> {
    let r = fold_check(p)?;
    let mut out = String::new();
    let _ = writeln!(out, "target: <x, y | x^{p} y^{}>", p + 1);
    for v in &r.relators {
        let _ = writeln!(
            out,
            "relator {} -> {} : normal form {}",
            v.relator, v.image, v.normal_form
        );
    }
    let witness = |w: &Option<SurjectivityWitness>| match w {
        Some(SurjectivityWitness::ImageOf(g)) => format!("image of {g}"),
        Some(SurjectivityWitness::Word(w)) => format!("image of {}", w.tokens()),
        None => "none".into(),
    };
    let _ = writeln!(out, "x hit by: {}", witness(&r.x_witness));
    let _ = writeln!(out, "y hit by: {}", witness(&r.y_witness));
    let _ = writeln!(out, "homomorphism: {}", r.is_homomorphism());
    let _ = writeln!(out, "surjective: {}", r.is_surjective());
    Ok(Report::new(Status::from_bool(r.is_surjective()), out))
}

pub fn wp(p: i64, q: i64, word: &str) -> Result<Report, CliError> {
    let tk = TorusKnotParams::new(p, q)?;
    let group = TorusGroup::new(tk, TorusConvention::PowersEqual)?;
    let known: BTreeSet<&str> = ["x", "y"].into_iter().collect();
    let w = parse_word(word, Some(&known), 1, 0)?;
    let nf = group.normal_form(&w)?;
    let mut out = String::new();
    let _ = writeln!(out, "normal form: {nf}");
    let _ = writeln!(out, "trivial: {}", nf.is_trivial());
    Ok(Report::output(out))
}

pub fn selftest() -> Report {
    let results = suite::run_all();
    let mut out = String::new();
    for r in &results {
        let _ = writeln!(out, "{r}");
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "summary: {passed}/{} criteria passed", results.len());
    Report::new(Status::from_bool(passed == results.len()), out)
}
