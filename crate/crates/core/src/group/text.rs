//! Plain-text presentation files.
//!
//! ```text
//! gens: x y
//! rel: x^2 y^3
//! ```
//!
//! One `gens:` line comes first, followed by one `rel:` line per relator.
//! A relator is a list of whitespace-separated tokens `name` or `name^k`
//! with `k ≠ 0`. Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeSet;

use thiserror::Error;

use super::{Generator, GroupError, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator {name:?} at line {line}, column {column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("zero exponent at line {line}, column {column}")]
    ZeroExponent { line: usize, column: usize },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into `(1-based column, token)` pairs.
fn tokens_with_columns(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(|(s, tok)| (offset + text[..s].chars().count() + 1, tok))
        .collect()
}

/// Parses a word in token syntax. `known` restricts the generator names when
/// given. `line`/`offset` only position error messages.
pub fn parse_word(
    text: &str,
    known: Option<&BTreeSet<&str>>,
    line: usize,
    offset: usize,
) -> Result<Word, ParseError> {
    let mut raw = Vec::new();
    for (col, tok) in tokens_with_columns(text, offset) {
        let (name, exp) = match tok.split_once('^') {
            None => (tok, 1),
            Some((name, e)) => {
                let e_col = col + name.chars().count() + 1;
                let k: i64 = e
                    .parse()
                    .map_err(|_| syntax(line, e_col, format!("bad exponent {e:?}")))?;
                if k == 0 {
                    return Err(ParseError::ZeroExponent {
                        line,
                        column: e_col,
                    });
                }
                (name, k)
            }
        };
        if !Generator::is_valid_name(name) {
            return Err(syntax(line, col, format!("bad generator name {name:?}")));
        }
        if known.is_some_and(|k| !k.contains(name)) {
            return Err(ParseError::UnknownGenerator {
                name: name.to_string(),
                line,
                column: col,
            });
        }
        raw.push((Generator::from(name), exp));
    }
    Ok(Word::reduce(raw))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut gens: Option<Vec<Generator>> = None;
    let mut relators = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw_line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw_line.chars().count() - trimmed.chars().count();
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(syntax(line, indent + 1, "expected `gens:` or `rel:`"));
        };
        let offset = indent + key.chars().count() + 1;
        match (key, &gens) {
            ("gens", None) => {
                let mut list = Vec::new();
                let mut seen = BTreeSet::new();
                for (col, tok) in tokens_with_columns(rest, offset) {
                    if !Generator::is_valid_name(tok) {
                        return Err(syntax(line, col, format!("bad generator name {tok:?}")));
                    }
                    if !seen.insert(tok) {
                        return Err(syntax(line, col, format!("duplicate generator {tok:?}")));
                    }
                    list.push(Generator::from(tok));
                }
                gens = Some(list);
            }
            ("gens", Some(_)) => return Err(syntax(line, indent + 1, "second `gens:` line")),
            ("rel", None) => return Err(syntax(line, indent + 1, "`rel:` before `gens:`")),
            ("rel", Some(g)) => {
                let known: BTreeSet<&str> = g.iter().map(Generator::name).collect();
                relators.push(parse_word(rest, Some(&known), line, offset)?);
            }
            _ => return Err(syntax(line, indent + 1, format!("unknown key {key:?}"))),
        }
    }
    let Some(gens) = gens else {
        return Err(syntax(1, 1, "missing `gens:` line"));
    };
    Presentation::new(gens, relators).map_err(|e| match e {
        // names and membership were checked above
        GroupError::ForeignGenerator(g) => ParseError::UnknownGenerator {
            name: g.name().to_string(),
            line: 0,
            column: 0,
        },
        other => syntax(0, 0, other.to_string()),
    })
}

pub fn print_presentation(p: &Presentation) -> String {
    let mut out = String::from("gens:");
    for g in p.generators() {
        out.push(' ');
        out.push_str(g.name());
    }
    out.push('\n');
    for r in p.relators() {
        out.push_str("rel:");
        if !r.is_identity() {
            out.push(' ');
            out.push_str(&r.tokens());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_trefoil() {
        let p = parse_presentation("gens: x y\nrel: x^2 y^3\n").unwrap();
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.relators(), &[Word::reduce([("x", 2), ("y", 3)])]);
    }

    #[test]
    fn free_group_file() {
        let p = parse_presentation("gens: x\n").unwrap();
        assert!(p.relators().is_empty());
        assert_eq!(print_presentation(&p), "gens: x\n");
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_presentation("rel: x\n"),
            Err(ParseError::Syntax {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert_eq!(
            parse_presentation("gens: x y\nrel: x^2 z\n"),
            Err(ParseError::UnknownGenerator {
                name: "z".into(),
                line: 2,
                column: 10
            })
        );
        assert_eq!(
            parse_presentation("gens: x\nrel: x^0\n"),
            Err(ParseError::ZeroExponent { line: 2, column: 8 })
        );
        assert!(matches!(
            parse_presentation("gens: x\nrel: x^a\n"),
            Err(ParseError::Syntax {
                line: 2,
                column: 8,
                ..
            })
        ));
        assert!(matches!(
            parse_presentation(""),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("gens: x x\n"),
            Err(ParseError::Syntax {
                line: 1,
                column: 9,
                ..
            })
        ));
        assert!(matches!(
            parse_presentation("gens: x\nrelator: x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn round_trip_canonical_file() {
        let text = "gens: z a1 a2\nrel: z a1^-1 a2^-1 a1^-1\nrel: z a1 z^-1 a2^-1\nrel:\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(print_presentation(&p), text);
    }

    #[test]
    fn comments_and_reduction() {
        let p = parse_presentation("# trefoil\n\ngens: x y\nrel: x x y y^2 y^-1 y\n").unwrap();
        assert_eq!(p.relators()[0], Word::reduce([("x", 2), ("y", 3)]));
    }
}
