//! Shared helpers for the `(<LaurentPoly>)*sym^i` text formats of field,
//! Hopf-algebra and dual elements.

use crate::arith::LaurentPoly;
use crate::error::{Error, Result};

/// Splits on `+` outside parentheses.
pub(crate) fn split_top_level(text: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced `)`".into()));
                }
            }
            '+' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced `(`".into()));
    }
    parts.push(cur);
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("empty term in `{text}`")));
    }
    Ok(parts)
}

fn parse_coefficient(text: &str, p: u32) -> Result<LaurentPoly> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    LaurentPoly::parse(inner, p)
}

/// Parses one term of the form `[coef*]sym[^i]` or a bare coefficient, where
/// `sym` is the basis symbol (`x`, `t`, `z_`). Returns `(index, coefficient)`.
///
/// `z_` terms carry their index after the underscore instead of a caret.
pub(crate) fn parse_basis_term(term: &str, sym: &str, p: u32) -> Result<(usize, LaurentPoly)> {
    let (coef_text, basis_text) = match term.rfind(sym) {
        Some(pos) if !term[..pos].ends_with(|c: char| c.is_ascii_alphanumeric() || c == '^') => {
            let head = &term[..pos];
            let coef = if head.is_empty() {
                None
            } else {
                Some(head.strip_suffix('*').ok_or_else(|| {
                    Error::Parse(format!("expected `*` before `{sym}` in `{term}`"))
                })?)
            };
            (coef, Some(&term[pos + sym.len()..]))
        }
        _ => (Some(term), None),
    };
    let index = match basis_text {
        None => 0,
        Some("") if !sym.ends_with('_') => 1,
        Some(rest) => {
            let digits = if sym.ends_with('_') {
                rest
            } else {
                rest.strip_prefix('^').ok_or_else(|| {
                    Error::Parse(format!("expected `^` after `{sym}` in `{term}`"))
                })?
            };
            digits
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index `{digits}` in `{term}`")))?
        }
    };
    let coef = match coef_text {
        None => LaurentPoly::one(p),
        Some(c) => parse_coefficient(c, p)?,
    };
    Ok((index, coef))
}

/// Renders `Σ coeffs[i] * sym^i` with unit coefficients elided.
pub(crate) fn render_terms(
    coeffs: &[LaurentPoly],
    basis: impl Fn(usize) -> Option<String>,
) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match (basis(i), c.is_one()) {
            (None, true) => "1".to_string(),
            (None, false) => format!("({c})"),
            (Some(b), true) => b,
            (Some(b), false) => format!("({c})*{b}"),
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}
