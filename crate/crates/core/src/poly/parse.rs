//! Text grammar for polynomials, ideals and section maps.
//!
//! ```text
//! ring y0 y1 y2;
//! map x0 = y1^5*y2; x1 = y0^5*y1; x2 = y1^6 + y1^3*y2^3; x3 = y0^6; x4 = y2^5*y0;
//! ```
//!
//! Statements end with `;`. `ring` names the variables, `map` starts a list
//! of `name = expr` assignments (each later `name = expr` statement extends
//! it), `ideal` takes comma-separated generators and `poly` a single
//! polynomial. Expressions use integer coefficients, `^`, `*`, `+`, `-` and
//! parentheses. `#` starts a comment.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::ring::{PolyRing, SparsePoly};
use super::sections::SectionMap;
use super::{MonomialOrder, PolyError};
use crate::arith::CoeffRing;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub ring: Vec<String>,
    pub map: Vec<(String, String)>,
    pub ideal: Vec<String>,
    pub polys: Vec<String>,
}

pub fn parse_document(text: &str) -> Result<Document, PolyError> {
    let cleaned: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let mut doc = Document::default();
    let mut in_map = false;
    for raw in cleaned.split(';') {
        let stmt = raw.trim();
        if stmt.is_empty() {
            continue;
        }
        let (head, rest) = split_keyword(stmt);
        match head {
            "ring" => {
                if !doc.ring.is_empty() {
                    return Err(PolyError::Parse("duplicate ring statement".into()));
                }
                doc.ring = rest
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        if is_ident(s) {
                            Ok(s.to_string())
                        } else {
                            Err(PolyError::Parse(format!("bad variable name '{s}'")))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                in_map = false;
            }
            "map" => {
                doc.map.push(parse_assignment(rest)?);
                in_map = true;
            }
            "ideal" => {
                doc.ideal.extend(split_top_level_commas(rest));
                in_map = false;
            }
            "poly" => {
                doc.polys.push(rest.trim().to_string());
                in_map = false;
            }
            _ if in_map && stmt.contains('=') => doc.map.push(parse_assignment(stmt)?),
            _ => return Err(PolyError::Parse(format!("unrecognised statement '{stmt}'"))),
        }
    }
    if doc.ring.is_empty() {
        return Err(PolyError::Parse("missing ring statement".into()));
    }
    Ok(doc)
}

fn split_keyword(stmt: &str) -> (&str, &str) {
    let end = stmt.find(|c: char| c.is_whitespace()).unwrap_or(stmt.len());
    let head = &stmt[..end];
    match head {
        "ring" | "map" | "ideal" | "poly" => (head, &stmt[end..]),
        _ => ("", stmt),
    }
}

fn parse_assignment(s: &str) -> Result<(String, String), PolyError> {
    let (lhs, rhs) = s
        .split_once('=')
        .ok_or_else(|| PolyError::Parse(format!("expected 'name = expr' in '{}'", s.trim())))?;
    let name = lhs.trim();
    if !is_ident(name) {
        return Err(PolyError::Parse(format!("bad target name '{name}'")));
    }
    Ok((name.to_string(), rhs.trim().to_string()))
}

fn split_top_level_commas(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>, PolyError> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Int(s[start..i].parse().expect("digits")));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token::Ident(s[start..i].to_string()));
                continue;
            }
            other => return Err(PolyError::Parse(format!("unexpected character '{other}'"))),
        };
        out.push(tok);
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, R: CoeffRing> {
    ring: &'a PolyRing<R>,
    toks: Vec<Token>,
    pos: usize,
}

impl<R: CoeffRing> Parser<'_, R> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<SparsePoly<R::Elem>, PolyError> {
        let mut acc = self.ring.zero();
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate {
                self.ring.sub(&acc, &t)
            } else {
                self.ring.add(&acc, &t)
            };
            match self.peek() {
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<SparsePoly<R::Elem>, PolyError> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly<R::Elem>, PolyError> {
        let base = match self.next() {
            Some(Token::Int(n)) => self.ring.constant(self.ring.coeffs().from_bigint(&n)),
            Some(Token::Ident(name)) => {
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| PolyError::Parse(format!("unknown variable '{name}'")))?;
                self.ring.term(self.ring.coeffs().one(), Monomial::var(i))
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => e,
                    _ => return Err(PolyError::Parse("missing ')'".into())),
                }
            }
            other => return Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        };
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(n)) => {
                    let e: u32 = (&n)
                        .try_into()
                        .map_err(|_| PolyError::Parse(format!("exponent {n} too large")))?;
                    return Ok(self.ring.pow(&base, e));
                }
                other => return Err(PolyError::Parse(format!("expected exponent, got {other:?}"))),
            }
        }
        Ok(base)
    }
}

/// Parses one polynomial expression over `ring`.
pub fn parse_poly<R: CoeffRing>(ring: &PolyRing<R>, text: &str) -> Result<SparsePoly<R::Elem>, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(PolyError::Parse(format!(
            "trailing input after position {} in '{text}'",
            p.pos
        )));
    }
    Ok(f)
}

/// Builds the section map of a document with a `map` block.
pub fn section_map_from_text<R: CoeffRing>(text: &str, coeffs: R) -> Result<SectionMap<R>, PolyError> {
    let doc = parse_document(text)?;
    if doc.map.is_empty() {
        return Err(PolyError::Parse("document has no map".into()));
    }
    let source = PolyRing::new(coeffs, doc.ring.clone(), MonomialOrder::DegRevLex)?;
    let mut names = Vec::new();
    let mut sections = Vec::new();
    for (name, expr) in &doc.map {
        names.push(name.clone());
        sections.push(parse_poly(&source, expr)?);
    }
    SectionMap::new(source, names, sections)
}

/// Ring and generators of a document with an `ideal` block.
pub fn ideal_from_text<R: CoeffRing>(
    text: &str,
    coeffs: R,
    order: MonomialOrder,
) -> Result<(PolyRing<R>, Vec<SparsePoly<R::Elem>>), PolyError> {
    let doc = parse_document(text)?;
    let ring = PolyRing::new(coeffs, doc.ring.clone(), order)?;
    let gens = doc
        .ideal
        .iter()
        .map(|e| parse_poly(&ring, e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ring, gens))
}

/// Ring and polynomials of a document with `poly` statements.
pub fn polys_from_text<R: CoeffRing>(
    text: &str,
    coeffs: R,
    order: MonomialOrder,
) -> Result<(PolyRing<R>, Vec<SparsePoly<R::Elem>>), PolyError> {
    let doc = parse_document(text)?;
    let ring = PolyRing::new(coeffs, doc.ring.clone(), order)?;
    let polys = doc
        .polys
        .iter()
        .map(|e| parse_poly(&ring, e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ring, polys))
}
