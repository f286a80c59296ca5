//! Parser for the polynomial text syntax shared by every input surface:
//! integers, rationals `p/q` (no spaces), variables, `+ - * ^`, parentheses.
//! Implicit multiplication is rejected with a position-annotated error.

use num_bigint::BigInt;

use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use crate::var::VarSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Num(Rat),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    tokenize_at(src, 1, 1)
}

/// Tokenize with a starting position, so problem files can report positions
/// relative to the whole file.
pub fn tokenize_at(src: &str, start_line: usize, start_col: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut line = start_line;
    let mut col = start_col;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |n: usize, line: &mut usize, col: &mut usize, i: &mut usize| {
            for k in 0..n {
                if chars[*i + k] == '\n' {
                    *line += 1;
                    *col = 1;
                } else {
                    *col += 1;
                }
            }
            *i += n;
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => advance(1, &mut line, &mut col, &mut i),
            '+' => {
                out.push(Spanned { tok: Tok::Plus, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            '-' => {
                out.push(Spanned { tok: Tok::Minus, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            '/' => {
                out.push(Spanned { tok: Tok::Slash, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            '(' => {
                out.push(Spanned { tok: Tok::LParen, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, line: tline, col: tcol });
                advance(1, &mut line, &mut col, &mut i);
            }
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let num: String = chars[i..j].iter().collect();
                let n: BigInt = num.parse().unwrap();
                // `p/q` with digits immediately adjacent is a rational literal
                if j < chars.len() && chars[j] == '/' && j + 1 < chars.len() && chars[j + 1].is_ascii_digit() {
                    let mut k = j + 1;
                    while k < chars.len() && chars[k].is_ascii_digit() {
                        k += 1;
                    }
                    let den: String = chars[j + 1..k].iter().collect();
                    let d: BigInt = den.parse().unwrap();
                    if d == BigInt::from(0u32) {
                        return Err(ParseError { line: tline, col: tcol, msg: "zero denominator".into() });
                    }
                    out.push(Spanned { tok: Tok::Num(Rat::new(n, d)), line: tline, col: tcol });
                    advance(k - i, &mut line, &mut col, &mut i);
                } else {
                    out.push(Spanned { tok: Tok::Num(Rat::from_integer(n)), line: tline, col: tcol });
                    advance(j - i, &mut line, &mut col, &mut i);
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                out.push(Spanned { tok: Tok::Ident(name), line: tline, col: tcol });
                advance(j - i, &mut line, &mut col, &mut i);
            }
            other => {
                return Err(ParseError {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    vars: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn err_here(&self, msg: impl Into<String>) -> ParseError {
        match self.peek() {
            Some(s) => ParseError { line: s.line, col: s.col, msg: msg.into() },
            None => {
                let (line, col) = self
                    .toks
                    .last()
                    .map(|s| (s.line, s.col + 1))
                    .unwrap_or((1, 1));
                ParseError { line, col, msg: msg.into() }
            }
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    return Err(self.err_here(
                        "division is not allowed; write rational constants as `p/q` without spaces",
                    ));
                }
                // adjacency without an operator: implicit multiplication
                Some(Tok::Ident(_)) | Some(Tok::Num(_)) | Some(Tok::LParen) => {
                    return Err(self.err_here("missing operator (implicit multiplication is not allowed)"));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().map(|s| s.tok.clone()) {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek().map(|s| s.tok.clone()) {
            self.pos += 1;
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Num(q)) if q.is_integer() && !num_traits::Signed::is_negative(&q) => {
                    self.pos += 1;
                    let e: u32 = q
                        .numer()
                        .try_into()
                        .map_err(|_| self.err_here("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err_here("exponent must be a non-negative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().map(|s| s.tok.clone()) {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.vars.clone(), q))
            }
            Some(Tok::Ident(name)) => {
                let spanned = self.peek().unwrap();
                let (line, col) = (spanned.line, spanned.col);
                self.pos += 1;
                MultiPoly::var_named(self.vars, &name).ok_or(ParseError {
                    line,
                    col,
                    msg: format!("unknown variable `{name}`"),
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek().map(|s| s.tok.clone()) {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err_here("expected `)`")),
                }
            }
            _ => Err(self.err_here("expected a number, variable, or `(`")),
        }
    }
}

/// Parse a polynomial over an explicit universe.
pub fn parse_poly(src: &str, vars: &VarSet) -> Result<MultiPoly, ParseError> {
    let toks = tokenize(src)?;
    parse_poly_tokens(&toks, vars)
}

pub fn parse_poly_tokens(toks: &[Spanned], vars: &VarSet) -> Result<MultiPoly, ParseError> {
    let mut p = Parser { toks, pos: 0, vars };
    if toks.is_empty() {
        return Err(ParseError { line: 1, col: 1, msg: "empty expression".into() });
    }
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err_here("trailing input after expression"));
    }
    Ok(poly)
}

/// Parse with the universe inferred from identifiers in order of first
/// appearance (test and ad-hoc convenience).
pub fn parse_poly_inferred(src: &str) -> Result<MultiPoly, ParseError> {
    let toks = tokenize(src)?;
    let mut names: Vec<String> = Vec::new();
    for t in &toks {
        if let Tok::Ident(n) = &t.tok {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
    }
    let vars = VarSet::new(names);
    parse_poly_tokens(&toks, &vars)
}

/// Split a `ratio:` expression on its single top-level `/` separator.
/// Rational constants written `p/q` (no spaces) lex as one token and do not
/// act as separators.
pub fn split_ratio(toks: &[Spanned]) -> Result<(&[Spanned], &[Spanned]), ParseError> {
    let mut depth = 0usize;
    let mut split: Option<usize> = None;
    for (i, t) in toks.iter().enumerate() {
        match t.tok {
            Tok::LParen => depth += 1,
            Tok::RParen => {
                if depth == 0 {
                    return Err(ParseError { line: t.line, col: t.col, msg: "unbalanced `)`".into() });
                }
                depth -= 1;
            }
            Tok::Slash if depth == 0 => {
                if split.is_some() {
                    return Err(ParseError {
                        line: t.line,
                        col: t.col,
                        msg: "ratio must contain exactly one top-level `/`".into(),
                    });
                }
                split = Some(i);
            }
            _ => {}
        }
    }
    let Some(i) = split else {
        let (line, col) = toks.first().map(|t| (t.line, t.col)).unwrap_or((1, 1));
        return Err(ParseError {
            line,
            col,
            msg: "ratio must be written `<numerator> / <denominator>`".into(),
        });
    };
    Ok((&toks[..i], &toks[i + 1..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn parses_paper_input() {
        let vars = VarSet::new(vec!["b", "m"]);
        let f = parse_poly("(1+2*b^2) - m*(b^2+2*b)", &vars).unwrap();
        assert_eq!(f.total_degree(), 3);
        let g = parse_poly("2*b - 1", &vars).unwrap();
        assert_eq!(g.degree_in(0), 1);
    }

    #[test]
    fn rational_literals() {
        let vars = VarSet::new(vec!["m"]);
        let p = parse_poly("1/2*m + 3/4", &vars).unwrap();
        let mut env = std::collections::BTreeMap::new();
        env.insert("m".to_string(), int(1));
        assert_eq!(p.eval_rational(&env), rat(5, 4));
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let vars = VarSet::new(vec!["b", "m"]);
        let e = parse_poly("2b", &vars).unwrap_err();
        assert!(e.msg.contains("implicit"));
        assert!(parse_poly("b m", &vars).is_err());
        assert!(parse_poly("(b)(m)", &vars).is_err());
    }

    #[test]
    fn rejects_division() {
        let vars = VarSet::new(vec!["b"]);
        let e = parse_poly("b / 2", &vars).unwrap_err();
        assert!(e.msg.contains("division"));
    }

    #[test]
    fn unknown_variable_positioned() {
        let vars = VarSet::new(vec!["b"]);
        let e = parse_poly("b + q", &vars).unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
    }

    #[test]
    fn split_ratio_on_top_level_slash() {
        let toks = tokenize("(m_a + m_b) / (a + b + c)").unwrap();
        let (num, den) = split_ratio(&toks).unwrap();
        assert_eq!(num.len(), 5);
        assert_eq!(den.len(), 7);
        // 1/2 literal is not a separator
        let toks = tokenize("1/2*a / b").unwrap();
        let (num, _) = split_ratio(&toks).unwrap();
        assert_eq!(num.len(), 3);
    }
}
