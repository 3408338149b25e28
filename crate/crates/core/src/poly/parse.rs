//! The `.ck` input language.
//!
//! ```text
//! file         := ring-decl (ideal-block | matrix-block)*
//! ring-decl    := "ring" name+ ("weights" int+)?
//! ideal-block  := "ideal" NEWLINE (poly NEWLINE)+ "end"
//! matrix-block := "skewmatrix" int NEWLINE entries "end"
//! ```
//!
//! Matrix entries are the strict upper triangle in row-major order,
//! separated by commas and/or newlines. `#` starts a comment.

use num_bigint::BigInt;

use crate::error::{ParseError, ParseErrorKind, Result};
use crate::field::{Field, PrimeField};
use crate::poly::{Polynomial, WeightedPolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Int(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Caret => "^".into(),
            Tok::Slash => "/".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (_, c) = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, col });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            out.push(Spanned {
                tok: Tok::Int(s),
                col,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            out.push(Spanned {
                tok: Tok::Ident(s),
                col,
            });
            continue;
        }
        return Err(err(line, col, ParseErrorKind::UnexpectedToken(c.to_string())));
    }
    Ok(out)
}

struct PolyParser<'a, F: Field> {
    ring: &'a WeightedPolyRing<F>,
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a, F: Field> PolyParser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|s| s.col).unwrap_or(self.end_col)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        err(self.line, self.col(), kind)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.error(ParseErrorKind::UnexpectedToken(t.text())),
            None => self.error(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let field = self.ring.field();
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg(field);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t, field);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t, field);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let field = self.ring.field();
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {}
                Some(Tok::Slash) => return Err(self.error(ParseErrorKind::DivisionUnsupported)),
                _ => return Ok(acc),
            }
            let col = self.col();
            let f = self.factor()?;
            acc = acc
                .checked_mul(&f, field)
                .ok_or_else(|| err(self.line, col, ParseErrorKind::ExponentOverflow))?;
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let col = self.col();
            let e = match self.peek() {
                Some(Tok::Int(s)) => s.clone(),
                _ => return Err(self.unexpected()),
            };
            self.pos += 1;
            let e: u32 = match e.parse::<u32>() {
                Ok(v) if v <= u16::MAX as u32 => v,
                _ => return Err(err(self.line, col, ParseErrorKind::ExponentOverflow)),
            };
            let one = self.ring.one();
            return base
                .checked_pow(e, self.ring.field(), &one)
                .ok_or_else(|| err(self.line, col, ParseErrorKind::ExponentOverflow));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial<F>, ParseError> {
        let field = self.ring.field();
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut den = "1".to_string();
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            den = d;
                        }
                        _ => return Err(err(self.line, col, ParseErrorKind::DivisionUnsupported)),
                    }
                }
                let n: BigInt = num.parse().expect("digits");
                let d: BigInt = den.parse().expect("digits");
                let c = field.from_ratio(&n, &d).ok_or_else(|| {
                    err(self.line, col, ParseErrorKind::BadLiteral(format!("{num}/{den}")))
                })?;
                Ok(self.ring.constant(c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(err(self.line, col, ParseErrorKind::UnknownVariable(name))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Slash) => Err(self.error(ParseErrorKind::DivisionUnsupported)),
            _ => Err(self.unexpected()),
        }
    }
}

fn parse_poly_at<F: Field>(
    ring: &WeightedPolyRing<F>,
    text: &str,
    line: usize,
    col0: usize,
) -> Result<Polynomial<F>, ParseError> {
    let toks = lex(text, line, col0)?;
    let mut p = PolyParser {
        ring,
        toks,
        pos: 0,
        line,
        end_col: col0 + text.chars().count(),
    };
    if p.peek().is_none() {
        return Err(p.error(ParseErrorKind::UnexpectedEnd));
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        if p.peek() == Some(&Tok::Slash) {
            return Err(p.error(ParseErrorKind::DivisionUnsupported));
        }
        return Err(p.unexpected());
    }
    Ok(poly)
}

/// Parse a polynomial written over `ring`'s variables.
pub fn parse_poly<F: Field>(ring: &WeightedPolyRing<F>, text: &str) -> Result<Polynomial<F>> {
    Ok(parse_poly_at(ring, text, 1, 1)?)
}

/// Parse a ring declaration over the default prime field.
pub fn parse_ring(text: &str) -> Result<WeightedPolyRing<PrimeField>> {
    parse_ring_with(text, PrimeField::default())
}

/// Parse a ring declaration over the given field.
pub fn parse_ring_with<F: Field>(text: &str, field: F) -> Result<WeightedPolyRing<F>> {
    Ok(parse_ring_line(strip_comment(text.lines().next().unwrap_or("")), 1, field)?)
}

fn words_with_cols(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (ci, (bi, c)) in line.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(s);
            }
        } else if start.is_none() {
            start = Some(ci);
            let _ = bi;
        }
        if c.is_whitespace() {
            continue;
        }
    }
    if let Some(s) = start {
        out.push(s);
    }
    // map char offsets back to slices
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    out.into_iter()
        .map(|ci| {
            let b = chars[ci].0;
            let rest = &line[b..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (ci + 1, &rest[..end])
        })
        .collect()
}

fn is_name(w: &str) -> bool {
    let mut cs = w.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_')
}

fn parse_ring_line<F: Field>(
    line: &str,
    lineno: usize,
    field: F,
) -> Result<WeightedPolyRing<F>, ParseError> {
    let words = words_with_cols(line);
    let Some(&(c0, kw)) = words.first() else {
        return Err(err(lineno, 1, ParseErrorKind::UnexpectedEnd));
    };
    if kw != "ring" {
        return Err(err(lineno, c0, ParseErrorKind::Malformed(format!(
            "expected 'ring', found '{kw}'"
        ))));
    }
    let mut names: Vec<String> = Vec::new();
    let mut idx = 1;
    while idx < words.len() && words[idx].1 != "weights" {
        let (col, w) = words[idx];
        if !is_name(w) {
            return Err(err(lineno, col, ParseErrorKind::UnexpectedToken(w.to_string())));
        }
        if names.iter().any(|n| n == w) {
            return Err(err(lineno, col, ParseErrorKind::DuplicateVariable(w.to_string())));
        }
        names.push(w.to_string());
        idx += 1;
    }
    if names.is_empty() {
        let col = words.get(idx).map(|w| w.0).unwrap_or(line.chars().count() + 1);
        return Err(err(lineno, col, ParseErrorKind::Malformed(
            "ring needs at least one variable".into(),
        )));
    }
    let mut weights = vec![1u32; names.len()];
    if idx < words.len() {
        let wcol = words[idx].0;
        let ws = &words[idx + 1..];
        for (k, &(col, w)) in ws.iter().enumerate() {
            match w.parse::<i64>() {
                Ok(v) if v >= 1 && v <= u32::MAX as i64 => {
                    if k < weights.len() {
                        weights[k] = v as u32;
                    }
                }
                Ok(_) => {
                    return Err(err(lineno, col, ParseErrorKind::NonPositiveWeight(w.to_string())))
                }
                Err(_) => {
                    if w.starts_with('-') && w[1..].chars().all(|c| c.is_ascii_digit()) {
                        return Err(err(lineno, col, ParseErrorKind::NonPositiveWeight(
                            w.to_string(),
                        )));
                    }
                    return Err(err(lineno, col, ParseErrorKind::UnexpectedToken(w.to_string())));
                }
            }
        }
        if ws.len() != names.len() {
            return Err(err(lineno, wcol, ParseErrorKind::WeightCount {
                expected: names.len(),
                found: ws.len(),
            }));
        }
    }
    Ok(WeightedPolyRing::new(names, weights, field).expect("validated above"))
}

/// Raw skew matrix block: size and strict upper triangle, row-major.
#[derive(Debug, Clone)]
pub struct MatrixBlock<F: Field> {
    pub size: usize,
    pub entries: Vec<Polynomial<F>>,
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub struct Document<F: Field> {
    pub ring: WeightedPolyRing<F>,
    pub ideals: Vec<Vec<Polynomial<F>>>,
    pub matrices: Vec<MatrixBlock<F>>,
}

/// Parse a whole input file over the given field.
pub fn parse_document<F: Field>(text: &str, field: F) -> Result<Document<F>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let Some(&(l0, first)) = lines.first() else {
        return Err(err(1, 1, ParseErrorKind::Malformed("empty input".into())).into());
    };
    let ring = parse_ring_line(first, l0, field)?;
    let mut doc = Document {
        ring,
        ideals: Vec::new(),
        matrices: Vec::new(),
    };
    let mut i = 1;
    while i < lines.len() {
        let (ln, line) = lines[i];
        let words = words_with_cols(line);
        let (col, kw) = words[0];
        match kw {
            "ideal" => {
                if words.len() > 1 {
                    return Err(err(ln, words[1].0, ParseErrorKind::UnexpectedToken(
                        words[1].1.to_string(),
                    ))
                    .into());
                }
                i += 1;
                let mut gens = Vec::new();
                loop {
                    let Some(&(ln, line)) = lines.get(i) else {
                        return Err(err(ln + 1, 1, ParseErrorKind::Malformed(
                            "ideal block without 'end'".into(),
                        ))
                        .into());
                    };
                    i += 1;
                    if line.trim() == "end" {
                        break;
                    }
                    gens.push(parse_poly_at(&doc.ring, line, ln, 1)?);
                }
                if gens.is_empty() {
                    return Err(err(ln, col, ParseErrorKind::Malformed(
                        "ideal block needs at least one polynomial".into(),
                    ))
                    .into());
                }
                doc.ideals.push(gens);
            }
            "skewmatrix" => {
                let size = match words.get(1).map(|w| w.1.parse::<usize>()) {
                    Some(Ok(n)) if n >= 1 => n,
                    _ => {
                        return Err(err(ln, col, ParseErrorKind::Malformed(
                            "skewmatrix needs a positive size".into(),
                        ))
                        .into())
                    }
                };
                if words.len() > 2 {
                    return Err(err(ln, words[2].0, ParseErrorKind::UnexpectedToken(
                        words[2].1.to_string(),
                    ))
                    .into());
                }
                i += 1;
                let mut entries = Vec::new();
                loop {
                    let Some(&(eln, line)) = lines.get(i) else {
                        return Err(err(ln, col, ParseErrorKind::Malformed(
                            "skewmatrix block without 'end'".into(),
                        ))
                        .into());
                    };
                    i += 1;
                    if line.trim() == "end" {
                        break;
                    }
                    let mut offset = 0usize;
                    for piece in line.split(',') {
                        let c = line[..offset].chars().count() + 1;
                        offset += piece.len() + 1;
                        if piece.trim().is_empty() {
                            continue;
                        }
                        entries.push(parse_poly_at(&doc.ring, piece, eln, c)?);
                    }
                }
                let expected = size * (size - 1) / 2;
                if entries.len() != expected {
                    return Err(err(ln, col, ParseErrorKind::Malformed(format!(
                        "skewmatrix {size} needs {expected} upper-triangular entries, found {}",
                        entries.len()
                    )))
                    .into());
                }
                doc.matrices.push(MatrixBlock { size, entries });
            }
            other => {
                return Err(err(ln, col, ParseErrorKind::Malformed(format!(
                    "expected 'ideal' or 'skewmatrix', found '{other}'"
                )))
                .into())
            }
        }
    }
    Ok(doc)
}

/// Render a ring declaration.
pub fn format_ring<F: Field>(ring: &WeightedPolyRing<F>) -> String {
    let mut s = format!("ring {}", ring.vars().join(" "));
    if !ring.is_standard_graded() {
        let ws: Vec<String> = ring.weights().iter().map(|w| w.to_string()).collect();
        s.push_str(" weights ");
        s.push_str(&ws.join(" "));
    }
    s
}

/// Render a document with one ideal block in the input language.
pub fn format_ideal_document<F: Field>(
    ring: &WeightedPolyRing<F>,
    gens: &[Polynomial<F>],
) -> String {
    let mut s = format_ring(ring);
    s.push_str("\nideal\n");
    for g in gens {
        s.push_str(&ring.format_poly(g));
        s.push('\n');
    }
    s.push_str("end\n");
    s
}
