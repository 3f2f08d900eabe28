//! Text forms of a polynomial.
//!
//! Two syntaxes are accepted:
//!
//! * expression syntax, `2x^4 - 3x^2 + 5`, following
//!   `poly := term (("+"|"-") term)*` and `term := number? ("x" ("^" integer)?)?`
//!   with an optional leading sign and an optional `*` between coefficient
//!   and `x`;
//! * list syntax, `[5, 0, -3, 0, 2]`, coefficients in ascending degree.
//!
//! Parsing returns the raw coefficient sequence; normalization is a
//! separate step.

use std::fmt::Write as _;

use crate::{Error, Result};

/// Largest exponent accepted in expression syntax.
pub const MAX_DEGREE: usize = 100_000;

/// Parses either syntax into an ascending coefficient sequence.
pub fn parse_poly(text: &str) -> Result<Vec<f64>> {
    let trimmed = text.trim_start();
    if trimmed.trim_end().is_empty() {
        return Err(Error::EmptyInput);
    }
    let offset = text.len() - trimmed.len();
    if trimmed.starts_with('[') {
        parse_list(text, offset)
    } else {
        Parser::new(text).poly()
    }
}

/// Parses list syntax written highest degree first.
pub fn parse_poly_descending(text: &str) -> Result<Vec<f64>> {
    let mut coeffs = parse_poly(text)?;
    if text.trim_start().starts_with('[') {
        coeffs.reverse();
    }
    Ok(coeffs)
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn parse_list(text: &str, open: usize) -> Result<Vec<f64>> {
    let body_start = open + 1;
    let close = text[body_start..]
        .find(']')
        .map(|i| body_start + i)
        .ok_or_else(|| syntax(text.len(), "missing ']'"))?;
    if let Some(i) = text[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err(syntax(close + 1 + i, "unexpected text after ']'"));
    }
    let body = &text[body_start..close];
    if body.trim().is_empty() {
        return Err(syntax(body_start, "empty coefficient list"));
    }
    let mut coeffs = Vec::new();
    let mut start = body_start;
    for item in body.split(',') {
        let lead = item.len() - item.trim_start().len();
        let token = item.trim();
        let value: f64 = token
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite() && !token.is_empty() && looks_numeric(token))
            .ok_or_else(|| syntax(start + lead, format!("invalid coefficient '{token}'")))?;
        coeffs.push(value);
        start += item.len() + 1;
    }
    Ok(coeffs)
}

// Rust's float parser also accepts "inf" and "nan"; only plain decimal and
// scientific notation are allowed here.
fn looks_numeric(token: &str) -> bool {
    token
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(mut self) -> Result<Vec<f64>> {
        let mut coeffs: Vec<f64> = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1.0
            }
            Some(b'+') => {
                self.pos += 1;
                1.0
            }
            _ => 1.0,
        };
        loop {
            let (coeff, degree) = self.term()?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0.0);
            }
            coeffs[degree] += sign * coeff;
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1.0,
                Some(b'-') => sign = -1.0,
                Some(c) => {
                    return Err(syntax(
                        self.pos,
                        format!("expected '+' or '-', found '{}'", char::from(c)),
                    ))
                }
            }
            self.pos += 1;
        }
        if let Some(degree) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(syntax(0, format!("coefficient of x^{degree} overflows")));
        }
        Ok(coeffs)
    }

    fn term(&mut self) -> Result<(f64, usize)> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(syntax(self.pos, "expected a term")),
        };
        let coeff = self.number()?;
        let mut has_star = false;
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            has_star = true;
        }
        if self.peek() == Some(b'x') {
            self.pos += 1;
            let degree = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.exponent()?
            } else {
                1
            };
            Ok((coeff.unwrap_or(1.0), degree))
        } else if has_star {
            Err(syntax(self.pos, "expected 'x' after '*'"))
        } else {
            coeff
                .map(|c| (c, 0))
                .ok_or_else(|| syntax(start, "expected a number or 'x'"))
        }
    }

    fn number(&mut self) -> Result<Option<f64>> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos - s
        };
        let mut mantissa = digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            mantissa += digits(self);
        }
        if mantissa == 0 {
            if self.pos > start {
                return Err(syntax(start, "malformed number"));
            }
            return Ok(None);
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                return Err(syntax(mark, "malformed exponent"));
            }
        }
        // The slice is ASCII digits, '.', 'e' and signs, so it is valid UTF-8.
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let value: f64 = text
            .parse()
            .map_err(|_| syntax(start, format!("malformed number '{text}'")))?;
        if !value.is_finite() {
            return Err(syntax(start, format!("number '{text}' overflows")));
        }
        Ok(Some(value))
    }

    fn exponent(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(syntax(start, "expected an integer exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<usize>()
            .ok()
            .filter(|&d| d <= MAX_DEGREE)
            .ok_or_else(|| syntax(start, format!("exponent exceeds {MAX_DEGREE}")))
    }
}

/// Renders coefficients (ascending degree) as a descending expression.
///
/// Numbers use the shortest representation that parses back to the same
/// `f64`, so `parse_poly(&format_poly(c))` reproduces `c` exactly once
/// high-degree zeros are removed.
pub fn format_poly(coeffs: &[f64]) -> String {
    let mut out = String::new();
    for (degree, &c) in coeffs.iter().enumerate().rev() {
        if c == 0.0 {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        if magnitude != 1.0 || degree == 0 {
            let _ = write!(out, "{magnitude}");
        }
        match degree {
            0 => {}
            1 => out.push('x'),
            d => {
                let _ = write!(out, "x^{d}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
