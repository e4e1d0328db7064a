//! Plain-text input: quadratic forms in u..z and optional witness lines.

use std::fmt;

use num_bigint::BigInt;

use crate::exactmath::{is_prime_u64, MAX_PRIME};
use crate::fano::GrassmannChart;
use crate::pencil::{PencilError, PencilOfQuadrics};
use crate::quadric::{FormError, QuadraticForm, VARIABLES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    NonQuadratic(String),
    UnknownVariable(char),
    Form(FormError),
    Pencil(PencilError),
    Missing(&'static str),
    Duplicate(&'static str),
    Witness(String),
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(s) => write!(f, "syntax error: {s}"),
            ParseErrorKind::NonQuadratic(m) => write!(f, "non-quadratic monomial '{m}'"),
            ParseErrorKind::UnknownVariable(c) => write!(f, "unknown variable '{c}'"),
            ParseErrorKind::Form(e) => write!(f, "{e}"),
            ParseErrorKind::Pencil(e) => write!(f, "{e}"),
            ParseErrorKind::Missing(what) => write!(f, "missing {what}"),
            ParseErrorKind::Duplicate(what) => write!(f, "duplicate {what}"),
            ParseErrorKind::Witness(s) => write!(f, "bad witness: {s}"),
        }
    }
}

struct FormParser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl FormParser {
    fn err(&self, at: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.col0 + at + 1, kind }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            let s: String = self.chars[start..self.pos].iter().collect();
            s.parse().expect("digits")
        })
    }

    /// Variables of one monomial with exponents, e.g. `x^2`, `uv`, `u*v`.
    fn monomial(&mut self, start: usize) -> Result<Vec<usize>, ParseError> {
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let at = self.pos;
                    let i = VARIABLES
                        .iter()
                        .position(|&v| v == c)
                        .ok_or_else(|| self.err(at, ParseErrorKind::UnknownVariable(c)))?;
                    self.pos += 1;
                    let mut exp = 1usize;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let at = self.pos;
                        exp = self
                            .number()
                            .and_then(|n| usize::try_from(n).ok())
                            .ok_or_else(|| self.err(at, ParseErrorKind::Syntax("expected exponent".into())))?;
                    }
                    if vars.len() + exp > 2 {
                        return Err(self.non_quadratic(start));
                    }
                    vars.extend(std::iter::repeat_n(i, exp));
                }
                Some('*') => {
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                        return Err(self.err(self.pos, ParseErrorKind::Syntax("expected variable after '*'".into())));
                    }
                }
                _ => break,
            }
        }
        Ok(vars)
    }

    fn non_quadratic(&mut self, start: usize) -> ParseError {
        let mut end = self.pos;
        while self.chars.get(end).is_some_and(|c| !matches!(c, '+' | '-')) {
            end += 1;
        }
        let m: String = self.chars[start..end].iter().collect();
        self.err(start, ParseErrorKind::NonQuadratic(m.trim().to_string()))
    }

    fn parse(mut self) -> Result<QuadraticForm, ParseError> {
        let mut terms: Vec<((usize, usize), BigInt)> = Vec::new();
        let mut first = true;
        loop {
            let Some(c) = self.peek() else {
                if first {
                    return Err(self.err(self.pos, ParseErrorKind::Syntax("empty form".into())));
                }
                break;
            };
            let mut negative = false;
            if c == '+' || c == '-' {
                negative = c == '-';
                self.pos += 1;
            } else if !first {
                return Err(self.err(self.pos, ParseErrorKind::Syntax(format!("unexpected '{c}'"))));
            }
            first = false;
            let start = {
                self.skip_ws();
                self.pos
            };
            let coeff = self.number();
            if coeff.is_some() && self.peek() == Some('*') {
                self.pos += 1;
            }
            let vars = self.monomial(start)?;
            match (coeff.is_some(), vars.len()) {
                (_, 2) => {}
                (false, 0) => {
                    let msg = match self.peek() {
                        Some(c) => format!("unexpected '{c}'"),
                        None => "expected a term".to_string(),
                    };
                    return Err(self.err(self.pos, ParseErrorKind::Syntax(msg)));
                }
                _ => return Err(self.non_quadratic(start)),
            }
            let mut c = coeff.unwrap_or_else(|| BigInt::from(1));
            if negative {
                c = -c;
            }
            let key = (vars[0].min(vars[1]), vars[0].max(vars[1]));
            terms.push((key, c));
        }
        QuadraticForm::new(terms).map_err(|e| self.err(0, ParseErrorKind::Form(e)))
    }
}

fn parse_form_at(text: &str, line: usize, col0: usize) -> Result<QuadraticForm, ParseError> {
    FormParser { chars: text.chars().collect(), pos: 0, line, col0 }.parse()
}

/// Parses e.g. `uv - 4vw + x^2` or `3*u*v + 2 z^2`.
pub fn parse_form(text: &str) -> Result<QuadraticForm, ParseError> {
    parse_form_at(text, 1, 0)
}

/// A witness carried by the input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Fano { prime: u64, chart: GrassmannChart, coords: [u64; 8] },
    Singular { prime: u64, coords: [u64; 6] },
}

impl Witness {
    pub fn prime(&self) -> u64 {
        match self {
            Witness::Fano { prime, .. } | Witness::Singular { prime, .. } => *prime,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |c: &[u64]| c.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Witness::Fano { prime, chart, coords } => {
                write!(f, "fano p={prime} chart={chart} coords={}", join(coords))
            }
            Witness::Singular { prime, coords } => write!(f, "singular p={prime} coords={}", join(coords)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub pencil: PencilOfQuadrics,
    pub witnesses: Vec<Witness>,
}

pub fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))?;
    if p > MAX_PRIME || !is_prime_u64(p) {
        return Err(format!("{p} is not a supported prime"));
    }
    Ok(p)
}

pub fn parse_chart(s: &str) -> Result<GrassmannChart, String> {
    let v = parse_list::<usize>(s)?;
    match v[..] {
        [i, j] => GrassmannChart::new(i, j).map_err(|e| e.to_string()),
        _ => Err(format!("chart '{s}' needs two indices i,j")),
    }
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| format!("bad entry '{t}' in '{s}'")))
        .collect()
}

pub fn parse_coords<const N: usize>(s: &str) -> Result<[u64; N], String> {
    let v = parse_list::<u64>(s)?;
    let n = v.len();
    v.try_into().map_err(|_| format!("expected {N} coordinates, got {n}"))
}

fn parse_witness(body: &str) -> Result<Witness, String> {
    let mut words = body.split_whitespace();
    let kind = words.next().ok_or("empty witness")?;
    let mut prime = None;
    let mut chart = None;
    let mut coords = None;
    for w in words {
        let (key, value) = w.split_once('=').ok_or_else(|| format!("expected key=value, got '{w}'"))?;
        match key {
            "p" => prime = Some(parse_prime(value)?),
            "chart" => chart = Some(parse_chart(value)?),
            "coords" => coords = Some(value),
            _ => return Err(format!("unknown key '{key}'")),
        }
    }
    let prime = prime.ok_or("missing p=")?;
    let coords = coords.ok_or("missing coords=")?;
    match kind {
        "fano" => Ok(Witness::Fano {
            prime,
            chart: chart.ok_or("missing chart=")?,
            coords: parse_coords(coords)?,
        }),
        "singular" => {
            let coords: [u64; 6] = parse_coords(coords)?;
            if coords.iter().all(|c| c % prime == 0) {
                return Err("zero vector".into());
            }
            Ok(Witness::Singular { prime, coords })
        }
        _ => Err(format!("unknown witness kind '{kind}'")),
    }
}

/// `Q1: ...`, `Q2: ...` and any number of `WITNESS: ...` lines. Blank lines
/// and `#` comments are ignored.
pub fn parse_input(text: &str) -> Result<ParsedInput, ParseError> {
    let mut forms: [Option<QuadraticForm>; 2] = [None, None];
    let mut witnesses = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let at = |column: usize, kind| ParseError { line, column, kind };
        let Some((key, body)) = content.split_once(':') else {
            return Err(at(1, ParseErrorKind::Syntax("expected 'Q1:', 'Q2:' or 'WITNESS:'".into())));
        };
        let col0 = key.len() + 1;
        match key.trim() {
            "Q1" | "Q2" => {
                let idx = usize::from(key.trim() == "Q2");
                if forms[idx].is_some() {
                    return Err(at(1, ParseErrorKind::Duplicate(["Q1", "Q2"][idx])));
                }
                forms[idx] = Some(parse_form_at(body, line, col0)?);
            }
            "WITNESS" => {
                let w = parse_witness(body).map_err(|e| at(col0 + 1, ParseErrorKind::Witness(e)))?;
                witnesses.push(w);
            }
            other => {
                return Err(at(1, ParseErrorKind::Syntax(format!("unknown key '{other}'"))));
            }
        }
    }
    let [q1, q2] = forms;
    let q1 = q1.ok_or(ParseError { line: 0, column: 0, kind: ParseErrorKind::Missing("Q1") })?;
    let q2 = q2.ok_or(ParseError { line: 0, column: 0, kind: ParseErrorKind::Missing("Q2") })?;
    let pencil = PencilOfQuadrics::new(q1, q2)
        .map_err(|e| ParseError { line: 0, column: 0, kind: ParseErrorKind::Pencil(e) })?;
    Ok(ParsedInput { pencil, witnesses })
}
