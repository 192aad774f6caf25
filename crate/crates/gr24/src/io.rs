//! Spec files, polynomial parsing and deterministic JSON output.

use crate::exact::{Field, MultiPoly, Rat, Surd};
use crate::grassmann::{coord_index, NAMES};
use crate::region::{RegionError, RegionSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: parse error at line {line}, column {column}: {msg}")]
    Json { path: String, line: usize, column: usize, msg: String },
    #[error("{0}: cannot read: {1}")]
    Read(String, String),
    #[error("variables must be [\"p12\",\"p13\",\"p23\",\"p14\",\"p24\",\"p34\"], got {0:?}")]
    Variables(Vec<String>),
    #[error("h{index}: coefficient {text:?} is not a rational number")]
    Coefficient { index: usize, text: String },
    #[error("cannot parse polynomial at byte {0}: {1}")]
    Poly(usize, String),
    #[error(transparent)]
    Region(#[from] RegionError),
}

/// On-disk description of a region: `hyperplanes` as rational strings in Plücker order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    pub hyperplanes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl SpecFile {
    pub fn parse(text: &str, path: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Json {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn read(path: &str) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|e| InputError::Read(path.to_string(), e.to_string()))?;
        Self::parse(&text, path)
    }

    pub fn from_spec(spec: &RegionSpec) -> Self {
        SpecFile {
            variables: Some(NAMES.iter().map(|s| s.to_string()).collect()),
            hyperplanes: spec.hyperplanes().iter().map(|h| h.iter().map(|c| c.to_string()).collect()).collect(),
            seed: None,
            name: None,
        }
    }

    pub fn to_spec(&self) -> Result<RegionSpec, InputError> {
        if let Some(v) = &self.variables {
            if v.iter().map(String::as_str).ne(NAMES.iter().copied()) {
                return Err(InputError::Variables(v.clone()));
            }
        }
        let mut hs = Vec::new();
        for (j, h) in self.hyperplanes.iter().enumerate() {
            let row = h
                .iter()
                .map(|t| t.trim().parse::<Rat>().map_err(|_| InputError::Coefficient { index: j + 1, text: t.clone() }))
                .collect::<Result<Vec<_>, _>>()?;
            hs.push(row);
        }
        Ok(RegionSpec::new(hs)?)
    }
}

/// Serializes with object keys in sorted order.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

type P = MultiPoly<Surd>;

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, InputError> {
        Err(InputError::Poly(self.i, msg.to_string()))
    }

    fn skip(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<P, InputError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<P, InputError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.power()?;
                    match constant_of(&d) {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.inv()),
                        _ => return self.err("division by a non-constant or zero"),
                    }
                }
                Some(c) if c == b'p' || c == b's' || c == b'(' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<P, InputError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.skip();
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                self.i += 1;
            }
            let e: u32 = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().or_else(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<P, InputError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(e)
            }
            Some(b'p') => {
                let name = std::str::from_utf8(self.s.get(self.i..self.i + 3).unwrap_or(b"")).unwrap_or("");
                match coord_index(name) {
                    Some(k) => {
                        self.i += 3;
                        Ok(MultiPoly::var(6, k))
                    }
                    None => self.err("unknown variable"),
                }
            }
            Some(b's') if self.s[self.i..].starts_with(b"sqrt") => {
                self.i += 4;
                let inner = self.atom()?;
                match constant_of(&inner).and_then(|c| c.as_rat()) {
                    Some(r) if r.signum() >= 0 => Ok(MultiPoly::constant(6, Surd::sqrt_rat(&r))),
                    _ => self.err("sqrt of a non-rational or negative value"),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let n: Rat = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().or_else(|_| self.err("bad number"))?;
                Ok(MultiPoly::constant(6, Surd::from_rat(&n)))
            }
            _ => self.err("unexpected input"),
        }
    }
}

fn constant_of(p: &P) -> Option<Surd> {
    match p.degree() {
        None => Some(Surd::zero()),
        Some(0) => Some(p.coeff(&crate::exact::Mono::one(6))),
        _ => None,
    }
}

/// Parses a polynomial in `p12, …, p34` with rational or surd coefficients, in the format
/// written by the reports (`2*p12^2 + p12p13 - (1 + sqrt(42))*p34`). A trailing `= 0` is allowed.
pub fn parse_poly(text: &str) -> Result<MultiPoly<Surd>, InputError> {
    let (lhs, rhs) = match text.split_once('=') {
        Some((l, r)) => (l, Some(r)),
        None => (text, None),
    };
    let mut out = parse_side(lhs)?;
    if let Some(r) = rhs {
        out = out.sub(&parse_side(r)?);
    }
    Ok(out)
}

fn parse_side(text: &str) -> Result<P, InputError> {
    let mut p = Parser { s: text.as_bytes(), i: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Reads an adjoint from a file holding either a bare polynomial or a JSON object with an
/// `adjoint` string.
pub fn read_adjoint(path: &str) -> Result<MultiPoly<Surd>, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Read(path.to_string(), e.to_string()))?;
    if let Ok(serde_json::Value::Object(m)) = serde_json::from_str::<serde_json::Value>(&text) {
        if let Some(serde_json::Value::String(s)) = m.get("adjoint") {
            return parse_poly(s);
        }
    }
    parse_poly(text.trim())
}
