//! Reader and writer for the line-oriented ideal spec format.
//!
//! ```text
//! xvars: 2
//! yvars: 2
//! field: Q            # or `GF 7`; optional, defaults to Q
//! I: x1 + x1^3 + x2^2
//! I': y1 + y1^3 + y2^2
//! betti_J: 1          # optional override for the Betti numbers of R/J
//! ```
//!
//! Generators are separated by `;`. A term is an optional integer or
//! rational coefficient followed by `*`-separated powers `x<i>^<e>` or
//! `y<j>^<e>`. Whitespace is ignored and `#` starts a comment.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::formulas::BettiSequence;
use crate::monomial::{Block, Monomial, VariableContext};
use crate::poly::Polynomial;

/// Parsed contents of a spec file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub context: VariableContext,
    pub gens_i: Vec<Polynomial>,
    pub gens_iprime: Vec<Polynomial>,
    pub betti_j: Option<BettiSequence>,
    pub betti_jprime: Option<BettiSequence>,
}

impl IdealSpec {
    pub fn gens(&self, block: Block) -> &[Polynomial] {
        match block {
            Block::X => &self.gens_i,
            Block::Y => &self.gens_iprime,
        }
    }

    pub fn betti_override(&self, block: Block) -> Option<&BettiSequence> {
        match block {
            Block::X => self.betti_j.as_ref(),
            Block::Y => self.betti_jprime.as_ref(),
        }
    }

    /// Re-targets every coefficient to `field`.
    pub fn with_field(&self, field: Field) -> Result<IdealSpec> {
        let convert = |gens: &[Polynomial]| -> Result<Vec<Polynomial>> {
            gens.iter()
                .map(|g| {
                    let terms = g
                        .terms()
                        .iter()
                        .map(|(c, m)| {
                            let q = match c {
                                crate::field::Scalar::Q(q) => q.clone(),
                                crate::field::Scalar::Fp { value, .. } => {
                                    BigRational::from_integer(BigInt::from(*value))
                                }
                            };
                            Ok((field.from_rational(&q)?, m.clone()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Polynomial::from_terms(terms))
                })
                .collect()
        };
        Ok(IdealSpec {
            context: self.context.with_field(field),
            gens_i: convert(&self.gens_i)?,
            gens_iprime: convert(&self.gens_iprime)?,
            betti_j: self.betti_j.clone(),
            betti_jprime: self.betti_jprime.clone(),
        })
    }

    /// Serializes back into the spec format; parsing the result yields an
    /// equal value.
    pub fn to_text(&self) -> String {
        let ctx = &self.context;
        let join = |gens: &[Polynomial]| {
            gens.iter()
                .map(|g| g.display(ctx).to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        let mut out = String::new();
        let _ = writeln!(out, "xvars: {}", ctx.n());
        let _ = writeln!(out, "yvars: {}", ctx.nprime());
        let _ = writeln!(out, "field: {}", ctx.field());
        let _ = writeln!(out, "I: {}", join(&self.gens_i));
        let _ = writeln!(out, "I': {}", join(&self.gens_iprime));
        if let Some(b) = &self.betti_j {
            let _ = writeln!(out, "betti_J: {}", b.to_csv());
        }
        if let Some(b) = &self.betti_jprime {
            let _ = writeln!(out, "betti_J': {}", b.to_csv());
        }
        out
    }
}

struct Entry<'a> {
    line: usize,
    column: usize,
    value: &'a str,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_ideal_spec(text: &str) -> Result<IdealSpec> {
    const KEYS: [&str; 7] = ["xvars", "yvars", "field", "I", "I'", "betti_J", "betti_J'"];
    let mut entries: [Option<Entry>; 7] = Default::default();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(err(line, 1, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let Some(slot) = KEYS.iter().position(|k| *k == key) else {
            return Err(err(line, 1, format!("unknown key `{key}`")));
        };
        if entries[slot].is_some() {
            return Err(err(line, 1, format!("duplicate key `{key}`")));
        }
        let value = &content[colon + 1..];
        entries[slot] = Some(Entry {
            line,
            column: raw[..colon + 1].chars().count() + 1,
            value,
        });
    }

    let count = |slot: usize| -> Result<usize> {
        let Some(e) = &entries[slot] else {
            return Err(err(0, 0, format!("missing `{}`", KEYS[slot])));
        };
        let v = e.value.trim();
        match v.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k),
            _ => Err(err(
                e.line,
                e.column,
                format!("`{}` needs an integer >= 1, got `{v}`", KEYS[slot]),
            )),
        }
    };
    let n = count(0)?;
    let nprime = count(1)?;

    let field = match &entries[2] {
        None => Field::Rationals,
        Some(e) => parse_field(e.value).map_err(|m| err(e.line, e.column, m))?,
    };
    let context = VariableContext::new(n, nprime, field)?;

    let gens = |slot: usize, block: Block| -> Result<Vec<Polynomial>> {
        match &entries[slot] {
            None => Ok(Vec::new()),
            Some(e) => parse_generator_list(e, &context, block),
        }
    };
    let gens_i = gens(3, Block::X)?;
    let gens_iprime = gens(4, Block::Y)?;

    let betti = |slot: usize| -> Result<Option<BettiSequence>> {
        match &entries[slot] {
            None => Ok(None),
            Some(e) => parse_betti(e.value)
                .map(Some)
                .map_err(|m| err(e.line, e.column, m)),
        }
    };

    Ok(IdealSpec {
        context,
        gens_i,
        gens_iprime,
        betti_j: betti(5)?,
        betti_jprime: betti(6)?,
    })
}

/// Accepts `Q`, `GF 7`, `GF7`, `GF(7)`; also the CLI spellings `q` and `gf:7`.
pub fn parse_field(text: &str) -> std::result::Result<Field, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = t.to_ascii_lowercase();
    if lower == "q" || lower == "qq" {
        return Ok(Field::Rationals);
    }
    let Some(rest) = lower.strip_prefix("gf") else {
        return Err(format!("unknown field `{}`", text.trim()));
    };
    let digits = rest
        .trim_start_matches(':')
        .trim_start_matches('(')
        .trim_end_matches(')');
    let c: u64 = digits
        .parse()
        .map_err(|_| format!("bad field characteristic `{digits}`"))?;
    Field::prime(c).map_err(|e| e.to_string())
}

fn parse_betti(text: &str) -> std::result::Result<BettiSequence, String> {
    let values = text
        .split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<u64>()
                .map_err(|_| format!("Betti numbers must be non-negative integers, got `{s}`"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if values.first() != Some(&1) {
        return Err("Betti sequence must start with 1".into());
    }
    Ok(BettiSequence::from_u64s(&values))
}

fn parse_generator_list(e: &Entry, ctx: &VariableContext, block: Block) -> Result<Vec<Polynomial>> {
    // Non-whitespace characters with their 1-based columns.
    let chars: Vec<(char, usize)> = e
        .value
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (c, e.column + i))
        .collect();
    let end_col = e.column + e.value.chars().count();

    let mut out = Vec::new();
    for piece in chars.split(|(c, _)| *c == ';') {
        if piece.is_empty() {
            if chars.is_empty() {
                break;
            }
            let col = chars.last().map(|(_, c)| *c).unwrap_or(end_col);
            return Err(err(e.line, col, "empty generator"));
        }
        let mut p = TermParser {
            chars: piece,
            pos: 0,
            line: e.line,
            end_col,
            ctx,
        };
        let poly = p.polynomial()?;
        let first_col = piece[0].1;
        if let Some((_, m)) = poly
            .terms()
            .iter()
            .find(|(_, m)| m.support().any(|v| ctx.block_of(v) != block))
        {
            let other = match block {
                Block::X => "I' (y-variables)",
                Block::Y => "I (x-variables)",
            };
            return Err(err(
                e.line,
                first_col,
                format!("monomial `{}` belongs to {other}", m.display(ctx)),
            ));
        }
        out.push(poly);
    }
    Ok(out)
}

struct TermParser<'a> {
    chars: &'a [(char, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
    ctx: &'a VariableContext,
}

impl TermParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(c, _)| *c)
    }

    fn col(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or(self.end_col)
    }

    fn fail(&self, message: impl Into<String>) -> Error {
        err(self.line, self.col(), message)
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let field = self.ctx.field();
        let mut terms = Vec::new();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.pos += 1;
        }
        loop {
            let (coef, mono) = self.term()?;
            let coef = if negative { -coef } else { coef };
            let scalar = field
                .from_rational(&coef)
                .map_err(|e| self.fail(e.to_string()))?;
            terms.push((scalar, mono));
            match self.peek() {
                None => break,
                Some(c @ ('+' | '-')) => {
                    negative = c == '-';
                    self.pos += 1;
                }
                Some(c) => return Err(self.fail(format!("unexpected `{c}`"))),
            }
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let mut exps = vec![0u32; self.ctx.num_vars()];
        let mut coef = BigRational::from_integer(1.into());
        let mut need_factor = true;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.integer()?;
            let mut q = BigRational::from_integer(num);
            if self.peek() == Some('/') {
                self.pos += 1;
                let den = self.integer()?;
                if den.is_zero() {
                    return Err(self.fail("zero denominator"));
                }
                q /= BigRational::from_integer(den);
            }
            coef = q;
            need_factor = false;
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    need_factor = true;
                }
                Some('x' | 'y') => need_factor = true,
                _ => {}
            }
        }
        if need_factor {
            loop {
                let (var, e) = self.factor()?;
                exps[var] += e;
                if self.peek() == Some('*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok((coef, Monomial::new(exps)))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let start_col = self.col();
        let block = match self.peek() {
            Some('x') => Block::X,
            Some('y') => Block::Y,
            Some(c) => return Err(self.fail(format!("expected a variable, found `{c}`"))),
            None => return Err(self.fail("expected a variable")),
        };
        self.pos += 1;
        let idx = self
            .integer()?
            .to_usize()
            .filter(|&i| i >= 1 && i <= self.ctx.block_len(block))
            .ok_or_else(|| {
                err(
                    self.line,
                    start_col,
                    format!(
                        "variable out of range: {block} has {} variables",
                        self.ctx.block_len(block)
                    ),
                )
            })?;
        let var = self.ctx.block_vars(block).start + idx - 1;
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            e = self
                .integer()?
                .to_u32()
                .ok_or_else(|| self.fail("exponent too large"))?;
        }
        Ok((var, e))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|(c, _)| *c)
            .collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
