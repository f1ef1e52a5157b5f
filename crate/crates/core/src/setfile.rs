//! The `.lfw` set-description format.
//!
//! ```text
//! # comment
//! field p=2 c=1 poly=0,1
//! set W
//!   ball scale=0 center=(1)@-1
//! end
//! ```
//!
//! A center is `0` or a `+`-separated list of monomials `(d0,...,d_{c-1})@k`,
//! the GF(q) element with those coefficients times `p^k`.

use std::fmt;

use crate::field::{Field, FieldElement, FieldParams, Gf};
use crate::sets::{Ball, ClopenSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Named sets over one field, in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct SetFile {
    field: Field,
    sets: Vec<(String, ClopenSet)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Parsed {
    pub file: SetFile,
    pub warnings: Vec<Warning>,
}

impl SetFile {
    pub fn new(field: &Field) -> Self {
        Self {
            field: field.clone(),
            sets: Vec::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn sets(&self) -> &[(String, ClopenSet)] {
        &self.sets
    }

    pub fn get(&self, name: &str) -> Option<&ClopenSet> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// Appends a set; names must be new identifiers and fields must match.
    pub fn push(&mut self, name: &str, set: ClopenSet) -> crate::Result<()> {
        if !is_identifier(name) {
            return Err(crate::Error::InvalidParams(format!("bad set name {name:?}")));
        }
        if self.get(name).is_some() {
            return Err(crate::Error::InvalidParams(format!(
                "duplicate set name {name:?}"
            )));
        }
        if set.field() != &self.field {
            return Err(crate::Error::ParamsMismatch);
        }
        self.sets.push((name.to_string(), set));
        Ok(())
    }

    /// The sets named in `names`, in that order.
    pub fn family(&self, names: &[&str]) -> Result<Vec<ClopenSet>, String> {
        names
            .iter()
            .map(|n| self.get(n).cloned().ok_or_else(|| format!("no set named {n:?}")))
            .collect()
    }
}

impl fmt::Display for SetFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly: Vec<String> = self.field.params().modulus().iter().map(u32::to_string).collect();
        writeln!(
            f,
            "field p={} c={} poly={}",
            self.field.p(),
            self.field.c(),
            poly.join(",")
        )?;
        for (name, set) in &self.sets {
            writeln!(f, "set {name}")?;
            for b in set.balls() {
                writeln!(f, "  {b}")?;
            }
            writeln!(f, "end")?;
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// A whitespace-separated word with its 1-based column.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(i, w)| (line[..i].chars().count() + 1, w))
        .collect()
}

fn value_of<'a>(word: &'a str, key: &str) -> Option<&'a str> {
    word.strip_prefix(key)?.strip_prefix('=')
}

struct Cursor {
    line: usize,
}

impl Cursor {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }
}

fn parse_int<T: std::str::FromStr>(
    cur: &Cursor,
    column: usize,
    text: &str,
    what: &str,
) -> Result<T, ParseError> {
    text.parse()
        .map_err(|_| cur.err(column, format!("expected an integer for {what}, found {text:?}")))
}

fn parse_field(cur: &Cursor, ws: &[(usize, &str)]) -> Result<Field, ParseError> {
    let mut p = None;
    let mut c = None;
    let mut poly = None;
    for &(col, w) in &ws[1..] {
        if let Some(v) = value_of(w, "p") {
            p = Some(parse_int::<u32>(cur, col, v, "p")?);
        } else if let Some(v) = value_of(w, "c") {
            c = Some(parse_int::<u32>(cur, col, v, "c")?);
        } else if let Some(v) = value_of(w, "poly") {
            let digits: Result<Vec<u32>, ParseError> = v
                .split(',')
                .map(|d| parse_int(cur, col + 5, d.trim(), "poly"))
                .collect();
            poly = Some(digits?);
        } else {
            return Err(cur.err(col, format!("unexpected {w:?}; expected p=, c= or poly=")));
        }
    }
    let col = ws[0].0;
    let p = p.ok_or_else(|| cur.err(col, "field line needs p="))?;
    let c = c.ok_or_else(|| cur.err(col, "field line needs c="))?;
    let params = match poly {
        Some(m) => FieldParams::new(p, c, m),
        None => FieldParams::with_default_modulus(p, c),
    }
    .map_err(|e| cur.err(col, e.to_string()))?;
    Ok(Field::new(params))
}

/// Parses a center expression. Errors carry a 0-based character offset
/// into `text`.
pub fn parse_center(field: &Field, text: &str) -> Result<FieldElement, (usize, String)> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if trimmed == "0" {
        return Ok(FieldElement::zero(field));
    }
    let mut value = FieldElement::zero(field);
    let mut offset = lead;
    for part in trimmed.split('+') {
        let here = offset + (part.len() - part.trim_start().len());
        offset += part.len() + 1;
        let mono = part.trim();
        let err = |msg: String| (here, msg);
        let rest = mono
            .strip_prefix('(')
            .ok_or_else(|| err(format!("malformed monomial {mono:?}; expected (d0,...)@k")))?;
        let (digits, index) = rest
            .split_once(")@")
            .ok_or_else(|| err(format!("malformed monomial {mono:?}; expected (d0,...)@k")))?;
        let index: i32 = index
            .trim()
            .parse()
            .map_err(|_| err(format!("malformed exponent in {mono:?}")))?;
        let digits: Vec<u32> = digits
            .split(',')
            .map(|d| d.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(format!("malformed digits in {mono:?}")))?;
        if digits.len() != field.c() as usize {
            return Err(err(format!(
                "expected {} digits, found {}",
                field.c(),
                digits.len()
            )));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= field.p()) {
            return Err(err(format!("digit {d} >= p = {}", field.p())));
        }
        let g: Gf = field.gf(&digits).map_err(|e| err(e.to_string()))?;
        value = &value + &FieldElement::monomial(field, g, index);
    }
    Ok(value)
}

pub fn parse_setfile(text: &str) -> Result<Parsed, ParseError> {
    let mut field: Option<Field> = None;
    let mut file: Option<SetFile> = None;
    let mut warnings = Vec::new();
    let mut open: Option<(String, usize, Vec<Ball>)> = None;
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let cur = Cursor { line: n + 1 };
        last_line = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        let ws = words(line);
        let Some(&(col, keyword)) = ws.first() else {
            continue;
        };
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(cur.err(col, "duplicate field line"));
                }
                let f = parse_field(&cur, &ws)?;
                file = Some(SetFile::new(&f));
                field = Some(f);
            }
            "set" => {
                if field.is_none() {
                    return Err(cur.err(col, "the field line must come first"));
                }
                if open.is_some() {
                    return Err(cur.err(col, "set inside a set; missing end"));
                }
                let [_, (ncol, name)] = ws[..] else {
                    return Err(cur.err(col, "expected: set <name>"));
                };
                if !is_identifier(name) {
                    return Err(cur.err(ncol, format!("bad set name {name:?}")));
                }
                if file.as_ref().and_then(|f| f.get(name)).is_some() {
                    return Err(cur.err(ncol, format!("duplicate set name {name:?}")));
                }
                open = Some((name.to_string(), n + 1, Vec::new()));
            }
            "ball" => {
                let Some((_, _, balls)) = open.as_mut() else {
                    return Err(cur.err(col, "ball outside a set"));
                };
                let f = field.as_ref().expect("set requires field");
                let Some(&(scol, sword)) = ws.get(1) else {
                    return Err(cur.err(col, "expected: ball scale=<int> center=<expr>"));
                };
                let scale_text =
                    value_of(sword, "scale").ok_or_else(|| cur.err(scol, "expected scale=<int>"))?;
                let scale: i32 = parse_int(&cur, scol + 6, scale_text, "scale")?;
                let Some(&(ccol, cword)) = ws.get(2) else {
                    return Err(cur.err(col, "expected center=<expr>"));
                };
                if value_of(cword, "center").is_none() {
                    return Err(cur.err(ccol, "expected center=<expr>"));
                }
                // The center expression runs to the end of the line.
                let start = line.char_indices().nth(ccol - 1).map(|(i, _)| i).unwrap_or(0) + "center=".len();
                let expr = &line[start..];
                let center = parse_center(f, expr).map_err(|(off, m)| cur.err(ccol + 7 + off, m))?;
                if center.top_index().is_some_and(|top| top >= scale) {
                    warnings.push(Warning {
                        line: n + 1,
                        message: format!("center digits at index >= {scale} dropped"),
                    });
                }
                balls.push(Ball::new(center, scale));
            }
            "end" => {
                let Some((name, _, balls)) = open.take() else {
                    return Err(cur.err(col, "end without set"));
                };
                let f = field.as_ref().expect("set requires field");
                let set = ClopenSet::from_balls(f, balls).expect("same field");
                file.as_mut()
                    .expect("field seen")
                    .push(&name, set)
                    .map_err(|e| cur.err(col, e.to_string()))?;
            }
            other => return Err(cur.err(col, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some((name, line, _)) = open {
        return Err(ParseError {
            line,
            column: 1,
            message: format!("set {name:?} has no end"),
        });
    }
    let file = file.ok_or(ParseError {
        line: last_line.max(1),
        column: 1,
        message: "missing field line".into(),
    })?;
    Ok(Parsed { file, warnings })
}
