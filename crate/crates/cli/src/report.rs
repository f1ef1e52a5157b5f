//! Rendering of verdicts as text or as schema-1 JSON.

use lfw_core::sets::ExtendedRational;
use lfw_core::verify::{Quantity, Verdict, Witness};
use lfw_core::{Field, Rational};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// `num/den`, with the denominator always present.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn extended(r: &ExtendedRational) -> String {
    match r {
        ExtendedRational::Finite(r) => rational(r),
        ExtendedRational::Infinite => "inf".into(),
    }
}

pub fn quantity(q: &Quantity) -> Value {
    match q {
        Quantity::Rational(r) => Value::String(rational(r)),
        Quantity::Extended(r) => Value::String(extended(r)),
        Quantity::Integer(n) => json!(n),
        Quantity::Flag(b) => json!(b),
        Quantity::Step(s) => Value::Array(
            s.pieces()
                .iter()
                .map(|(b, v)| json!({ "ball": b.to_string(), "value": v }))
                .collect(),
        ),
        Quantity::Text(t) => Value::String(t.clone()),
    }
}

/// Witness as a flat JSON object; set and ball indices become 1-based,
/// and `m` comes with the set's name.
pub fn witness(w: &Witness, names: &[String]) -> Value {
    let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("#{}", i + 1));
    let mut obj = Map::new();
    obj.insert("clause".into(), json!(w.clause()));
    let (kind, fields) = match w {
        Witness::ZeroBall { set, ball, .. } => (
            "zero-ball",
            json!({ "m": set + 1, "set": name(*set), "ball": ball.to_string() }),
        ),
        Witness::Multiplicity {
            set,
            ball,
            value,
            expected,
            at_most,
            ..
        } => (
            "multiplicity",
            json!({ "m": set + 1, "set": name(*set), "ball": ball.to_string(), "value": value,
                    "expected": expected, "at_most": at_most }),
        ),
        Witness::Intersection { l, m, j, ball, .. } => (
            "intersection",
            json!({ "l": l + 1, "m": m + 1, "j": j, "ball": ball.to_string() }),
        ),
        Witness::TranslateOverlap { m, j, t, ball, .. } => (
            "translate-overlap",
            json!({ "m": m + 1, "set": name(*m), "j": j, "t": t, "ball": ball.to_string() }),
        ),
        Witness::NormalizedOverlap {
            first, second, ball, ..
        } => (
            "normalized-overlap",
            json!({ "first": [first.0 + 1, first.1 + 1], "second": [second.0 + 1, second.1 + 1],
                    "ball": ball.to_string() }),
        ),
        Witness::Uncovered { ball, .. } => ("uncovered", json!({ "ball": ball.to_string() })),
        Witness::NotNested { ball, .. } => ("not-nested", json!({ "ball": ball.to_string() })),
        Witness::NoZeroBall { .. } => ("no-zero-ball", json!({})),
        Witness::Measure { set, measure, .. } => (
            "measure",
            json!({ "m": set + 1, "set": name(*set), "measure": rational(measure) }),
        ),
        Witness::DimensionValue {
            ball,
            value,
            expected,
            ..
        } => (
            "dimension-value",
            json!({ "ball": ball.to_string(), "value": value, "expected": expected }),
        ),
        Witness::SideMismatch {
            n, ball, left, right, ..
        } => (
            "side-mismatch",
            json!({ "n": n, "ball": ball.to_string(), "left": left, "right": right }),
        ),
        Witness::Mismatch { left, right, .. } => (
            "mismatch",
            json!({ "left": rational(left), "right": rational(right) }),
        ),
    };
    obj.insert("kind".into(), json!(kind));
    if let Value::Object(extra) = fields {
        obj.extend(extra);
    }
    Value::Object(obj)
}

pub fn params(field: &Field) -> Value {
    let poly: Vec<String> = field.params().modulus().iter().map(u32::to_string).collect();
    json!({ "p": field.p(), "c": field.c(), "q": field.q(), "poly": poly.join(",") })
}

/// The report skeleton shared by all commands.
pub struct Report {
    pub command: String,
    pub field: Option<Field>,
    pub sets: Vec<String>,
    pub verdict: Option<Verdict>,
    pub extra: Map<String, Value>,
    pub oracle: Option<Value>,
    pub refusal: Option<String>,
    pub oracle_failed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            field: None,
            sets: Vec::new(),
            verdict: None,
            extra: Map::new(),
            oracle: None,
            refusal: None,
            oracle_failed: false,
        }
    }

    pub fn status(&self) -> &'static str {
        match (&self.refusal, &self.verdict) {
            (Some(_), _) => "REFUSED",
            (None, Some(v)) if !v.is_pass() => "FAIL",
            (None, _) if self.oracle_failed => "FAIL",
            _ => "PASS",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            "PASS" => 0,
            "FAIL" => 1,
            _ => 3,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("schema".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(self.command));
        if let Some(f) = &self.field {
            obj.insert("params".into(), params(f));
        }
        obj.insert("sets".into(), json!(self.sets));
        obj.insert("verdict".into(), json!(self.status()));
        if let Some(reason) = &self.refusal {
            obj.insert("refusal".into(), json!(reason));
        }
        if let Some(v) = &self.verdict {
            obj.insert("check".into(), json!(v.check));
            obj.insert(
                "clauses".into(),
                Value::Array(
                    v.clauses
                        .iter()
                        .map(|c| json!({ "tag": c.tag, "status": c.status.to_string(), "detail": c.detail }))
                        .collect(),
                ),
            );
            obj.insert(
                "witnesses".into(),
                Value::Array(v.witnesses.iter().map(|w| witness(w, &self.sets)).collect()),
            );
            let mut q = Map::new();
            for (name, value) in &v.quantities {
                q.insert(name.clone(), quantity(value));
            }
            obj.insert("quantities".into(), Value::Object(q));
            obj.insert("notes".into(), json!(v.notes));
        }
        for (k, v) in &self.extra {
            obj.insert(k.clone(), v.clone());
        }
        if let Some(o) = &self.oracle {
            obj.insert("oracle".into(), o.clone());
        }
        Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let check = self
            .verdict
            .as_ref()
            .map_or(self.command.as_str(), |v| v.check.as_str());
        out.push_str(&format!("{check}: {}\n", self.status()));
        if let Some(reason) = &self.refusal {
            out.push_str(&format!("  refused: {reason}\n"));
        }
        if let Some(v) = &self.verdict {
            for c in &v.clauses {
                out.push_str(&format!("  [{}] {}: {}\n", c.status, c.tag, c.detail));
            }
            if !v.witnesses.is_empty() {
                out.push_str("witnesses:\n");
                for w in &v.witnesses {
                    out.push_str(&format!("  {}\n", compact(&witness(w, &self.sets))));
                }
            }
            if !v.quantities.is_empty() {
                out.push_str("quantities:\n");
                for (name, q) in &v.quantities {
                    match q {
                        Quantity::Step(s) => {
                            out.push_str(&format!("  {name}:\n"));
                            for (b, val) in s.pieces() {
                                out.push_str(&format!("    {val} on {b}\n"));
                            }
                        }
                        Quantity::Rational(r) => out.push_str(&format!("  {name} = {}\n", rational(r))),
                        Quantity::Extended(r) => out.push_str(&format!("  {name} = {}\n", extended(r))),
                        other => out.push_str(&format!("  {name} = {other}\n")),
                    }
                }
            }
            for n in &v.notes {
                out.push_str(&format!("note: {n}\n"));
            }
        }
        for (k, v) in &self.extra {
            out.push_str(&format!("{k}: {}\n", compact(v)));
        }
        if let Some(o) = &self.oracle {
            out.push_str(&format!("oracle: {}\n", compact(o)));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
