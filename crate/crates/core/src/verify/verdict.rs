use std::fmt;

use crate::sets::{Ball, ExtendedRational, StepFunction};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Clause {
    pub tag: String,
    pub status: Status,
    pub detail: String,
}

/// An exact quantity recorded in a certificate.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Rational(Rational),
    Extended(ExtendedRational),
    Integer(i64),
    Flag(bool),
    Step(StepFunction<i64>),
    Text(String),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Rational(r) => write!(f, "{r}"),
            Quantity::Extended(r) => write!(f, "{r}"),
            Quantity::Integer(n) => write!(f, "{n}"),
            Quantity::Flag(b) => write!(f, "{b}"),
            Quantity::Step(s) => {
                let parts: Vec<String> = s.pieces().iter().map(|(b, v)| format!("{v} on [{b}]")).collect();
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join("; "))
                }
            }
            Quantity::Text(t) => f.write_str(t),
        }
    }
}

/// Evidence for a failed clause. Set indices are 0-based positions in the
/// family passed to the verifier. Every variant can be re-checked against
/// the family with [`Witness::replay`].
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A canonical ball of `W_set` centered at `0`.
    ZeroBall { clause: String, set: usize, ball: Ball },
    /// `sum_t 1_{W_set + u(t)}` takes `value` on `ball` (inside `D`) where
    /// `expected` was required; `at_most` marks an upper-bound requirement.
    Multiplicity {
        clause: String,
        set: usize,
        ball: Ball,
        value: i64,
        expected: i64,
        at_most: bool,
    },
    /// `ball` lies in `W_l` and in `p^j W_m`.
    Intersection {
        clause: String,
        l: usize,
        m: usize,
        j: i32,
        ball: Ball,
    },
    /// `ball` lies in `p^j W_m` and in `p^j W_m + u(t)`.
    TranslateOverlap {
        clause: String,
        m: usize,
        j: i32,
        t: u64,
        ball: Ball,
    },
    /// Two balls, each rescaled onto the unit sphere, overlap on `ball`.
    /// The pairs are `(set, ball index)`.
    NormalizedOverlap {
        clause: String,
        first: (usize, usize),
        second: (usize, usize),
        ball: Ball,
    },
    /// Sub-ball of the unit sphere not reached by any rescaled ball.
    Uncovered { clause: String, ball: Ball },
    /// `ball` lies in `S` but misses `p^{-1} S`.
    NotNested { clause: String, ball: Ball },
    /// `S` has no ball around the origin.
    NoZeroBall { clause: String },
    /// `mu(W_set)` differs from 1.
    Measure {
        clause: String,
        set: usize,
        measure: Rational,
    },
    /// The dimension function takes `value` on `ball` where `expected` was required.
    DimensionValue {
        clause: String,
        ball: Ball,
        value: i64,
        expected: i64,
    },
    /// The two sides of the super-wavelet identity differ on `ball` at dilation `n`.
    SideMismatch {
        clause: String,
        n: i32,
        ball: Ball,
        left: i64,
        right: i64,
    },
    /// Two exact quantities that should agree do not.
    Mismatch {
        clause: String,
        left: Rational,
        right: Rational,
    },
}

impl Witness {
    pub fn clause(&self) -> &str {
        match self {
            Witness::ZeroBall { clause, .. }
            | Witness::Multiplicity { clause, .. }
            | Witness::Intersection { clause, .. }
            | Witness::TranslateOverlap { clause, .. }
            | Witness::NormalizedOverlap { clause, .. }
            | Witness::Uncovered { clause, .. }
            | Witness::NotNested { clause, .. }
            | Witness::NoZeroBall { clause }
            | Witness::Measure { clause, .. }
            | Witness::DimensionValue { clause, .. }
            | Witness::SideMismatch { clause, .. }
            | Witness::Mismatch { clause, .. } => clause,
        }
    }
}

/// Outcome of one decision procedure: clause-by-clause results, witnesses
/// for failures, and the exact quantities computed along the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    pub clauses: Vec<Clause>,
    pub witnesses: Vec<Witness>,
    pub quantities: Vec<(String, Quantity)>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub(crate) fn new(check: &str) -> Self {
        Self {
            check: check.to_string(),
            status: Status::Pass,
            clauses: Vec::new(),
            witnesses: Vec::new(),
            quantities: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records a clause; the verdict passes only if every clause does.
    pub(crate) fn clause(&mut self, tag: &str, ok: bool, detail: impl Into<String>) {
        if !ok {
            self.status = Status::Fail;
        }
        self.clauses.push(Clause {
            tag: tag.to_string(),
            status: Status::from_bool(ok),
            detail: detail.into(),
        });
    }

    pub(crate) fn quantity(&mut self, name: &str, q: Quantity) {
        self.quantities.push((name.to_string(), q));
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Copies clauses, witnesses, quantities and notes from `other`.
    pub(crate) fn merge(&mut self, other: Verdict) {
        if !other.is_pass() {
            self.status = Status::Fail;
        }
        self.clauses.extend(other.clauses);
        self.witnesses.extend(other.witnesses);
        self.quantities.extend(other.quantities);
        self.notes.extend(other.notes);
    }
    pub fn is_pass(&self) -> bool {
        self.status.is_pass()
    }

    pub fn get(&self, name: &str) -> Option<&Quantity> {
        self.quantities.iter().find(|(n, _)| n == name).map(|(_, q)| q)
    }

    pub fn clause_status(&self, tag: &str) -> Option<Status> {
        self.clauses.iter().find(|c| c.tag == tag).map(|c| c.status)
    }

    pub fn witness(&self, tag: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.clause() == tag)
    }
}
