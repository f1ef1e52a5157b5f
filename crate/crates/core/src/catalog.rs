//! Named constructions, with the verdicts each is expected to receive, and
//! mutations that turn them into negative fixtures.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::setfile::SetFile;
use crate::sets::{Ball, ClopenSet};
use crate::verify::{
    check_mra, check_multiwavelet_set, check_orthonormal_system, check_parseval_multiframelet_set,
    check_parseval_scaling_set, check_scaling_set, dilation_partition_check,
};

/// `{ u(m) + D : m = 1, ..., q - 1 }`.
pub fn shannon_multiwavelet(field: &Field) -> Vec<ClopenSet> {
    (1..u64::from(field.q()))
        .map(|m| ClopenSet::ball(Ball::new(field.u(m), 0)))
        .collect()
}

/// `D`, the scaling set of the Shannon MRA.
pub fn unit_scaling_set(field: &Field) -> ClopenSet {
    ClopenSet::ring(field)
}

pub const NAMES: [&str; 5] = [
    "shannon",
    "unit-scaling",
    "prime-ideal",
    "dilated-shannon",
    "unit-shell",
];

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub field: Field,
    pub family: Vec<ClopenSet>,
    /// Verifier name to expected PASS (`true`) or FAIL.
    pub expected: BTreeMap<String, bool>,
    pub note: String,
}

impl CatalogEntry {
    /// Set names `W1, W2, ...` for a one-set-per-member family; `S` for
    /// single scaling sets.
    pub fn set_names(&self) -> Vec<String> {
        if self.family.len() == 1 && self.expected.contains_key("scaling-set") {
            vec!["S".into()]
        } else {
            (1..=self.family.len()).map(|i| format!("W{i}")).collect()
        }
    }

    pub fn to_setfile(&self) -> SetFile {
        let mut file = SetFile::new(&self.field);
        for (name, set) in self.set_names().iter().zip(&self.family) {
            file.push(name, set.clone()).expect("distinct generated names");
        }
        file
    }
}

fn expect(pairs: &[(&str, bool)]) -> BTreeMap<String, bool> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// A catalog entry by name.
pub fn entry(name: &str, field: &Field) -> Result<CatalogEntry> {
    let one_set = |family: Vec<ClopenSet>, pairs: &[(&str, bool)], note: &str| CatalogEntry {
        name: name.to_string(),
        field: field.clone(),
        family,
        expected: expect(pairs),
        note: note.to_string(),
    };
    let q_is_two = field.q() == 2;
    Ok(match name {
        "shannon" => one_set(
            shannon_multiwavelet(field),
            &[
                ("dilation-partition", true),
                ("orthonormal-system", true),
                ("parseval-multiframelet-set", true),
                ("multiwavelet-set", true),
                ("mra", true),
            ],
            "cosets u(m) + D, m = 1..q-1",
        ),
        "unit-scaling" => one_set(
            vec![unit_scaling_set(field)],
            &[
                ("scaling-set", true),
                ("parseval-scaling-set", true),
                ("dilation-partition", false),
                ("orthonormal-system", false),
            ],
            "D",
        ),
        "prime-ideal" => one_set(
            vec![ClopenSet::ideal(field, 1)],
            &[
                ("scaling-set", false),
                ("parseval-scaling-set", true),
                ("dilation-partition", false),
            ],
            "p D: translates disjoint but not covering",
        ),
        "dilated-shannon" => {
            let family: Vec<ClopenSet> = shannon_multiwavelet(field).iter().map(|s| s.dilate(-1)).collect();
            one_set(
                family,
                &[
                    ("dilation-partition", true),
                    ("orthonormal-system", false),
                    ("parseval-multiframelet-set", false),
                    ("multiwavelet-set", false),
                ],
                "p^-1 (u(m) + D): tiles by dilation, translate u(1) maps each set onto itself",
            )
        }
        "unit-shell" => one_set(
            vec![ClopenSet::sphere(field, 1)],
            &[
                ("dilation-partition", true),
                ("orthonormal-system", q_is_two),
                ("parseval-multiframelet-set", q_is_two),
                ("multiwavelet-set", q_is_two),
            ],
            "{|xi| = q} as a single set, of measure q - 1",
        ),
        other => {
            return Err(Error::Domain(format!(
                "unknown catalog entry {other:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    })
}

/// Runs every verifier named in `names` on `family`. Verifiers that refuse
/// the input are left out of the result.
pub fn evaluate<'a>(
    family: &[ClopenSet],
    names: impl IntoIterator<Item = &'a str>,
) -> BTreeMap<String, bool> {
    let mut out = BTreeMap::new();
    for name in names {
        let pass = match name {
            "dilation-partition" => Some(dilation_partition_check(family).is_pass()),
            "orthonormal-system" => check_orthonormal_system(family).ok().map(|v| v.is_pass()),
            "parseval-multiframelet-set" => {
                check_parseval_multiframelet_set(family).ok().map(|v| v.is_pass())
            }
            "multiwavelet-set" => check_multiwavelet_set(family).ok().map(|v| v.is_pass()),
            "mra" => check_mra(family, false).ok().map(|v| v.is_pass()),
            "scaling-set" => family
                .first()
                .filter(|_| family.len() == 1)
                .map(|s| check_scaling_set(s).is_pass()),
            "parseval-scaling-set" => family
                .first()
                .filter(|_| family.len() == 1)
                .map(|s| check_parseval_scaling_set(s).is_pass()),
            _ => None,
        };
        if let Some(pass) = pass {
            out.insert(name.to_string(), pass);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Removes ball `ball` from the first set that has it, counting balls
    /// across the family in order.
    DropBall(usize),
    /// Translates ball `ball` by `u(t)`.
    ShiftBall(usize, u64),
    /// Replaces ball `ball` by its dilate `p^j ball`.
    DilateBall(usize, i32),
}

impl Mutation {
    fn target(self) -> usize {
        match self {
            Mutation::DropBall(i) | Mutation::ShiftBall(i, _) | Mutation::DilateBall(i, _) => i,
        }
    }

    /// The clause the mutation is designed to break.
    pub fn targets(self) -> &'static str {
        match self {
            Mutation::DropBall(_) => "tiling of the unit sphere by rescaled balls (uncovered region)",
            Mutation::ShiftBall(..) => "translation tiling and disjointness of translates",
            Mutation::DilateBall(..) => "translation disjointness of p^j W_m (ps-b)",
        }
    }
}

/// Applies `mutation` and recomputes the expected verdicts with the
/// verifiers.
pub fn mutate(entry: &CatalogEntry, mutation: Mutation) -> Result<CatalogEntry> {
    let index = mutation.target();
    let mut seen = 0;
    let mut family = entry.family.clone();
    let mut hit = false;
    for set in family.iter_mut() {
        let n = set.balls().len();
        if index < seen + n {
            let mut balls = set.balls().to_vec();
            let b = balls.remove(index - seen);
            match mutation {
                Mutation::DropBall(_) => {}
                Mutation::ShiftBall(_, t) => balls.push(b.translate(&entry.field.u(t))),
                Mutation::DilateBall(_, j) => balls.push(b.dilate(j)),
            }
            *set = ClopenSet::from_balls(&entry.field, balls)?;
            hit = true;
            break;
        }
        seen += n;
    }
    if !hit {
        return Err(Error::Domain(format!(
            "ball index {index} out of range ({seen} balls)"
        )));
    }
    let expected = evaluate(&family, entry.expected.keys().map(String::as_str));
    Ok(CatalogEntry {
        name: format!("{}+{}", entry.name, mutation_label(mutation)),
        field: entry.field.clone(),
        family,
        expected,
        note: format!("{}; designed to break: {}", entry.note, mutation.targets()),
    })
}

fn mutation_label(m: Mutation) -> String {
    match m {
        Mutation::DropBall(i) => format!("drop{i}"),
        Mutation::ShiftBall(i, t) => format!("shift{i}t{t}"),
        Mutation::DilateBall(i, j) => format!("dilate{i}j{j}"),
    }
}

/// `ball(p, 2)`, the set whose decomposability bound is `9/8` for `q = 2`.
pub fn small_ball(field: &Field) -> ClopenSet {
    ClopenSet::ball(Ball::new(FieldElement::uniformizer_pow(field, 1), 2))
}
