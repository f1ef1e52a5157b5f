//! Independent re-evaluation of failure witnesses.
//!
//! Each witness names a ball; replay picks a point of that ball and
//! re-evaluates the violated clause there through the pointwise sums in
//! [`crate::oracle::pointwise`], without the set algebra that produced it.

use num_traits::One;

use super::Witness;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::oracle::pointwise::{calderon_sum_at, dimension_at, side_at, translation_count_at};
use crate::sets::ClopenSet;

fn member(family: &[ClopenSet], index: usize) -> Result<&ClopenSet> {
    family.get(index).ok_or_else(|| {
        Error::Domain(format!(
            "witness refers to set {index}, family has {}",
            family.len()
        ))
    })
}

impl Witness {
    /// True when the violation recorded by the witness is observed again
    /// on `family`, the family the verifier was run on.
    pub fn replay(&self, family: &[ClopenSet]) -> Result<bool> {
        match self {
            Witness::ZeroBall { set, ball, .. } => {
                let s = member(family, *set)?;
                Ok(ball.contains_zero() && s.contains(&FieldElement::zero(s.field())))
            }
            Witness::Multiplicity {
                set,
                ball,
                value,
                expected,
                at_most,
                ..
            } => {
                let s = member(family, *set)?;
                let x = ball.sample_point();
                let found = translation_count_at(s, &x)?;
                let bad = if *at_most {
                    found > *expected
                } else {
                    found != *expected
                };
                Ok(found == *value && bad && x.valuation().is_some_and(|v| v >= 0))
            }
            Witness::Intersection { l, m, j, ball, .. } => {
                let x = ball.sample_point();
                Ok(member(family, *l)?.contains(&x) && member(family, *m)?.contains(&x.shift(-j)))
            }
            Witness::TranslateOverlap { m, j, t, ball, .. } => {
                let s = member(family, *m)?;
                let field = s.field();
                let x = ball.sample_point();
                let back = &x - &field.u(*t);
                Ok(t % u64::from(field.q()) != 0
                    && *j >= 0
                    && s.contains(&x.shift(-j))
                    && s.contains(&back.shift(-j)))
            }
            Witness::NormalizedOverlap {
                first, second, ball, ..
            } => {
                let x = ball.sample_point();
                let owns = |(set, index): (usize, usize)| -> Result<bool> {
                    let b = member(family, set)?
                        .balls()
                        .get(index)
                        .ok_or_else(|| Error::Domain(format!("no ball {index} in set {set}")))?;
                    Ok(b.valuation().is_some_and(|v| b.contains(&x.shift(v))))
                };
                Ok(first != second
                    && x.valuation() == Some(0)
                    && owns(*first)?
                    && owns(*second)?
                    && calderon_sum_at(family, &x)? >= 2)
            }
            Witness::Uncovered { ball, .. } => {
                let x = ball.sample_point();
                Ok(x.valuation() == Some(0) && calderon_sum_at(family, &x)? == 0)
            }
            Witness::NotNested { ball, .. } => {
                let s = member(family, 0)?;
                let x = ball.sample_point();
                Ok(s.contains(&x) && !s.contains(&x.shift(1)))
            }
            Witness::NoZeroBall { .. } => {
                let s = member(family, 0)?;
                Ok(!s.contains(&FieldElement::zero(s.field())))
            }
            Witness::Measure { set, measure, .. } => {
                Ok(member(family, *set)?.measure() == *measure && !measure.is_one())
            }
            Witness::DimensionValue {
                ball,
                value,
                expected,
                ..
            } => {
                let x = ball.sample_point();
                Ok(value != expected && dimension_at(family, &x)? == *value)
            }
            Witness::SideMismatch { .. } => Err(Error::Domain(
                "a side mismatch is replayed against both families".into(),
            )),
            Witness::Mismatch { left, right, .. } => Ok(left != right),
        }
    }

    /// Replay for witnesses of the super-wavelet equivalence check.
    pub fn replay_equivalence(&self, left: &[ClopenSet], right: &[ClopenSet]) -> Result<bool> {
        match self {
            Witness::SideMismatch {
                n,
                ball,
                left: a,
                right: b,
                ..
            } => {
                let x = ball.sample_point();
                Ok(a != b && side_at(left, *n, &x)? == *a && side_at(right, *n, &x)? == *b)
            }
            other => other.replay(left),
        }
    }
}
