use std::fmt;
use std::ops::{AddAssign, Mul, Neg};

use num_complex::Complex64;

use super::refine::{refine, Pair};
use super::{Ball, ClopenSet};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::Rational;

/// Values a [`StepFunction`] can carry. The value domain is fixed by the
/// type parameter: integer multiplicities (`i64`), exact rationals, or
/// complex doubles. Moving between domains goes through [`StepFunction::map`].
pub trait StepValue: Clone + Default + PartialEq + AddAssign + fmt::Debug {}

impl<T: Clone + Default + PartialEq + AddAssign + fmt::Debug> StepValue for T {}

/// A finitely supported function on `K`, constant on each of finitely many
/// disjoint balls and zero elsewhere. Held in the coarsest canonical form,
/// so equality is structural.
#[derive(Clone, PartialEq)]
pub struct StepFunction<V> {
    field: Field,
    pieces: Vec<(Ball, V)>,
}

impl<V: StepValue> StepFunction<V> {
    pub fn zero(field: &Field) -> Self {
        Self {
            field: field.clone(),
            pieces: Vec::new(),
        }
    }

    /// Sum of `value * 1_ball` over possibly overlapping balls.
    pub fn from_weighted(field: &Field, items: impl IntoIterator<Item = (Ball, V)>) -> Result<Self> {
        let items: Vec<(Ball, V)> = items.into_iter().collect();
        if items.iter().any(|(b, _)| b.field() != field) {
            return Err(Error::ParamsMismatch);
        }
        Ok(Self::build(field, items))
    }

    pub(crate) fn build(field: &Field, items: Vec<(Ball, V)>) -> Self {
        Self {
            field: field.clone(),
            pieces: refine(field, items, |v| v.clone()),
        }
    }

    pub fn constant_on(set: &ClopenSet, value: V) -> Self {
        Self::build(
            set.field(),
            set.balls().iter().map(|b| (b.clone(), value.clone())).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn pieces(&self) -> &[(Ball, V)] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn value_at(&self, x: &FieldElement) -> V {
        self.pieces
            .iter()
            .find(|(b, _)| b.contains(x))
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    /// Where the function is nonzero.
    pub fn support(&self) -> ClopenSet {
        ClopenSet::canonicalize(&self.field, self.pieces.iter().map(|(b, _)| b.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let items = self.pieces.iter().chain(&other.pieces).cloned().collect();
        Ok(Self::build(&self.field, items))
    }

    /// Pointwise image under `f`; `f(0)` must be `0`.
    pub fn map<U: StepValue>(&self, f: impl Fn(&V) -> U) -> StepFunction<U> {
        StepFunction::build(
            &self.field,
            self.pieces.iter().map(|(b, v)| (b.clone(), f(v))).collect(),
        )
    }

    /// Pointwise product, via the common refinement of both partitions.
    pub fn multiply(&self, other: &Self) -> Result<Self>
    where
        V: Mul<Output = V>,
    {
        self.check_field(other)?;
        let items = self
            .pieces
            .iter()
            .map(|(b, v)| (b.clone(), Pair(v.clone(), V::default())))
            .chain(
                other
                    .pieces
                    .iter()
                    .map(|(b, v)| (b.clone(), Pair(V::default(), v.clone()))),
            )
            .collect();
        let pieces = refine(&self.field, items, |pair: &Pair<V, V>| {
            pair.0.clone() * pair.1.clone()
        });
        Ok(Self {
            field: self.field.clone(),
            pieces,
        })
    }

    /// `f * 1_set`.
    pub fn restrict(&self, set: &ClopenSet) -> Result<Self> {
        if set.field() != &self.field {
            return Err(Error::ParamsMismatch);
        }
        let items = self
            .pieces
            .iter()
            .map(|(b, v)| (b.clone(), Pair(v.clone(), 0u32)))
            .chain(set.balls().iter().map(|b| (b.clone(), Pair(V::default(), 1))))
            .collect();
        let pieces = refine(&self.field, items, |pair: &Pair<V, u32>| {
            if pair.1 > 0 {
                pair.0.clone()
            } else {
                V::default()
            }
        });
        Ok(Self {
            field: self.field.clone(),
            pieces,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self>
    where
        V: Neg<Output = V>,
    {
        self.add(&other.map(|v| -v.clone()))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ParamsMismatch)
        }
    }
}

impl StepFunction<i64> {
    pub fn integral(&self) -> Rational {
        self.pieces
            .iter()
            .map(|(b, v)| b.measure() * Rational::from_integer((*v).into()))
            .sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        self.map(|v| v * c)
    }
}

impl StepFunction<Rational> {
    pub fn integral(&self) -> Rational {
        self.pieces.iter().map(|(b, v)| b.measure() * v).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|v| v * c)
    }
}

impl StepFunction<Complex64> {
    pub fn integral(&self) -> Complex64 {
        self.pieces
            .iter()
            .map(|(b, v)| v * rational_to_f64(&b.measure()))
            .sum()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|v| v * c)
    }

    /// `integral |f|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.pieces
            .iter()
            .map(|(b, v)| v.norm_sqr() * rational_to_f64(&b.measure()))
            .sum()
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl<V: fmt::Debug> fmt::Debug for StepFunction<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.pieces.iter().map(|(b, v)| (b, v)))
            .finish()
    }
}
