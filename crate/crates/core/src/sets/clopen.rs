use std::fmt;

use super::refine::{refine, Pair};
use super::Ball;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Gf};
use crate::Rational;

/// A compact open subset of `K`: a finite union of balls held in canonical
/// form (pairwise disjoint, no unmerged complete sibling group, sorted by
/// scale then center). Equal sets therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct ClopenSet {
    field: Field,
    balls: Vec<Ball>,
}

impl ClopenSet {
    pub fn empty(field: &Field) -> Self {
        Self {
            field: field.clone(),
            balls: Vec::new(),
        }
    }

    /// Canonical form of the union of `balls`, which may overlap.
    pub fn from_balls(field: &Field, balls: impl IntoIterator<Item = Ball>) -> Result<Self> {
        let balls: Vec<Ball> = balls.into_iter().collect();
        if balls.iter().any(|b| b.field() != field) {
            return Err(Error::ParamsMismatch);
        }
        Ok(Self::canonicalize(field, balls))
    }

    pub(crate) fn canonicalize(field: &Field, balls: Vec<Ball>) -> Self {
        let items = balls.into_iter().map(|b| (b, 1u32)).collect();
        let balls = refine(field, items, |&n| n > 0)
            .into_iter()
            .map(|(b, _)| b)
            .collect();
        Self {
            field: field.clone(),
            balls,
        }
    }

    pub fn ball(ball: Ball) -> Self {
        let field = ball.field().clone();
        Self {
            field,
            balls: vec![ball],
        }
    }

    /// `D`.
    pub fn ring(field: &Field) -> Self {
        Self::ball(Ball::ring(field))
    }

    /// `p^s D`.
    pub fn ideal(field: &Field, s: i32) -> Self {
        Self::ball(Ball::ideal(field, s))
    }

    /// `{ x : |x| = q^k }`.
    pub fn sphere(field: &Field, k: i32) -> Self {
        let balls = (1..field.q())
            .map(|d| Ball::new(FieldElement::monomial(field, Gf(d), -k), -k + 1))
            .collect();
        Self {
            field: field.clone(),
            balls,
        }
    }

    /// `{ x : |x| = 1 } = D \ p D`.
    pub fn unit_sphere(field: &Field) -> Self {
        Self::sphere(field, 0)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn measure(&self) -> Rational {
        self.balls.iter().map(Ball::measure).sum()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        self.balls.iter().any(|b| b.contains(x))
    }

    pub fn contains_ball(&self, ball: &Ball) -> bool {
        Self::ball(ball.clone())
            .difference(self)
            .map(|d| d.is_empty())
            .unwrap_or(false)
    }

    /// True when some canonical ball is centered at `0`, i.e. the set is a
    /// neighbourhood of the origin.
    pub fn has_zero_ball(&self) -> bool {
        self.balls.iter().any(Ball::contains_zero)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let balls = self.balls.iter().chain(&other.balls).cloned().collect();
        Ok(Self::canonicalize(&self.field, balls))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.combine(other, |v| v.0 > 0 && v.1 > 0)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.combine(other, |v| v.0 > 0 && v.1 == 0)
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    fn combine(&self, other: &Self, keep: impl Fn(&Pair<u32, u32>) -> bool) -> Result<Self> {
        self.check_field(other)?;
        if self.is_empty() || other.is_empty() {
            // Fast paths; refine would give the same answer.
            let probe = Pair(u32::from(!self.is_empty()), u32::from(!other.is_empty()));
            return Ok(if keep(&probe) {
                self.clone()
            } else {
                Self::empty(&self.field)
            });
        }
        let items = self
            .balls
            .iter()
            .map(|b| (b.clone(), Pair(1, 0)))
            .chain(other.balls.iter().map(|b| (b.clone(), Pair(0, 1))))
            .collect();
        let balls = refine(&self.field, items, keep)
            .into_iter()
            .map(|(b, _)| b)
            .collect();
        Ok(Self {
            field: self.field.clone(),
            balls,
        })
    }

    /// `p^j S`. Dilation maps sibling groups to sibling groups and preserves
    /// the canonical order.
    pub fn dilate(&self, j: i32) -> Self {
        Self {
            field: self.field.clone(),
            balls: self.balls.iter().map(|b| b.dilate(j)).collect(),
        }
    }

    pub fn translate(&self, x: &FieldElement) -> Result<Self> {
        if x.field() != &self.field {
            return Err(Error::ParamsMismatch);
        }
        let mut balls: Vec<Ball> = self.balls.iter().map(|b| b.translate(x)).collect();
        balls.sort();
        Ok(Self {
            field: self.field.clone(),
            balls,
        })
    }

    /// Smallest and largest valuation index over the set, when it avoids 0.
    pub fn valuation_range(&self) -> Option<(i32, i32)> {
        let vals: Option<Vec<i32>> = self.balls.iter().map(Ball::valuation).collect();
        let vals = vals?;
        Some((*vals.iter().min()?, *vals.iter().max()?))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ParamsMismatch)
        }
    }
}

impl fmt::Debug for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.balls).finish()
    }
}
