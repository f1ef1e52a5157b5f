use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::field::{Field, FieldElement, Gf};
use crate::Rational;

/// `q^e` as an exact rational; `e` may be negative.
pub fn q_pow(q: u32, e: i32) -> Rational {
    let base = BigInt::from(q).pow(e.unsigned_abs());
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// The ball `center + p^scale D`, with the center reduced so that it has no
/// digit at index `>= scale`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    center: FieldElement,
    scale: i32,
}

impl Ball {
    pub fn new(center: FieldElement, scale: i32) -> Self {
        Self {
            center: center.truncate_below(scale),
            scale,
        }
    }

    /// `p^s D`.
    pub fn ideal(field: &Field, s: i32) -> Self {
        Self {
            center: FieldElement::zero(field),
            scale: s,
        }
    }

    /// The ring of integers `D`.
    pub fn ring(field: &Field) -> Self {
        Self::ideal(field, 0)
    }

    pub fn center(&self) -> &FieldElement {
        &self.center
    }

    pub fn scale(&self) -> i32 {
        self.scale
    }

    pub fn field(&self) -> &Field {
        self.center.field()
    }

    /// `q^{-scale}`.
    pub fn measure(&self) -> Rational {
        q_pow(self.field().q(), -self.scale)
    }

    /// Valuation index shared by every point of the ball, or `None` when
    /// the ball contains `0`.
    pub fn valuation(&self) -> Option<i32> {
        self.center.valuation()
    }

    pub fn contains_zero(&self) -> bool {
        self.center.is_zero()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        x.agrees_below(&self.center, self.scale)
    }

    pub fn contains_ball(&self, other: &Ball) -> bool {
        self.scale <= other.scale && other.center.agrees_below(&self.center, self.scale)
    }

    /// Two balls meet iff one contains the other.
    pub fn intersects(&self, other: &Ball) -> bool {
        self.contains_ball(other) || other.contains_ball(self)
    }

    /// `p^j * ball`.
    pub fn dilate(&self, j: i32) -> Ball {
        Ball {
            center: self.center.shift(j),
            scale: self.scale + j,
        }
    }

    pub fn translate(&self, x: &FieldElement) -> Ball {
        Ball::new(&self.center + x, self.scale)
    }

    /// The `q` sub-balls one scale finer.
    pub fn children(&self) -> Vec<Ball> {
        let field = self.field().clone();
        (0..field.q())
            .map(|d| {
                let mut c = self.center.clone();
                c.add_digit(self.scale, Gf(d));
                Ball {
                    center: c,
                    scale: self.scale + 1,
                }
            })
            .collect()
    }

    /// Partition into sub-balls of scale `s >= self.scale`.
    pub fn split_to(&self, s: i32) -> Vec<Ball> {
        let mut out = vec![self.clone()];
        for _ in self.scale..s {
            out = out.iter().flat_map(|b| b.children()).collect();
        }
        out
    }

    /// A nonzero point of the ball.
    pub fn sample_point(&self) -> FieldElement {
        if self.center.is_zero() {
            FieldElement::uniformizer_pow(self.field(), self.scale)
        } else {
            self.center.clone()
        }
    }
}

impl Ord for Ball {
    fn cmp(&self, other: &Self) -> Ordering {
        self.scale
            .cmp(&other.scale)
            .then_with(|| self.center.cmp(&other.center))
    }
}

impl PartialOrd for Ball {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `ball scale=<s> center=<expr>`, the set-file line syntax.
impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ball scale={} center={}", self.scale, self.center)
    }
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ball({} + p^{} D)", self.center, self.scale)
    }
}
