//! Exact integrals over clopen sets.

use num_traits::Zero;

use super::ball::q_pow;
use super::{Ball, ClopenSet, ExtendedRational, StepFunction};
use crate::error::{Error, Result};
use crate::field::{FieldElement, RootOfUnity};
use crate::Rational;

/// `integral_S |xi|^{-power} d xi`.
///
/// A ball of constant absolute value `q^{-v}` and measure `q^{-s}`
/// contributes `q^{-s} q^{power v}`. A ball around `0` contributes
/// `sum_{k >= s} q^{power k} q^{-k} (1 - 1/q)`, which diverges for
/// `power >= 1`.
pub fn integral_inverse_valuation(set: &ClopenSet, power: u32) -> ExtendedRational {
    set.balls().iter().map(|b| ball_inverse_valuation(b, power)).sum()
}

pub(crate) fn ball_inverse_valuation(ball: &Ball, power: u32) -> ExtendedRational {
    match ball.valuation() {
        Some(v) => {
            let q = ball.field().q();
            ExtendedRational::Finite(ball.measure() * q_pow(q, power as i32 * v))
        }
        None if power == 0 => ExtendedRational::Finite(ball.measure()),
        None => ExtendedRational::Infinite,
    }
}

/// `integral f(xi) |xi|^{-power} d xi` for an integer-valued `f >= 0`.
pub fn weighted_inverse_valuation(f: &StepFunction<i64>, power: u32) -> ExtendedRational {
    f.pieces()
        .iter()
        .map(|(b, v)| match ball_inverse_valuation(b, power) {
            ExtendedRational::Finite(r) => ExtendedRational::Finite(r * Rational::from_integer((*v).into())),
            ExtendedRational::Infinite if *v == 0 => ExtendedRational::zero(),
            ExtendedRational::Infinite => ExtendedRational::Infinite,
        })
        .sum()
}

/// `weight * root`: the exact value of a character integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharIntegral {
    pub root: RootOfUnity,
    pub weight: Rational,
}

impl CharIntegral {
    pub fn is_zero(&self) -> bool {
        self.weight.is_zero()
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        self.root.to_complex() * super::step::rational_to_f64(&self.weight)
    }
}

/// `integral_{c + p^s D} chi(y xi) d xi`, which is `chi(y c) q^{-s}` when
/// `|y| <= q^s` and `0` otherwise.
pub fn integral_char_over_ball(y: &FieldElement, ball: &Ball) -> Result<CharIntegral> {
    if y.field() != ball.field() {
        return Err(Error::ParamsMismatch);
    }
    let p = y.field().p();
    let inside = match y.abs_exponent() {
        None => true,
        Some(k) => k <= ball.scale(),
    };
    if inside {
        Ok(CharIntegral {
            root: (y * ball.center()).chi(),
            weight: ball.measure(),
        })
    } else {
        Ok(CharIntegral {
            root: RootOfUnity::one(p),
            weight: Rational::zero(),
        })
    }
}
