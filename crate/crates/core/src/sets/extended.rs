use std::fmt;
use std::ops::Add;

use num_traits::Zero;

use crate::Rational;

/// A nonnegative exact rational or `+inf`, for integrals that may diverge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinite,
}

impl ExtendedRational {
    pub fn zero() -> Self {
        Self::Finite(Rational::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::Infinite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Self::Finite(r) => Some(r),
            Self::Infinite => None,
        }
    }
}

impl Add for ExtendedRational {
    type Output = ExtendedRational;
    fn add(self, rhs: ExtendedRational) -> ExtendedRational {
        match (self, rhs) {
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a + b),
            _ => Self::Infinite,
        }
    }
}

impl std::iter::Sum for ExtendedRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        Self::Finite(r)
    }
}

/// `num/den` (or an integer), and `inf`.
impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(r) => write!(f, "{r}"),
            Self::Infinite => write!(f, "inf"),
        }
    }
}
