use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

/// `e^{2 pi i exponent / p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    exponent: u32,
    p: u32,
}

impl RootOfUnity {
    pub fn new(exponent: u32, p: u32) -> Self {
        Self {
            exponent: exponent % p,
            p,
        }
    }

    pub fn one(p: u32) -> Self {
        Self { exponent: 0, p }
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn order(self) -> u32 {
        self.p
    }

    pub fn is_one(self) -> bool {
        self.exponent == 0
    }

    pub fn conj(self) -> Self {
        Self::new(self.p - self.exponent, self.p)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.exponent as f64 / self.p as f64)
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        assert_eq!(self.p, rhs.p, "roots of unity of different orders");
        RootOfUnity::new(self.exponent + rhs.exponent, self.p)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^(2pi i {}/{})", self.exponent, self.p)
    }
}
