use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fourier::{Side, TestFunction};
use crate::field::{Field, FieldElement, Gf};
use crate::sets::{Ball, StepFunction};

/// Seeded source of random test functions and sample points.
pub struct Sampler {
    field: Field,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(field: &Field, seed: u64) -> Self {
        Self {
            field: field.clone(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn digit(&mut self) -> Gf {
        Gf(self.rng.random_range(0..self.field.q()))
    }

    fn nonzero_digit(&mut self) -> Gf {
        Gf(self.rng.random_range(1..self.field.q()))
    }

    /// `a/b + i c/d` with small integers.
    fn value(&mut self) -> Complex64 {
        let mut part = || {
            let num = self.rng.random_range(-8i32..=8);
            let den = self.rng.random_range(1i32..=8);
            f64::from(num) / f64::from(den)
        };
        Complex64::new(part(), part())
    }

    /// A nonzero element with valuation index in `lo..=hi` and up to
    /// `extra` further random digits.
    pub fn point(&mut self, lo: i32, hi: i32, extra: i32) -> FieldElement {
        let v = self.rng.random_range(lo..=hi);
        let mut terms = vec![(v, self.nonzero_digit())];
        for i in 1..=extra {
            terms.push((v + i, self.digit()));
        }
        FieldElement::from_terms(&self.field, terms)
    }

    /// A ball of constant absolute value `q^-v`, `v` in `-3..=3`, of scale
    /// `v + 1` or `v + 2`.
    fn annulus_ball(&mut self) -> Ball {
        let center = self.point(-3, 3, 1);
        let v = center.valuation().expect("nonzero");
        Ball::new(center, v + self.rng.random_range(1..=2))
    }

    /// 1 to 8 pieces on balls inside `q^-3 <= |xi| <= q^3`.
    pub fn frequency_function(&mut self) -> TestFunction {
        let n = self.rng.random_range(1..=8);
        let items: Vec<(Ball, Complex64)> = (0..n).map(|_| (self.annulus_ball(), self.value())).collect();
        TestFunction::new(Side::Frequency, StepFunction::build(&self.field, items))
    }

    /// 1 to 8 pieces, some of them balls around `0`.
    pub fn time_function(&mut self) -> TestFunction {
        let n = self.rng.random_range(1..=8);
        let mut items = Vec::with_capacity(n);
        for _ in 0..n {
            let ball = if self.rng.random_bool(0.25) {
                Ball::ideal(&self.field, self.rng.random_range(-2..=3))
            } else {
                self.annulus_ball()
            };
            items.push((ball, self.value()));
        }
        TestFunction::new(Side::Time, StepFunction::build(&self.field, items))
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.random_range(0..n)
    }
}
