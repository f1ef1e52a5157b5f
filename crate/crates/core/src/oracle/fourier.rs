use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sets::step::rational_to_f64;
use crate::sets::{Ball, StepFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Time,
    Frequency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A complex step function on the time or the frequency side.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    side: Side,
    values: StepFunction<Complex64>,
}

impl TestFunction {
    pub fn new(side: Side, values: StepFunction<Complex64>) -> Self {
        Self { side, values }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn values(&self) -> &StepFunction<Complex64> {
        &self.values
    }

    /// `||f||^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.values.norm_sqr()
    }

    /// Finest piece scale; every piece refines to a grid of this scale.
    pub fn resolution(&self) -> Option<i32> {
        self.values.pieces().iter().map(|(b, _)| b.scale()).max()
    }

    /// `(a, b)` with the carrier inside `q^-a <= |xi| <= q^b`, or `None`
    /// when the carrier is empty or touches `0`.
    pub fn support_bounds(&self) -> Option<(i32, i32)> {
        let vals: Option<Vec<i32>> = self.values.pieces().iter().map(|(b, _)| b.valuation()).collect();
        let vals = vals?;
        Some((*vals.iter().max()?, -*vals.iter().min()?))
    }
}

/// Exact transform of a step function. The transform of `1_{c + p^s D}`
/// is `xi -> chi(-+ xi c) q^-s 1_{|xi| <= q^s}`; the character factor is
/// constant on balls of scale `-v(c)`, so the image is again a step
/// function.
pub fn fourier_step(f: &TestFunction, direction: Direction) -> TestFunction {
    let field = f.values.field();
    let mut items: Vec<(Ball, Complex64)> = Vec::new();
    for (ball, value) in f.values.pieces() {
        let weight = value * rational_to_f64(&ball.measure());
        let carrier = Ball::ideal(field, -ball.scale());
        match ball.center().valuation() {
            None => items.push((carrier, weight)),
            Some(v) => {
                let c = match direction {
                    Direction::Forward => -ball.center(),
                    Direction::Inverse => ball.center().clone(),
                };
                for piece in carrier.split_to(-v) {
                    let phase = (piece.center() * &c).chi().to_complex();
                    items.push((piece, weight * phase));
                }
            }
        }
    }
    let side = match f.side {
        Side::Time => Side::Frequency,
        Side::Frequency => Side::Time,
    };
    TestFunction {
        side,
        values: StepFunction::build(field, items),
    }
}

/// `<f, g> = integral f conj(g)`.
pub fn inner_product(f: &TestFunction, g: &TestFunction) -> Result<Complex64> {
    if f.side != g.side {
        return Err(Error::Domain(
            "inner product of functions on different sides".into(),
        ));
    }
    let conj = g.values.map(|v| v.conj());
    Ok(f.values.multiply(&conj)?.integral())
}

/// Splits every piece of `f` down to scale `grid` (pieces already finer
/// are kept), without re-merging.
pub(crate) fn pieces_on_grid(f: &TestFunction, grid: Option<i32>) -> Vec<(Ball, Complex64)> {
    let mut out = Vec::new();
    for (b, v) in f.values.pieces() {
        match grid {
            Some(g) if g > b.scale() => out.extend(b.split_to(g).into_iter().map(|p| (p, *v))),
            _ => out.push((b.clone(), *v)),
        }
    }
    out
}
