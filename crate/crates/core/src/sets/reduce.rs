use super::{Ball, ClopenSet, StepFunction};
use crate::error::{Error, Result};

/// The multiplicity function `sum_t 1_{S + u(t)}` restricted to `D`.
///
/// A ball of scale `s >= 0` writes its center as `u(t) + r` with `r` in `D`
/// and lands on `r + p^s D` once. A ball of scale `s < 0` is a union of
/// `q^{-s}` cosets of `D`, each reducing onto all of `D`.
/// The integral of the result equals the measure of `S`.
pub fn reduce_mod_translations(set: &ClopenSet) -> Result<StepFunction<i64>> {
    let field = set.field();
    let q = field.q() as i64;
    let mut items = Vec::with_capacity(set.balls().len());
    for b in set.balls() {
        if b.scale() >= 0 {
            items.push((Ball::new(b.center().part_from(0), b.scale()), 1i64));
        } else {
            let count = q
                .checked_pow(b.scale().unsigned_abs())
                .ok_or_else(|| Error::Overflow(format!("multiplicity of {b}")))?;
            items.push((Ball::ring(field), count));
        }
    }
    Ok(StepFunction::build(field, items))
}
