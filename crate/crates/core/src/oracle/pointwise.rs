//! Pointwise evaluation of the defining sums by direct membership tests.
//!
//! Nothing here uses set algebra beyond `ClopenSet::contains`; the windows
//! over `j` and `t` come from the absolute values of the point and of the
//! balls alone.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::sets::ClopenSet;
use crate::verify::bounds::radius_exponent;

fn nonzero(xi: &FieldElement) -> Result<i32> {
    xi.valuation()
        .ok_or_else(|| Error::Domain("the point must be nonzero".into()))
}

/// Valuation indices reached by the set, or a refusal for sets around `0`.
fn window(set: &ClopenSet) -> Result<Option<(i32, i32)>> {
    if set.has_zero_ball() {
        return Err(Error::Precondition(
            "a set contains a ball around 0; the sum over j is infinite".into(),
        ));
    }
    Ok(set.valuation_range())
}

/// Translation parameters `t` with `|u(t)| <= q^k`, i.e. `t < q^k`.
fn translations_up_to(field: &Field, k: i32) -> Result<u64> {
    field.q_pow(k.max(0) as u32)
}

/// `sum_t 1_{S + u(t)}(x)`.
pub fn translation_count_at(set: &ClopenSet, x: &FieldElement) -> Result<i64> {
    let Some(r) = radius_exponent(set) else {
        return Ok(0);
    };
    let field = set.field();
    let k = r.max(x.abs_exponent().unwrap_or(0));
    let mut count = 0;
    for t in 0..translations_up_to(field, k)? {
        if set.contains(&(x - &field.u(t))) {
            count += 1;
        }
    }
    Ok(count)
}

/// `sum_m sum_{j in Z} 1_{W_m}(p^-j xi)`.
pub fn calderon_sum_at(family: &[ClopenSet], xi: &FieldElement) -> Result<i64> {
    let w = nonzero(xi)?;
    let mut count = 0;
    for set in family {
        let Some((lo, hi)) = window(set)? else { continue };
        // p^-j xi has valuation w - j
        for j in (w - hi)..=(w - lo) {
            if set.contains(&xi.shift(-j)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `sum_m sum_{j >= 0} 1_{W_m}(p^-j xi) 1_{W_m}(p^-j (xi + u(t)))` for `t`
/// not divisible by `q`.
pub fn shift_sum_at(family: &[ClopenSet], xi: &FieldElement, t: u64) -> Result<i64> {
    let w = nonzero(xi)?;
    let Some(first) = family.first() else {
        return Ok(0);
    };
    let field = first.field();
    if t.is_multiple_of(u64::from(field.q())) {
        return Err(Error::Domain(format!("t = {t} is divisible by q")));
    }
    let moved = xi + &field.u(t);
    let mut total = 0;
    for set in family {
        let Some((lo, hi)) = window(set)? else { continue };
        for j in (w - hi).max(0)..=(w - lo) {
            if set.contains(&xi.shift(-j)) && set.contains(&moved.shift(-j)) {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// `sum_m sum_{j >= 1} sum_t 1_{W_m}(p^-j (xi + u(t)))`.
pub fn dimension_at(family: &[ClopenSet], xi: &FieldElement) -> Result<i64> {
    nonzero(xi)?;
    let Some(first) = family.first() else {
        return Ok(0);
    };
    let field = first.field();
    let mut ranges = Vec::with_capacity(family.len());
    for set in family {
        ranges.push(window(set)?);
    }
    let r = ranges.iter().flatten().map(|(lo, _)| -lo).max();
    let Some(r) = r else { return Ok(0) };
    // p^-j y in W_m with j >= 1 forces |y| <= q^(r - 1).
    let k = (r - 1).max(xi.abs_exponent().unwrap_or(0));
    let mut total = 0;
    for t in 0..translations_up_to(field, k)? {
        let y = xi + &field.u(t);
        let Some(v) = y.valuation() else { continue };
        for (set, range) in family.iter().zip(&ranges) {
            let Some((lo, hi)) = range else { continue };
            for j in (v - hi).max(1)..=(v - lo) {
                if set.contains(&y.shift(-j)) {
                    total += 1;
                }
            }
        }
    }
    Ok(total)
}

/// `sum_j sum_t 1_{(p^n W_j ∩ W_j) + u(t)}(x)`, one side of the
/// super-wavelet identity.
pub fn side_at(family: &[ClopenSet], n: i32, x: &FieldElement) -> Result<i64> {
    let mut total = 0;
    for set in family {
        let Some(r) = radius_exponent(set) else { continue };
        let field = set.field();
        let k = r.max(x.abs_exponent().unwrap_or(0));
        for t in 0..translations_up_to(field, k)? {
            let y = x - &field.u(t);
            if set.contains(&y) && set.contains(&y.shift(-n)) {
                total += 1;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_four_at_two() {
        let f = Field::with_default_modulus(2, 1).unwrap();
        let fam = vec![ClopenSet::sphere(&f, 2)];
        let xi = f.u(2);
        assert_eq!(calderon_sum_at(&fam, &f.u(1)).unwrap(), 1);
        assert_ne!(shift_sum_at(&fam, &xi, 1).unwrap(), 0);
        assert_eq!(translation_count_at(&fam[0], &FieldElement::zero(&f)).unwrap(), 2);
        assert!(calderon_sum_at(&fam, &FieldElement::zero(&f)).is_err());
    }
}
