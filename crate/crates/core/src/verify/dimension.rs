//! The dimension function of an indicator family and the MRA test.

use super::bounds::FamilyBounds;
use super::frames::{check_multiwavelet_set, require_nonempty};
use super::{Quantity, Verdict, Witness};
use crate::error::{Error, Result};
use crate::sets::tiling::tiling_verdict;
use crate::sets::{Ball, ClopenSet, StepFunction};
use crate::Rational;

/// `D(xi) = sum_m sum_{j >= 1} sum_t 1_{W_m}(p^-j (xi + u(t)))` on `D`.
///
/// Requires the dilates of the family to tile `K`. Then the `t = 0` part
/// equals `1 - sum_{j <= 0} sum_m 1_{p^j W_m}`, and on `D` only
/// `-S <= j <= 0` contribute. A term with `t != 0` needs
/// `q <= |u(t)| <= q^{R - j}`, leaving `1 <= j <= R - 1` and
/// `t < q^{R - j}`.
pub fn dimension_function(family: &[ClopenSet]) -> Result<StepFunction<i64>> {
    require_nonempty(family)?;
    let field = family[0].field().clone();
    if family.iter().any(ClopenSet::has_zero_ball) {
        return Err(Error::Precondition(
            "a set contains a ball around 0; the dilation sum diverges there".into(),
        ));
    }
    let tiling = tiling_verdict(family, "tiling");
    if !tiling.is_pass() {
        return Err(Error::Precondition(
            "the dilates of the family do not tile K; the sum over j has no exact finite form".into(),
        ));
    }
    let Some(bounds) = FamilyBounds::of(family) else {
        return Ok(StepFunction::zero(&field));
    };
    let ring = ClopenSet::ring(&field);
    let mut items: Vec<(Ball, i64)> = vec![(Ball::ring(&field), 1)];
    for j in -bounds.s..=0 {
        for set in family {
            for b in set.dilate(j).intersect(&ring)?.balls() {
                items.push((b.clone(), -1));
            }
        }
    }
    for j in 1..bounds.r {
        let limit = field.q_pow((bounds.r - j) as u32)?;
        for set in family {
            let dilated = set.dilate(j);
            for t in 1..limit {
                let shifted = dilated.translate(&-&field.u(t))?;
                for b in shifted.intersect(&ring)?.balls() {
                    items.push((b.clone(), 1));
                }
            }
        }
    }
    StepFunction::from_weighted(&field, items)
}

/// MRA test: the family induces a multiresolution analysis exactly when
/// its dimension function is `1` on `D`.
///
/// The characterization is stated for families of `q - 1` sets; other
/// orders are refused unless `force_order` is set, in which case the
/// verdict is marked as extrapolated.
pub fn check_mra(family: &[ClopenSet], force_order: bool) -> Result<Verdict> {
    require_nonempty(family)?;
    let q = family[0].field().q() as usize;
    let extrapolated = family.len() != q - 1;
    if extrapolated && !force_order {
        return Err(Error::Domain(format!(
            "the MRA characterization covers families of q - 1 = {} sets, got {}",
            q - 1,
            family.len()
        )));
    }
    let mw = check_multiwavelet_set(family)?;
    if !mw.is_pass() {
        let failed: Vec<&str> = mw
            .clauses
            .iter()
            .filter(|c| !c.status.is_pass())
            .map(|c| c.tag.as_str())
            .collect();
        return Err(Error::Precondition(format!(
            "not a multiwavelet set (failed: {})",
            failed.join(", ")
        )));
    }
    let dim = dimension_function(family)?;
    let mut v = Verdict::new("mra");
    let ring = Ball::ring(dim.field());
    let covered = ClopenSet::canonicalize(dim.field(), dim.pieces().iter().map(|(b, _)| b.clone()).collect());
    let gap = ClopenSet::ball(ring).difference(&covered)?;
    if let Some(ball) = gap.balls().first() {
        v.witnesses.push(Witness::DimensionValue {
            clause: "mra-cover".into(),
            ball: ball.clone(),
            value: 0,
            expected: 1,
        });
    }
    if let Some((ball, value)) = dim.pieces().iter().find(|(_, n)| *n >= 2) {
        v.witnesses.push(Witness::DimensionValue {
            clause: "mra-cover".into(),
            ball: ball.clone(),
            value: *value,
            expected: 1,
        });
    }
    let ok = v.witnesses.is_empty() && dim.pieces().iter().all(|(_, n)| *n == 1);
    v.clause("mra-cover", ok, "the dimension function equals 1 on D");
    v.quantity("dimension_integral", Quantity::Rational(dim.integral()));
    v.quantity("dimension_function", Quantity::Step(dim));
    if extrapolated {
        v.quantity("extrapolated", Quantity::Flag(true));
        v.note("extrapolated beyond the characterization, which is stated for q - 1 sets");
    }
    Ok(v)
}

/// `integral_D D = sum_m mu(W_m) / (q - 1)`, from
/// `sum_{j >= 1} q^-j = 1/(q - 1)`.
pub fn check_dim_integral_identity(family: &[ClopenSet]) -> Result<Verdict> {
    let dim = dimension_function(family)?;
    let q = i64::from(family[0].field().q());
    let left = dim.integral();
    let total: Rational = family.iter().map(ClopenSet::measure).sum();
    let right = total / Rational::from_integer((q - 1).into());
    let mut v = Verdict::new("dimension-integral");
    if left != right {
        v.witnesses.push(Witness::Mismatch {
            clause: "dim-integral".into(),
            left: left.clone(),
            right: right.clone(),
        });
    }
    v.clause(
        "dim-integral",
        left == right,
        "integral of D over D equals sum_m mu(W_m) / (q - 1)",
    );
    v.quantity("dimension_integral", Quantity::Rational(left));
    v.quantity("measure_sum_over_q_minus_1", Quantity::Rational(right));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn shannon(f: &Field) -> Vec<ClopenSet> {
        (1..u64::from(f.q()))
            .map(|m| ClopenSet::ring(f).translate(&f.u(m)).unwrap())
            .collect()
    }

    #[test]
    fn shannon_dimension_is_one() {
        for (p, c) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = Field::with_default_modulus(p, c).unwrap();
            let fam = shannon(&f);
            let one = StepFunction::constant_on(&ClopenSet::ring(&f), 1i64);
            assert_eq!(dimension_function(&fam).unwrap(), one);
            assert!(check_mra(&fam, false).unwrap().is_pass());
            assert!(check_dim_integral_identity(&fam).unwrap().is_pass());
        }
    }

    #[test]
    fn refusals() {
        let f = Field::with_default_modulus(2, 1).unwrap();
        let sphere4 = vec![ClopenSet::sphere(&f, 2)];
        assert!(matches!(check_mra(&sphere4, false), Err(Error::Precondition(_))));
        let f3 = Field::with_default_modulus(3, 1).unwrap();
        let half = vec![shannon(&f3).remove(0)];
        assert!(matches!(check_mra(&half, false), Err(Error::Domain(_))));
        assert!(matches!(dimension_function(&half), Err(Error::Precondition(_))));
    }
}
