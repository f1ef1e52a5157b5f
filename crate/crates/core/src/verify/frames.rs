//! Orthonormal, Parseval and multiwavelet set checks.

use num_traits::One;

use super::bounds::FamilyBounds;
use super::{Quantity, Verdict, Witness};
use crate::error::{Error, Result};
use crate::sets::tiling::tiling_verdict;
use crate::sets::{
    integral_inverse_valuation, reduce_mod_translations, ClopenSet, ExtendedRational, StepFunction,
};
use crate::Rational;

pub(crate) fn require_nonempty(family: &[ClopenSet]) -> Result<()> {
    let Some(first) = family.first() else {
        return Err(Error::Domain("empty family".into()));
    };
    if family.iter().any(|s| s.field() != first.field()) {
        return Err(Error::ParamsMismatch);
    }
    Ok(())
}

/// Records a FAIL on `tag` if some set has a ball around `0`.
fn reject_zero_ball(verdict: &mut Verdict, family: &[ClopenSet], tag: &str) -> bool {
    for (m, set) in family.iter().enumerate() {
        if let Some(ball) = set.balls().iter().find(|b| b.contains_zero()) {
            verdict.witnesses.push(Witness::ZeroBall {
                clause: tag.into(),
                set: m,
                ball: ball.clone(),
            });
            verdict.clause(tag, false, format!("set {} contains a ball around 0", m + 1));
            return true;
        }
    }
    false
}

/// First ball where `f` differs from the constant `expected` on `D`,
/// with the value found there.
pub(crate) fn deviation(f: &StepFunction<i64>, expected: i64) -> Result<Option<(crate::sets::Ball, i64)>> {
    let field = f.field();
    let target = StepFunction::constant_on(&ClopenSet::ring(field), expected);
    let diff = f.sub(&target)?;
    Ok(diff.pieces().first().map(|(b, d)| (b.clone(), d + expected)))
}

/// Orthonormality of `{ chi_{u(t)}(p^j .) 1_{W_m}(p^j .) }` through its set
/// form: each `W_m` tiles `K` by translates, the sets are pairwise disjoint,
/// and no set meets a positive dilate of another.
pub fn check_orthonormal_system(family: &[ClopenSet]) -> Result<Verdict> {
    require_nonempty(family)?;
    let mut v = Verdict::new("orthonormal-system");
    if reject_zero_ball(&mut v, family, "zero-ball") {
        return Ok(v);
    }

    let mut ok = true;
    for (m, set) in family.iter().enumerate() {
        if let Some((ball, value)) = deviation(&reduce_mod_translations(set)?, 1)? {
            v.witnesses.push(Witness::Multiplicity {
                clause: "eqivset-i".into(),
                set: m,
                ball,
                value,
                expected: 1,
                at_most: false,
            });
            ok = false;
            break;
        }
    }
    v.clause("eqivset-i", ok, "each W_m tiles K under the translations u(t)");

    let mut ok = true;
    'pairs: for l in 0..family.len() {
        for m in l + 1..family.len() {
            let meet = family[l].intersect(&family[m])?;
            if let Some(ball) = meet.balls().first() {
                v.witnesses.push(Witness::Intersection {
                    clause: "eqivset-ii".into(),
                    l,
                    m,
                    j: 0,
                    ball: ball.clone(),
                });
                ok = false;
                break 'pairs;
            }
        }
    }
    v.clause("eqivset-ii", ok, "the sets W_m are pairwise disjoint");

    let span = FamilyBounds::of(family).map_or(0, |b| b.span());
    let mut ok = true;
    'dil: for j in 1..=span {
        for l in 0..family.len() {
            for m in 0..family.len() {
                let meet = family[l].intersect(&family[m].dilate(j))?;
                if let Some(ball) = meet.balls().first() {
                    v.witnesses.push(Witness::Intersection {
                        clause: "eqivset-iii".into(),
                        l,
                        m,
                        j,
                        ball: ball.clone(),
                    });
                    ok = false;
                    break 'dil;
                }
            }
        }
    }
    v.clause(
        "eqivset-iii",
        ok,
        format!("W_l and p^j W_m are disjoint for 1 <= j <= {span}"),
    );
    v.quantity("dilation_span", Quantity::Integer(span.into()));
    v.note(format!(
        "valuations of W_l and p^j W_m cannot agree once j exceeds R + S = {span}"
    ));
    Ok(v)
}

/// Parseval multiframelet set test: the dilates of the family tile `K`
/// (clause `ps-a`) and every `p^j W_m`, `j >= 0`, is disjoint from its
/// translate by each `u(t)` with `q` not dividing `t` (clause `ps-b`).
pub fn check_parseval_multiframelet_set(family: &[ClopenSet]) -> Result<Verdict> {
    require_nonempty(family)?;
    let mut v = Verdict::new("parseval-multiframelet-set");
    if reject_zero_ball(&mut v, family, "zero-ball") {
        return Ok(v);
    }
    let field = family[0].field().clone();
    let q = u64::from(field.q());

    let mut tiling = tiling_verdict(family, "ps-a");
    tiling.check = v.check.clone();
    v.merge(tiling);

    let mut ok = true;
    let mut radii = Vec::with_capacity(family.len());
    'sets: for (m, set) in family.iter().enumerate() {
        let Some((lo, _)) = set.valuation_range() else {
            radii.push("empty".to_string());
            continue;
        };
        let r = -lo;
        radii.push(r.to_string());
        for j in 0..r {
            let dilated = set.dilate(j);
            let limit = field.q_pow((r - j) as u32)?;
            for t in (1..limit).filter(|t| t % q != 0) {
                let shifted = dilated.translate(&field.u(t))?;
                let meet = dilated.intersect(&shifted)?;
                if let Some(ball) = meet.balls().first() {
                    v.witnesses.push(Witness::TranslateOverlap {
                        clause: "ps-b".into(),
                        m,
                        j,
                        t,
                        ball: ball.clone(),
                    });
                    ok = false;
                    break 'sets;
                }
            }
        }
    }
    v.clause(
        "ps-b",
        ok,
        "p^j W_m misses p^j W_m + u(t) for j >= 0 and t not divisible by q",
    );
    v.quantity("radius_exponents", Quantity::Text(radii.join(",")));
    v.note(
        "ps-b checked for 0 <= j < R_m and t < q^(R_m - j) where W_m lies in |xi| <= q^R_m; \
         outside that window |u(t)| exceeds every |xi| in p^j W_m, so the translate has strictly \
         larger absolute value and cannot meet it",
    );
    Ok(v)
}

/// Multiwavelet set test, decided as a Parseval multiframelet set whose
/// sets all have measure 1. Two further characterizations are evaluated
/// and reported for comparison:
/// route 2, the orthonormality clauses together with the dilation tiling;
/// route 3, the orthonormality clauses together with
/// `integral_W 1/|xi| = (q-1)/q`.
pub fn check_multiwavelet_set(family: &[ClopenSet]) -> Result<Verdict> {
    require_nonempty(family)?;
    let field = family[0].field().clone();
    let q = i64::from(field.q());
    let mut v = Verdict::new("multiwavelet-set");
    let ps = check_parseval_multiframelet_set(family)?;
    let tiling_ok = ps.clause_status("ps-a").is_some_and(|s| s.is_pass());
    v.merge(ps);
    v.check = "multiwavelet-set".into();

    let mut ok = true;
    for (m, set) in family.iter().enumerate() {
        let measure = set.measure();
        if !measure.is_one() {
            v.witnesses.push(Witness::Measure {
                clause: "measure".into(),
                set: m,
                measure,
            });
            ok = false;
            break;
        }
    }
    v.clause("measure", ok, "mu(W_m) = 1 for every m");
    let route1 = v.is_pass();

    let orth = check_orthonormal_system(family)?;
    let union = family
        .iter()
        .try_fold(ClopenSet::empty(&field), |acc, s| acc.union(s))?;
    let integral = integral_inverse_valuation(&union, 1);
    let target = ExtendedRational::Finite(Rational::new((q - 1).into(), q.into()));
    let route2 = orth.is_pass() && tiling_ok;
    let route3 = orth.is_pass() && integral == target;
    let total: Rational = family.iter().map(ClopenSet::measure).sum();

    v.quantity("integral_1_over_xi", Quantity::Extended(integral));
    v.quantity("total_measure", Quantity::Rational(total));
    v.quantity("route_parseval_measure", Quantity::Flag(route1));
    v.quantity("route_orthonormal_tiling", Quantity::Flag(route2));
    v.quantity("route_orthonormal_integral", Quantity::Flag(route3));
    v.quantity(
        "routes_agree",
        Quantity::Flag(route1 == route2 && route2 == route3),
    );
    for c in &orth.clauses {
        v.note(format!("orthonormality clause {}: {}", c.tag, c.status));
    }
    Ok(v)
}
