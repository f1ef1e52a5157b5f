use super::refine::refine;
use super::{Ball, ClopenSet};
use crate::verify::{Quantity, Verdict, Witness};
use crate::Rational;

/// Rescales a ball avoiding `0` onto the unit sphere: `p^{-v} B` where `v`
/// is the common valuation index of its points.
pub fn normalize_ball(ball: &Ball) -> Option<Ball> {
    ball.valuation().map(|v| ball.dilate(-v))
}

/// Decides whether `{ p^j W_m : j in Z, m }` tiles `K` (up to the point 0).
///
/// Each ball of constant absolute value is rescaled onto the unit sphere;
/// the dilates tile exactly when the rescaled balls, counted over the whole
/// family, partition the sphere. A ball around `0` always overlaps its own
/// dilates and fails immediately.
pub fn dilation_partition_check(family: &[ClopenSet]) -> Verdict {
    tiling_verdict(family, "tiling")
}

pub(crate) fn tiling_verdict(family: &[ClopenSet], tag: &str) -> Verdict {
    let mut verdict = Verdict::new("dilation-partition");
    for (m, set) in family.iter().enumerate() {
        if let Some(ball) = set.balls().iter().find(|b| b.contains_zero()) {
            verdict.witnesses.push(Witness::ZeroBall {
                clause: tag.into(),
                set: m,
                ball: ball.clone(),
            });
            verdict.clause(tag, false, format!("set {} contains a ball around 0", m + 1));
            return verdict;
        }
    }
    let Some(field) = family.first().map(|s| s.field().clone()) else {
        verdict.clause(tag, false, "empty family");
        return verdict;
    };

    let normalized: Vec<((usize, usize), Ball)> = family
        .iter()
        .enumerate()
        .flat_map(|(m, set)| {
            set.balls()
                .iter()
                .enumerate()
                .map(move |(i, b)| ((m, i), normalize_ball(b).expect("zero balls rejected above")))
        })
        .collect();
    let total: Rational = normalized.iter().map(|(_, b)| b.measure()).sum();
    let sphere = ClopenSet::unit_sphere(&field);
    verdict.quantity("normalized_measure", Quantity::Rational(total));
    verdict.quantity("unit_sphere_measure", Quantity::Rational(sphere.measure()));

    let counts = refine(
        &field,
        normalized.iter().map(|(_, b)| (b.clone(), 1i64)).collect(),
        |&n| n,
    );
    let mut ok = true;
    if let Some((piece, _)) = counts.iter().find(|(_, n)| *n >= 2) {
        // A merged piece need not sit inside one input ball, so pick owners
        // through a point and report the smaller of the two.
        let owners: Vec<&((usize, usize), Ball)> = normalized
            .iter()
            .filter(|(_, b)| b.contains(piece.center()))
            .take(2)
            .collect();
        let ball = owners[0].1.clone().max(owners[1].1.clone());
        verdict.witnesses.push(Witness::NormalizedOverlap {
            clause: tag.into(),
            first: owners[0].0,
            second: owners[1].0,
            ball,
        });
        ok = false;
    }
    let covered = ClopenSet::canonicalize(&field, counts.into_iter().map(|(b, _)| b).collect());
    let uncovered = sphere.difference(&covered).expect("same field");
    if let Some(ball) = uncovered.balls().first() {
        verdict.witnesses.push(Witness::Uncovered {
            clause: tag.into(),
            ball: ball.clone(),
        });
        ok = false;
    }
    verdict.clause(tag, ok, "rescaled balls partition the unit sphere {|xi| = 1}");
    verdict
}
