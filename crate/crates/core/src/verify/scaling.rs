//! Scaling set and Parseval scaling set checks for `phi^ = 1_S`.

use super::frames::deviation;
use super::{Quantity, Verdict, Witness};
use crate::sets::{reduce_mod_translations, ClopenSet};

/// Records the `0`-neighbourhood clause. For a clopen `S`, the dilates
/// `p^{-j} S` exhaust `K` exactly when some ball `p^k D` lies in `S`.
fn zero_ball_clause(v: &mut Verdict, set: &ClopenSet, tag: &str) {
    match set.balls().iter().find(|b| b.contains_zero()) {
        Some(b) => {
            v.quantity("zero_ball", Quantity::Text(b.to_string()));
            v.clause(
                tag,
                true,
                format!("S contains p^{} D, so the dilates p^-j S exhaust K", b.scale()),
            );
        }
        None => {
            v.witnesses.push(Witness::NoZeroBall { clause: tag.into() });
            v.clause(
                tag,
                false,
                "S has no ball around 0, so 0 is never covered by p^-j S",
            );
        }
    }
}

fn nested_clause(v: &mut Verdict, set: &ClopenSet, tag: &str) {
    let outside = set.difference(&set.dilate(-1)).expect("same field");
    if let Some(ball) = outside.balls().first() {
        v.witnesses.push(Witness::NotNested {
            clause: tag.into(),
            ball: ball.clone(),
        });
    }
    v.clause(tag, outside.is_empty(), "S is contained in p^-1 S");
}

/// Scaling set test. Clause `sc-1` specializes the periodization identity
/// `sum_t |phi^(xi + u(t))|^2 = 1`, `sc-2` the exhaustion `p^-j S -> K`, and
/// `sc-3` the refinement relation `S ⊆ p^-1 S` forced by the low-pass filter.
pub fn check_scaling_set(set: &ClopenSet) -> Verdict {
    let mut v = Verdict::new("scaling-set");
    let mult = reduce_mod_translations(set);
    match mult {
        Ok(mult) => {
            let dev = deviation(&mult, 1).expect("same field");
            if let Some((ball, value)) = &dev {
                v.witnesses.push(Witness::Multiplicity {
                    clause: "sc-1".into(),
                    set: 0,
                    ball: ball.clone(),
                    value: *value,
                    expected: 1,
                    at_most: false,
                });
            }
            v.clause("sc-1", dev.is_none(), "translates of S tile K");
            v.quantity("multiplicity", Quantity::Step(mult));
        }
        Err(e) => v.clause("sc-1", false, e.to_string()),
    }
    zero_ball_clause(&mut v, set, "sc-2");
    nested_clause(&mut v, set, "sc-3");
    v.note("indicator form: sc-1 periodization, sc-2 exhaustion of K, sc-3 refinement");
    v
}

/// Parseval scaling set test: translates of `S` are pairwise disjoint
/// (`psc-a`), the dilates `p^-j S` cover `K` (`psc-b`) and `S ⊆ p^-1 S`
/// (`psc-c`).
pub fn check_parseval_scaling_set(set: &ClopenSet) -> Verdict {
    let mut v = Verdict::new("parseval-scaling-set");
    match reduce_mod_translations(set) {
        Ok(mult) => {
            let over = mult.pieces().iter().find(|(_, n)| *n > 1);
            if let Some((ball, value)) = over {
                v.witnesses.push(Witness::Multiplicity {
                    clause: "psc-a".into(),
                    set: 0,
                    ball: ball.clone(),
                    value: *value,
                    expected: 1,
                    at_most: true,
                });
            }
            v.clause("psc-a", over.is_none(), "translates of S are pairwise disjoint");
            v.quantity("multiplicity", Quantity::Step(mult));
        }
        Err(e) => v.clause("psc-a", false, e.to_string()),
    }
    zero_ball_clause(&mut v, set, "psc-b");
    nested_clause(&mut v, set, "psc-c");
    v.note("nestedness is tested with dilation exponent j = 1");
    v
}
