//! Equivalence of super-wavelet families and the decomposability screen.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::bounds::FamilyBounds;
use super::frames::require_nonempty;
use super::{Quantity, Verdict, Witness};
use crate::error::{Error, Result};
use crate::sets::{
    reduce_mod_translations, weighted_inverse_valuation, ClopenSet, ExtendedRational, StepFunction,
};
use crate::Rational;

/// `sum_j sum_t 1_{(p^n W_j ∩ W_j) + u(t)}` on `D`.
pub(crate) fn side(family: &[ClopenSet], n: i32) -> Result<StepFunction<i64>> {
    let field = family[0].field();
    family.iter().try_fold(StepFunction::zero(field), |acc, w| {
        acc.add(&reduce_mod_translations(&w.dilate(n).intersect(w)?)?)
    })
}

/// Compares the two sides of the super-wavelet equivalence identity for
/// every `n` from `0` to the stabilization bound `N* = max(R + S)`, past
/// which `p^n W ∩ W` is empty for every set of either family.
pub fn check_superwavelet_equivalence(left: &[ClopenSet], right: &[ClopenSet]) -> Result<Verdict> {
    require_nonempty(left)?;
    require_nonempty(right)?;
    if left[0].field() != right[0].field() {
        return Err(Error::ParamsMismatch);
    }
    if left.iter().chain(right).any(ClopenSet::has_zero_ball) {
        return Err(Error::Precondition(
            "a set contains a ball around 0, so p^n W ∩ W never becomes empty".into(),
        ));
    }
    let bound = |fam: &[ClopenSet]| FamilyBounds::of(fam).map_or(0, |b| b.span());
    let n_star = bound(left).max(bound(right)).max(0);

    let mut v = Verdict::new("superwavelet-equivalence");
    v.quantity("stabilization_bound", Quantity::Integer(n_star.into()));
    let mut ok = true;
    for n in 0..=n_star {
        let a = side(left, n)?;
        let b = side(right, n)?;
        if n == 0 {
            v.quantity("left_integral_n0", Quantity::Rational(a.integral()));
            v.quantity("right_integral_n0", Quantity::Rational(b.integral()));
        }
        if a != b {
            let diff = a.sub(&b)?;
            let ball = diff.pieces()[0].0.clone();
            let x = ball.sample_point();
            v.witnesses.push(Witness::SideMismatch {
                clause: "equiv".into(),
                n,
                ball,
                left: a.value_at(&x),
                right: b.value_at(&x),
            });
            v.quantity("failing_n", Quantity::Integer(n.into()));
            v.quantity("left_integral", Quantity::Rational(a.integral()));
            v.quantity("right_integral", Quantity::Rational(b.integral()));
            ok = false;
            break;
        }
    }
    v.clause(
        "equiv",
        ok,
        format!("multiplicity sides agree for 0 <= n <= {n_star}"),
    );
    v.note(format!(
        "for n > {n_star} the valuations of p^n W lie beyond those of W, so both sides vanish"
    ));
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionCap {
    Bounded(u64),
    Unbounded,
}

impl std::fmt::Display for DecompositionCap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecompositionCap::Bounded(m) => write!(f, "{m}"),
            DecompositionCap::Unbounded => f.write_str("unbounded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecomposabilityBound {
    /// `integral_K 1_W(xi) / |xi|^2` summed over translates, see
    /// [`decomposability_lower_bound`].
    pub value: ExtendedRational,
    /// The same integral restricted to `D`.
    pub ring_value: ExtendedRational,
    /// Largest `m` that the necessary condition `value >= m (q-1)/q` allows.
    pub m_max: DecompositionCap,
}

/// Necessary condition for `m`-decomposability of the indicator framelet
/// `1_W`: `integral (sum_t 1_{W + u(t)}(xi)) / |xi|^2 >= m (q-1)/q`.
///
/// The multiplicity `f` is `D`-periodic, so the integral over the coset
/// `D + u(t)`, `t != 0`, is `mu(W) |u(t)|^-2`. Summing the `q^k - q^{k-1}`
/// cosets with `|u(t)| = q^k` over `k >= 1` gives `mu(W) / q`, added to
/// the exact integral over `D`.
pub fn decomposability_lower_bound(set: &ClopenSet) -> Result<DecomposabilityBound> {
    let q = i64::from(set.field().q());
    let mult = reduce_mod_translations(set)?;
    let ring_value = weighted_inverse_valuation(&mult, 2);
    let tail = set.measure() / Rational::from_integer(q.into());
    let value = ring_value.clone() + ExtendedRational::Finite(tail);
    let m_max = match &value {
        ExtendedRational::Infinite => DecompositionCap::Unbounded,
        ExtendedRational::Finite(r) => {
            let ratio = r * Rational::new(q.into(), (q - 1).into());
            let floor: BigInt = ratio.numer().div_floor(ratio.denom());
            DecompositionCap::Bounded(
                floor
                    .to_u64()
                    .ok_or_else(|| Error::Overflow("decomposition bound".into()))?,
            )
        }
    };
    Ok(DecomposabilityBound {
        value,
        ring_value,
        m_max,
    })
}
