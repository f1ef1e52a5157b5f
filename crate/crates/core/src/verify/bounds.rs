use crate::sets::ClopenSet;

/// Truncation bounds for a family avoiding `0`: every point `xi` of every
/// set satisfies `q^{-s} <= |xi| <= q^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyBounds {
    pub r: i32,
    pub s: i32,
}

impl FamilyBounds {
    /// `None` when some ball contains `0` or every set is empty.
    pub fn of(family: &[ClopenSet]) -> Option<Self> {
        let mut range: Option<(i32, i32)> = None;
        for set in family {
            if set.has_zero_ball() {
                return None;
            }
            if let Some((lo, hi)) = set.valuation_range() {
                range = Some(match range {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                });
            }
        }
        range.map(|(lo, hi)| Self { r: -lo, s: hi })
    }

    /// Largest dilation gap `j` at which two sets of the family can meet.
    pub fn span(&self) -> i32 {
        self.r + self.s
    }
}

/// Smallest `k` with `set` inside `{|xi| <= q^k}`, zero balls included.
pub(crate) fn radius_exponent(set: &ClopenSet) -> Option<i32> {
    set.balls()
        .iter()
        .map(|b| b.valuation().map_or(-b.scale(), |v| -v))
        .max()
}
