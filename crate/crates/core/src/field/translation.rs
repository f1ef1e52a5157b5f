//! The translation set `{u(n)}`: coset representatives of `D` in `K`.

use super::{Field, FieldElement, Gf};
use crate::error::{Error, Result};

impl Field {
    /// `u(n) = sum_k p^{-k} u(b_k)` for `n = sum_k b_k q^k`, with
    /// `u(b) = (sum_i a_i eps_i) p^{-1}` when `b = sum_i a_i p^i < q`.
    ///
    /// The base-`q` digit `b_k` lands at index `-(k+1)`.
    pub fn u(&self, mut n: u64) -> FieldElement {
        let q = self.q() as u64;
        let mut x = FieldElement::zero(self);
        let mut index = -1;
        while n > 0 {
            x.add_digit(index, Gf((n % q) as u32));
            n /= q;
            index -= 1;
        }
        x
    }

    /// Inverse of [`Field::u`] on expansions supported on indices `<= -1`.
    pub fn u_inverse(&self, x: &FieldElement) -> Result<u64> {
        if let Some(top) = x.top_index() {
            if top >= 0 {
                return Err(Error::Domain(format!(
                    "u_inverse: {x} has a digit at index {top} >= 0"
                )));
            }
        }
        let q = self.q() as u64;
        let mut n = 0u64;
        for (i, d) in x.terms() {
            let weight = q
                .checked_pow((-i - 1) as u32)
                .and_then(|w| w.checked_mul(d.code() as u64))
                .ok_or_else(|| Error::Overflow(format!("u_inverse of {x}")))?;
            n = n
                .checked_add(weight)
                .ok_or_else(|| Error::Overflow(format!("u_inverse of {x}")))?;
        }
        Ok(n)
    }

    /// `q^k` as a `u64`.
    pub fn q_pow(&self, k: u32) -> Result<u64> {
        (self.q() as u64)
            .checked_pow(k)
            .ok_or_else(|| Error::Overflow(format!("q^{k}")))
    }

    /// `u(0), ..., u(q^k - 1)`: every expansion supported on `[-k, -1]`.
    pub fn translations(&self, k: u32) -> Result<Vec<FieldElement>> {
        Ok((0..self.q_pow(k)?).map(|n| self.u(n)).collect())
    }
}
