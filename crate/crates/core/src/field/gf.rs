use std::fmt;
use std::sync::Arc;

use super::params::{digits_of, poly_rem, FieldParams};
use crate::error::{Error, Result};

/// An element of the residue field `GF(q)`, packed as `sum_k d_k p^k` where
/// `d_k` is its coordinate on `eps_k`.
///
/// The packing is the same integer that indexes the coset representative
/// `u(n) = (sum_k d_k eps_k) p^{-1}` for `n < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf(pub(crate) u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Shared arithmetic context for one field `F_q((t))`.
///
/// Cloning is cheap; every [`FieldElement`](super::FieldElement) holds one.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

struct Tables {
    params: FieldParams,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl Field {
    pub fn new(params: FieldParams) -> Self {
        let (p, c, q) = (params.p(), params.c() as usize, params.q());
        let digits: Vec<Vec<u32>> = (0..q).map(|n| digits_of(n, p, c)).collect();
        let pack = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &x| acc * p + x);
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let mut neg = vec![0; qs];
        for a in 0..qs {
            neg[a] = pack(&digits[a].iter().map(|&x| (p - x) % p).collect::<Vec<_>>());
            for b in 0..qs {
                let sum: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qs + b] = pack(&sum);
                let mut prod = vec![0u32; 2 * c - 1];
                for (i, x) in digits[a].iter().enumerate() {
                    for (j, y) in digits[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                mul[a * qs + b] = pack(&poly_rem(&prod, params.modulus(), p));
            }
        }
        Field(Arc::new(Tables {
            params,
            add,
            mul,
            neg,
        }))
    }

    /// Field with the default modulus for `(p, c)`.
    pub fn with_default_modulus(p: u32, c: u32) -> Result<Self> {
        Ok(Self::new(FieldParams::with_default_modulus(p, c)?))
    }

    pub fn params(&self) -> &FieldParams {
        &self.0.params
    }

    pub fn p(&self) -> u32 {
        self.0.params.p()
    }

    pub fn c(&self) -> u32 {
        self.0.params.c()
    }

    pub fn q(&self) -> u32 {
        self.0.params.q()
    }

    /// Residue-field element with the given coordinates on `eps_0..eps_{c-1}`.
    pub fn gf(&self, digits: &[u32]) -> Result<Gf> {
        let p = self.p();
        if digits.len() != self.c() as usize {
            return Err(Error::Domain(format!(
                "expected {} digits, got {}",
                self.c(),
                digits.len()
            )));
        }
        if let Some(d) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::Domain(format!("digit {d} >= p={p}")));
        }
        Ok(Gf(digits.iter().rev().fold(0, |acc, &x| acc * p + x)))
    }

    /// Residue-field element with packed code `code < q`.
    pub fn gf_from_code(&self, code: u32) -> Result<Gf> {
        if code >= self.q() {
            return Err(Error::Domain(format!("code {code} >= q={}", self.q())));
        }
        Ok(Gf(code))
    }

    pub fn gf_digits(&self, a: Gf) -> Vec<u32> {
        digits_of(a.0, self.p(), self.c() as usize)
    }

    pub fn gf_add(&self, a: Gf, b: Gf) -> Gf {
        Gf(self.0.add[self.idx(a, b)])
    }

    pub fn gf_neg(&self, a: Gf) -> Gf {
        Gf(self.0.neg[a.0 as usize])
    }

    pub fn gf_sub(&self, a: Gf, b: Gf) -> Gf {
        self.gf_add(a, self.gf_neg(b))
    }

    pub fn gf_mul(&self, a: Gf, b: Gf) -> Gf {
        Gf(self.0.mul[self.idx(a, b)])
    }

    /// Coordinate of `a` on `eps_0`.
    pub fn gf_trace_digit(&self, a: Gf) -> u32 {
        a.0 % self.p()
    }

    fn idx(&self, a: Gf, b: Gf) -> usize {
        a.0 as usize * self.q() as usize + b.0 as usize
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.params == other.0.params
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.params)
    }
}
