use std::fmt;

use crate::error::{Error, Result};

/// Largest supported residue field size. Multiplication tables are `q * q`.
pub const MAX_Q: u32 = 1024;

/// Moduli shipped for the small fields used throughout the test-suite.
/// Digits are lowest-degree-first and the polynomial is monic.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 1, &[0, 1]),
    (3, 1, &[0, 1]),
    (5, 1, &[0, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
];

/// Characteristic `p`, degree `c` and the irreducible modulus that fixes the
/// basis `eps_k = X^k` of `GF(p^c) = F_p[X]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u32,
    c: u32,
    q: u32,
    modulus: Vec<u32>,
}

impl FieldParams {
    pub fn new(p: u32, c: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("p={p} is not prime")));
        }
        if c == 0 {
            return Err(Error::InvalidParams("c must be positive".into()));
        }
        let q = p
            .checked_pow(c)
            .filter(|&q| q <= MAX_Q)
            .ok_or_else(|| Error::InvalidParams(format!("q={p}^{c} exceeds {MAX_Q}")))?;
        if modulus.len() != c as usize + 1 {
            return Err(Error::InvalidParams(format!(
                "modulus must have c+1={} digits, got {}",
                c + 1,
                modulus.len()
            )));
        }
        if let Some(d) = modulus.iter().find(|&&d| d >= p) {
            return Err(Error::InvalidParams(format!("modulus digit {d} >= p={p}")));
        }
        if modulus[c as usize] != 1 {
            return Err(Error::InvalidParams("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParams(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        Ok(Self { p, c, q, modulus })
    }

    /// Parameters with the shipped modulus for `(p, c)`, or the first monic
    /// irreducible polynomial in lexicographic digit order otherwise.
    pub fn with_default_modulus(p: u32, c: u32) -> Result<Self> {
        if let Some((_, _, m)) = DEFAULT_MODULI.iter().find(|(pp, cc, _)| *pp == p && *cc == c) {
            return Self::new(p, c, m.to_vec());
        }
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("p={p} is not prime")));
        }
        if c == 0 || p.checked_pow(c).is_none_or(|q| q > MAX_Q) {
            return Err(Error::InvalidParams(format!("unsupported degree c={c}")));
        }
        let q = p.pow(c);
        for low in 0..q {
            let mut m = digits_of(low, p, c as usize);
            m.push(1);
            if is_irreducible(&m, p) {
                return Self::new(p, c, m);
            }
        }
        Err(Error::InvalidParams(format!(
            "no irreducible polynomial of degree {c} over F_{p}"
        )))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
}

impl fmt::Display for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly: Vec<String> = self.modulus.iter().map(|d| d.to_string()).collect();
        write!(f, "p={} c={} poly={}", self.p, self.c, poly.join(","))
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Base-`p` digits of `n`, lowest first, padded to `len`.
pub(crate) fn digits_of(mut n: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
/// Both are lowest-degree-first.
pub(crate) fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dm;
        for (i, &mi) in m[..dm].iter().enumerate() {
            let sub = (lead * mi) % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
    }
    r.resize(dm, 0);
    r
}

/// Brute force: no monic factor of degree `1..=deg/2` divides `m`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut f = digits_of(low, p, d);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}
