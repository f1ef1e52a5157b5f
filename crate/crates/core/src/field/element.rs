use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Gf, RootOfUnity};
use crate::error::{Error, Result};

/// A finite Laurent expansion `sum_n a_n p^n` with `a_n` in `GF(q)`.
///
/// Only nonzero digits are stored, so the valuation is the smallest key.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    terms: BTreeMap<i32, Gf>,
}

impl FieldElement {
    pub fn zero(field: &Field) -> Self {
        Self {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::monomial(field, Gf::ONE, 0)
    }

    /// `digit * p^index`.
    pub fn monomial(field: &Field, digit: Gf, index: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !digit.is_zero() {
            terms.insert(index, digit);
        }
        Self {
            field: field.clone(),
            terms,
        }
    }

    /// `p^index`.
    pub fn uniformizer_pow(field: &Field, index: i32) -> Self {
        Self::monomial(field, Gf::ONE, index)
    }

    /// Builds an element from `(index, digit)` pairs; repeated indices add.
    pub fn from_terms(field: &Field, terms: impl IntoIterator<Item = (i32, Gf)>) -> Self {
        let mut out = Self::zero(field);
        for (i, d) in terms {
            out.add_digit(i, d);
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Index of the lowest nonzero digit; `None` for zero.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Exponent `k` with `|x| = q^k`, or `None` when `x = 0`.
    pub fn abs_exponent(&self) -> Option<i32> {
        self.valuation().map(|v| -v)
    }

    /// Largest stored index.
    pub fn top_index(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn digit(&self, index: i32) -> Gf {
        self.terms.get(&index).copied().unwrap_or(Gf::ZERO)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, Gf)> + '_ {
        self.terms.iter().map(|(&i, &d)| (i, d))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplication by `p^j`.
    pub fn shift(&self, j: i32) -> Self {
        Self {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(&i, &d)| (i + j, d)).collect(),
        }
    }

    /// Digits with index `< s`, i.e. the canonical representative mod `p^s D`.
    pub fn truncate_below(&self, s: i32) -> Self {
        Self {
            field: self.field.clone(),
            terms: self.terms.range(..s).map(|(&i, &d)| (i, d)).collect(),
        }
    }

    /// Digits with index `>= s`.
    pub fn part_from(&self, s: i32) -> Self {
        Self {
            field: self.field.clone(),
            terms: self.terms.range(s..).map(|(&i, &d)| (i, d)).collect(),
        }
    }

    /// True when the digits of `self` and `other` agree at every index `< s`.
    pub fn agrees_below(&self, other: &Self, s: i32) -> bool {
        self.terms.range(..s).eq(other.terms.range(..s))
    }

    pub(crate) fn add_digit(&mut self, index: i32, digit: Gf) {
        if digit.is_zero() {
            return;
        }
        let cur = self.digit(index);
        let sum = self.field.gf_add(cur, digit);
        if sum.is_zero() {
            self.terms.remove(&index);
        } else {
            self.terms.insert(index, sum);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (&i, &d) in &other.terms {
            out.add_digit(i, d);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = Self::zero(&self.field);
        for (&i, &a) in &self.terms {
            for (&j, &b) in &other.terms {
                out.add_digit(i + j, self.field.gf_mul(a, b));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&i, &d)| (i, self.field.gf_neg(d)))
                .collect(),
        }
    }

    /// The canonical character: `e^{2 pi i a/p}` where `a` is the `eps_0`
    /// coordinate of the digit at index `-1`.
    pub fn chi(&self) -> RootOfUnity {
        RootOfUnity::new(self.field.gf_trace_digit(self.digit(-1)), self.field.p())
    }

    /// `chi_y(x) = chi(y x)`.
    pub fn chi_pair(y: &Self, x: &Self) -> Result<RootOfUnity> {
        Ok(y.checked_mul(x)?.chi())
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ParamsMismatch)
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// Lexicographic on `(index, digit)` pairs read from the most negative index.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// The operator impls panic on mismatched fields; use the `checked_*`
// methods when operands may come from different fields.

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch in subtraction")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Center-expression syntax: `0`, or monomials `(d0,...,d_{c-1})@k` joined
/// by ` + ` in descending index order.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&i, &d)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let digits: Vec<String> = self.field.gf_digits(d).iter().map(|x| x.to_string()).collect();
            write!(f, "({})@{}", digits.join(","), i)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::with_default_modulus(2, 1).unwrap()
    }

    fn pk(field: &Field, k: i32) -> FieldElement {
        FieldElement::uniformizer_pow(field, k)
    }

    #[test]
    fn additive_inverse() {
        let f = Field::with_default_modulus(3, 1).unwrap();
        let x = FieldElement::from_terms(&f, [(-2, Gf(2)), (0, Gf(1)), (3, Gf(1))]);
        assert!((&x + &(-&x)).is_zero());
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn valuation_is_multiplicative() {
        let f = f2();
        let y = &pk(&f, -1) * &pk(&f, -1);
        assert_eq!(y, pk(&f, -2));
        assert_eq!(y.abs_exponent(), Some(2));
    }

    #[test]
    fn char_two_cancellation() {
        let f = f2();
        let a = &pk(&f, -1) + &pk(&f, 0);
        let s = &a + &pk(&f, -1);
        assert_eq!(s, FieldElement::one(&f));
        assert!(s.abs_exponent().unwrap() < a.abs_exponent().unwrap());
    }

    #[test]
    fn character_values() {
        let f = f2();
        assert_eq!(FieldElement::zero(&f).chi().exponent(), 0);
        assert_eq!(pk(&f, -1).chi().exponent(), 1);
        let f4 = Field::with_default_modulus(2, 2).unwrap();
        let eps1 = f4.gf(&[0, 1]).unwrap();
        assert_eq!(FieldElement::monomial(&f4, eps1, -1).chi().exponent(), 0);
        // chi_{p^{-1}}(p) = chi(1) = 1
        assert_eq!(
            FieldElement::chi_pair(&pk(&f, -1), &pk(&f, 1))
                .unwrap()
                .exponent(),
            0
        );
        assert_eq!(
            FieldElement::chi_pair(&FieldElement::zero(&f), &pk(&f, -5))
                .unwrap()
                .exponent(),
            0
        );
    }

    #[test]
    fn mismatched_fields() {
        let a = pk(&f2(), 0);
        let b = pk(&Field::with_default_modulus(3, 1).unwrap(), 0);
        assert_eq!(a.checked_add(&b), Err(Error::ParamsMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::ParamsMismatch));
    }

    #[test]
    fn display() {
        let f = f2();
        let x = &pk(&f, -1) + &pk(&f, -2);
        assert_eq!(x.to_string(), "(1)@-1 + (1)@-2");
        let f4 = Field::with_default_modulus(2, 2).unwrap();
        let y = FieldElement::monomial(&f4, f4.gf(&[1, 1]).unwrap(), 3);
        assert_eq!(y.to_string(), "(1,1)@3");
    }
}
