mod common;

use std::collections::BTreeSet;

use common::{arb_field, arb_field_and_elements, field, PARAMS};
use lfw_core::{FieldElement, RootOfUnity};
use proptest::prelude::*;

#[test]
fn u_size_and_zero() {
    for (p, c) in PARAMS {
        let f = field(p, c);
        let q = u64::from(f.q());
        for n in 0..2000u64 {
            let x = f.u(n);
            assert_eq!(x.is_zero(), n == 0);
            if n > 0 {
                let k = x.abs_exponent().unwrap();
                let lo = q.pow(k as u32 - 1);
                assert!(lo <= n && n < lo * q, "n={n} k={k} q={q}");
            }
            assert_eq!(f.u_inverse(&x).unwrap(), n);
        }
    }
}

#[test]
fn translation_set_is_a_symmetric_group() {
    for (p, c) in PARAMS {
        let f = field(p, c);
        for k in 0..=3u32 {
            let all = f.translations(k).unwrap();
            let set: BTreeSet<FieldElement> = all.iter().cloned().collect();
            let neg: BTreeSet<FieldElement> = all.iter().map(|x| -x).collect();
            assert_eq!(set, neg);
            for m in all.iter().take(7) {
                let shifted: BTreeSet<FieldElement> = all.iter().map(|x| m + x).collect();
                assert_eq!(shifted, set);
            }
        }
    }
}

#[test]
fn u_inverse_rejects_integers() {
    let f = field(3, 1);
    assert!(f.u_inverse(&FieldElement::one(&f)).is_err());
}

proptest! {
    #[test]
    fn u_recursion((f, r, k, s) in arb_field().prop_flat_map(|f| {
        let q = u64::from(f.q());
        (Just(f), 0u64..500, 0u32..4).prop_flat_map(move |(f, r, k)| {
            (Just(f), Just(r), Just(k), 0..q.pow(k))
        })
    })) {
        let q = u64::from(f.q());
        let lhs = f.u(r * q.pow(k) + s);
        let rhs = &f.u(r).shift(-(k as i32)) + &f.u(s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn character_is_additive((_f, xs) in arb_field_and_elements(2)) {
        let (x, y) = (&xs[0], &xs[1]);
        prop_assert_eq!((x + y).chi(), x.chi() * y.chi());
        prop_assert!(((x + y).chi() * (-x).chi() * (-y).chi()).is_one());
    }

    #[test]
    fn character_reads_one_digit((f, xs) in arb_field_and_elements(1)) {
        let x = &xs[0];
        let d = x.digit(-1);
        let only = FieldElement::monomial(&f, d, -1);
        prop_assert_eq!(x.chi(), only.chi());
        prop_assert_eq!(x.chi(), RootOfUnity::new(f.gf_trace_digit(d), f.p()));
        prop_assert!(x.part_from(0).chi().is_one());
    }

    #[test]
    fn ultrametric((_f, xs) in arb_field_and_elements(2)) {
        let (x, y) = (&xs[0], &xs[1]);
        let abs = |z: &FieldElement| z.abs_exponent();
        // |x| = 0 iff x = 0
        prop_assert_eq!(abs(x).is_none(), x.is_zero());
        // |xy| = |x||y|
        match (abs(x), abs(y)) {
            (Some(a), Some(b)) => prop_assert_eq!(abs(&(x * y)), Some(a + b)),
            _ => prop_assert!((x * y).is_zero()),
        }
        // |x + y| <= max, with equality when |x| != |y|
        let s = abs(&(x + y));
        let m = abs(x).max(abs(y));
        prop_assert!(s <= m);
        if abs(x) != abs(y) {
            prop_assert_eq!(s, m);
        }
    }

    #[test]
    fn ring_axioms((_f, xs) in arb_field_and_elements(3)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(x + y) + z, x + &(y + z));
        prop_assert_eq!(&(x * y) * z, x * &(y * z));
        prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
        prop_assert_eq!(x * y, y * x);
        prop_assert!((x - x).is_zero());
    }

    #[test]
    fn display_is_stable((_f, xs) in arb_field_and_elements(1)) {
        let x = &xs[0];
        prop_assert_eq!(x.to_string() == "0", x.is_zero());
    }
}
