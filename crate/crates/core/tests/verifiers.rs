mod common;

use common::{field, fields, FamilyGen};
use lfw_core::catalog::{self, shannon_multiwavelet, small_ball};
use lfw_core::oracle::pointwise::{dimension_at, translation_count_at};
use lfw_core::oracle::Sampler;
use lfw_core::sets::{integral_inverse_valuation, reduce_mod_translations};
use lfw_core::verify::{
    check_dim_integral_identity, check_mra, check_multiwavelet_set, check_orthonormal_system,
    check_parseval_multiframelet_set, check_parseval_scaling_set, check_scaling_set,
    check_superwavelet_equivalence, decomposability_lower_bound, dilation_partition_check,
    dimension_function, DecompositionCap, FamilyBounds, Quantity,
};
use lfw_core::{
    Ball, ClopenSet, Error, ExtendedRational, Field, FieldElement, Status, StepFunction, Verdict, Witness,
};
use num_traits::One;

type Rational = num_rational::BigRational;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn coset(f: &Field, t: u64) -> ClopenSet {
    ClopenSet::ball(Ball::new(f.u(t), 0))
}

fn flag(v: &Verdict, name: &str) -> bool {
    match v.get(name) {
        Some(Quantity::Flag(b)) => *b,
        other => panic!("{name}: {other:?}"),
    }
}

fn assert_replays(v: &Verdict, family: &[ClopenSet]) {
    for w in &v.witnesses {
        assert!(w.replay(family).unwrap(), "witness does not replay: {w:?}");
    }
    if !v.is_pass() {
        assert!(!v.witnesses.is_empty(), "FAIL without witness: {v:?}");
    }
}

#[test]
fn orthonormal_examples() {
    let f3 = field(3, 1);
    assert!(check_orthonormal_system(&[coset(&f3, 1), coset(&f3, 2)])
        .unwrap()
        .is_pass());

    let f2 = field(2, 1);
    let fam = [ClopenSet::sphere(&f2, 2)];
    let v = check_orthonormal_system(&fam).unwrap();
    assert_eq!(v.clause_status("eqivset-i"), Some(Status::Fail));
    match v.witness("eqivset-i") {
        Some(Witness::Multiplicity {
            value: 2,
            expected: 1,
            ..
        }) => {}
        other => panic!("{other:?}"),
    }
    assert_replays(&v, &fam);

    let fam = [ClopenSet::ring(&f2)];
    let v = check_orthonormal_system(&fam).unwrap();
    match v.witness("zero-ball") {
        Some(Witness::ZeroBall { ball, .. }) => assert_eq!(*ball, Ball::ring(&f2)),
        other => panic!("{other:?}"),
    }
    assert_replays(&v, &fam);
}

#[test]
fn parseval_examples() {
    let f2 = field(2, 1);
    assert!(check_parseval_multiframelet_set(&[ClopenSet::sphere(&f2, 1)])
        .unwrap()
        .is_pass());
    let f3 = field(3, 1);
    assert!(check_parseval_multiframelet_set(&[coset(&f3, 1), coset(&f3, 2)])
        .unwrap()
        .is_pass());

    let fam = [ClopenSet::sphere(&f2, 2)];
    let v = check_parseval_multiframelet_set(&fam).unwrap();
    assert_eq!(v.clause_status("ps-a"), Some(Status::Pass));
    match v.witness("ps-b") {
        Some(Witness::TranslateOverlap { m: 0, j: 0, t: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
    assert_replays(&v, &fam);
}

#[test]
fn multiwavelet_examples() {
    let f3 = field(3, 1);
    let v = check_multiwavelet_set(&[coset(&f3, 1), coset(&f3, 2)]).unwrap();
    assert!(v.is_pass());
    assert_eq!(
        v.get("integral_1_over_xi"),
        Some(&Quantity::Extended(ExtendedRational::Finite(rat(2, 3))))
    );
    let f2 = field(2, 1);
    assert!(check_multiwavelet_set(&[ClopenSet::sphere(&f2, 1)])
        .unwrap()
        .is_pass());

    let fam = [ClopenSet::sphere(&f3, 1)];
    let v = check_multiwavelet_set(&fam).unwrap();
    match v.witness("measure") {
        Some(Witness::Measure { measure, .. }) => assert_eq!(*measure, rat(2, 1)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        v.witness("ps-b"),
        Some(Witness::TranslateOverlap { j: 0, t: 1, .. })
    ));
    assert!(flag(&v, "routes_agree"));
    assert_replays(&v, &fam);
}

#[test]
fn empty_family_is_a_domain_error() {
    assert!(matches!(check_multiwavelet_set(&[]), Err(Error::Domain(_))));
    let mixed = [ClopenSet::ring(&field(2, 1)), ClopenSet::ring(&field(3, 1))];
    assert_eq!(
        check_orthonormal_system(&mixed).unwrap_err(),
        Error::ParamsMismatch
    );
}

#[test]
fn scaling_examples() {
    for f in fields() {
        let d = ClopenSet::ring(&f);
        assert!(check_scaling_set(&d).is_pass());
        assert!(check_parseval_scaling_set(&d).is_pass());

        let b = ClopenSet::ideal(&f, 1);
        let v = check_scaling_set(&b);
        assert_eq!(v.clause_status("sc-1"), Some(Status::Fail));
        assert_eq!(v.clause_status("sc-2"), Some(Status::Pass));
        assert_eq!(v.clause_status("sc-3"), Some(Status::Pass));
        let expected = StepFunction::constant_on(&b, 1i64);
        assert_eq!(v.get("multiplicity"), Some(&Quantity::Step(expected)));
        assert_replays(&v, std::slice::from_ref(&b));
        assert!(check_parseval_scaling_set(&b).is_pass());
    }

    let f2 = field(2, 1);
    let s = coset(&f2, 1);
    let v = check_scaling_set(&s);
    assert_eq!(v.clause_status("sc-2"), Some(Status::Fail));
    assert_replays(&v, &[s]);

    let s = coset(&f2, 1).union(&ClopenSet::ideal(&f2, 1)).unwrap();
    let v = check_parseval_scaling_set(&s);
    assert_eq!(v.clause_status("psc-c"), Some(Status::Fail));
    let Some(Witness::NotNested { ball, .. }) = v.witness("psc-c") else {
        panic!("{v:?}")
    };
    let outside = s.difference(&s.dilate(-1)).unwrap();
    assert!(outside.contains_ball(ball));
    assert_replays(&v, &[s]);
}

#[test]
fn dimension_examples() {
    for f in fields() {
        let fam = shannon_multiwavelet(&f);
        let dim = dimension_function(&fam).unwrap();
        assert_eq!(dim, StepFunction::constant_on(&ClopenSet::ring(&f), 1));
        assert!(check_dim_integral_identity(&fam).unwrap().is_pass());
        assert_eq!(dim.integral(), Rational::one());
        let v = check_mra(&fam, false).unwrap();
        assert!(v.is_pass());
    }
    let f2 = field(2, 1);
    assert!(check_mra(&[ClopenSet::sphere(&f2, 1)], false).unwrap().is_pass());
    assert!(matches!(
        check_mra(&[ClopenSet::sphere(&f2, 2)], false),
        Err(Error::Precondition(_))
    ));
    let f3 = field(3, 1);
    assert!(matches!(
        check_mra(&[coset(&f3, 1)], false),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        dimension_function(&[coset(&f3, 1)]),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        dimension_function(&[ClopenSet::ring(&f3)]),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn superwavelet_examples() {
    let f2 = field(2, 1);
    let a = vec![coset(&f2, 1)];
    let parent = Ball::new(f2.u(1), 0);
    let b: Vec<ClopenSet> = parent.children().into_iter().map(ClopenSet::ball).collect();
    assert!(check_superwavelet_equivalence(&a, &a).unwrap().is_pass());
    let v = check_superwavelet_equivalence(&a, &b).unwrap();
    assert!(v.is_pass());
    assert!(v.get("stabilization_bound").is_some());

    let m = vec![ClopenSet::sphere(&f2, 2)];
    let v = check_superwavelet_equivalence(&a, &m).unwrap();
    assert!(!v.is_pass());
    assert_eq!(v.get("failing_n"), Some(&Quantity::Integer(0)));
    assert_eq!(v.get("left_integral"), Some(&Quantity::Rational(rat(1, 1))));
    assert_eq!(v.get("right_integral"), Some(&Quantity::Rational(rat(2, 1))));
    for w in &v.witnesses {
        assert!(w.replay_equivalence(&a, &m).unwrap());
    }
    assert!(check_superwavelet_equivalence(&a, &[ClopenSet::ring(&f2)]).is_err());
}

#[test]
fn decomposability_examples() {
    let f2 = field(2, 1);
    let d = decomposability_lower_bound(&small_ball(&f2)).unwrap();
    assert_eq!(d.value, ExtendedRational::Finite(rat(9, 8)));
    assert_eq!(d.m_max, DecompositionCap::Bounded(2));
    let s = decomposability_lower_bound(&ClopenSet::sphere(&f2, 1)).unwrap();
    assert_eq!(s.value, ExtendedRational::Infinite);
    assert_eq!(s.m_max, DecompositionCap::Unbounded);
    let e = decomposability_lower_bound(&ClopenSet::empty(&f2)).unwrap();
    assert_eq!(e.value, ExtendedRational::Finite(rat(0, 1)));
    assert_eq!(e.m_max, DecompositionCap::Bounded(0));
}

#[test]
fn catalog_routes_agree() {
    for f in fields() {
        for name in catalog::NAMES {
            let e = catalog::entry(name, &f).unwrap();
            let v = check_multiwavelet_set(&e.family).unwrap();
            assert!(flag(&v, "routes_agree"), "{name}: {v:?}");
            assert_replays(&v, &e.family);
        }
    }
}

/// The three characterizations of a multiwavelet set coincide, and every
/// failure witness replays, on seeded random families.
#[test]
fn random_families_routes_and_replay() {
    let mut gen = FamilyGen::new(2024);
    let mut pass = 0;
    let fs = fields();
    for i in 0..200 {
        let f = &fs[i % fs.len()];
        let fam = gen.family(f);
        let v = check_multiwavelet_set(&fam).unwrap();
        assert!(flag(&v, "routes_agree"), "{fam:?}: {v:?}");
        pass += usize::from(v.is_pass());
        assert_replays(&v, &fam);
        assert_replays(&check_orthonormal_system(&fam).unwrap(), &fam);
        assert_replays(&check_parseval_multiframelet_set(&fam).unwrap(), &fam);
        assert_replays(&dilation_partition_check(&fam), &fam);
        if let Ok(v) = check_dim_integral_identity(&fam) {
            assert!(v.is_pass(), "{fam:?}");
        }
        if let Ok(v) = check_mra(&fam, true) {
            assert_replays(&v, &fam);
        }
        for set in &fam {
            assert_replays(&check_scaling_set(set), std::slice::from_ref(set));
            assert_replays(&check_parseval_scaling_set(set), std::slice::from_ref(set));
        }
    }
    assert!(pass >= 20, "only {pass} passing families");
}

/// Dilation tiling and the integral identity `integral 1/|xi| = (q-1)/q`
/// agree, with strict inequality when a region is left uncovered.
#[test]
fn tiling_and_integral_identity() {
    let mut gen = FamilyGen::new(99);
    for f in fields() {
        let target = ExtendedRational::Finite(rat(i64::from(f.q()) - 1, i64::from(f.q())));
        for _ in 0..100 {
            let fam = gen.family(&f);
            let v = dilation_partition_check(&fam);
            let union = fam.iter().fold(ClopenSet::empty(&f), |a, s| a.union(s).unwrap());
            let integral = integral_inverse_valuation(&union, 1);
            if v.is_pass() {
                assert_eq!(integral, target);
            } else if v.witnesses.iter().all(|w| matches!(w, Witness::Uncovered { .. })) {
                assert!(integral < target, "{fam:?}");
            }
        }
    }
}

fn probe_points(f: &Field, dim: &StepFunction<i64>) -> Vec<FieldElement> {
    let mut pts: Vec<FieldElement> = Ball::ring(f).split_to(2).iter().map(Ball::sample_point).collect();
    for (b, _) in dim.pieces() {
        pts.extend(b.children().iter().map(Ball::sample_point));
    }
    let mut s = Sampler::new(f, 5);
    pts.extend((0..20).map(|_| s.point(0, 4, 3)));
    pts
}

#[test]
fn dimension_function_matches_pointwise_sum() {
    let mut gen = FamilyGen::new(7);
    let mut checked = 0;
    for f in fields() {
        for _ in 0..60 {
            let fam = gen.family(&f);
            let Ok(dim) = dimension_function(&fam) else {
                continue;
            };
            checked += 1;
            let q2 = u64::from(f.q()).pow(2);
            for x in probe_points(&f, &dim) {
                let d = dimension_at(&fam, &x).unwrap();
                assert_eq!(dim.value_at(&x), d, "{fam:?} at {x}");
                for n in 0..q2 {
                    let y = &x + &f.u(n);
                    assert_eq!(dimension_at(&fam, &y).unwrap(), d, "periodicity at u({n})");
                }
            }
        }
    }
    assert!(checked > 30);
}

#[test]
fn mra_invariants() {
    let mut gen = FamilyGen::new(31);
    for f in fields() {
        for _ in 0..60 {
            let fam = gen.family(&f);
            let Ok(v) = check_mra(&fam, true) else { continue };
            // Forced runs are flagged, correct-order runs are not.
            assert_eq!(v.get("extrapolated").is_some(), fam.len() != f.q() as usize - 1);
            let total: Rational = fam.iter().map(ClopenSet::measure).sum();
            let expected = total / rat(i64::from(f.q()) - 1, 1);
            assert_eq!(
                v.get("dimension_integral"),
                Some(&Quantity::Rational(expected.clone()))
            );
            // A multiwavelet set of order q - 1 has dimension integral 1; a
            // constant function on D with that integral must be 1 everywhere.
            if fam.len() == f.q() as usize - 1 {
                assert!(expected.is_one());
            }
        }
    }
}

/// Dropping one ball from a passing split Shannon family always leaves an
/// uncovered region, never an overlap.
#[test]
fn dropping_a_ball_uncovers() {
    for f in fields() {
        let split: Vec<ClopenSet> = shannon_multiwavelet(&f)
            .iter()
            .map(|s| ClopenSet::from_balls(&f, s.balls()[0].children()).unwrap())
            .collect();
        let entry = catalog::CatalogEntry {
            name: "split".into(),
            field: f.clone(),
            family: shannon_multiwavelet(&f),
            expected: Default::default(),
            note: String::new(),
        };
        let n: usize = entry.family.iter().map(|s| s.balls().len()).sum();
        for i in 0..n {
            let m = catalog::mutate(&entry, catalog::Mutation::DropBall(i)).unwrap();
            let v = dilation_partition_check(&m.family);
            assert!(matches!(v.witness("tiling"), Some(Witness::Uncovered { .. })));
            assert!(!v
                .witnesses
                .iter()
                .any(|w| matches!(w, Witness::NormalizedOverlap { .. })));
            assert_replays(&v, &m.family);
            assert!(!check_multiwavelet_set(&m.family).unwrap().is_pass());
        }
        // Canonical form re-merges the split cosets.
        assert_eq!(split, shannon_multiwavelet(&f));
    }
}

#[test]
fn bounds_and_translation_counts() {
    let f = field(3, 1);
    let fam = [coset(&f, 1), ClopenSet::sphere(&f, -1)];
    let b = FamilyBounds::of(&fam).unwrap();
    assert_eq!((b.r, b.s, b.span()), (1, 1, 2));
    assert!(FamilyBounds::of(&[ClopenSet::ring(&f)]).is_none());
    for set in &fam {
        let m = reduce_mod_translations(set).unwrap();
        for x in Ball::ring(&f).split_to(2).iter().map(Ball::sample_point) {
            assert_eq!(m.value_at(&x), translation_count_at(set, &x).unwrap());
        }
    }
}
