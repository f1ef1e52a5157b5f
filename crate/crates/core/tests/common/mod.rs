#![allow(dead_code)]

use lfw_core::catalog::shannon_multiwavelet;
use lfw_core::{Ball, ClopenSet, Field, FieldElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PARAMS: [(u32, u32); 4] = [(2, 1), (3, 1), (2, 2), (5, 1)];

pub fn field(p: u32, c: u32) -> Field {
    Field::with_default_modulus(p, c).unwrap()
}

pub fn fields() -> Vec<Field> {
    PARAMS.iter().map(|&(p, c)| field(p, c)).collect()
}

pub fn arb_field() -> impl Strategy<Value = Field> {
    prop::sample::select(PARAMS.to_vec()).prop_map(|(p, c)| field(p, c))
}

pub fn element_from(f: &Field, terms: &[(i32, u32)]) -> FieldElement {
    let mut x = FieldElement::zero(f);
    for &(i, code) in terms {
        let g = f.gf_from_code(code % f.q()).unwrap();
        x = &x + &FieldElement::monomial(f, g, i);
    }
    x
}

pub fn arb_element(f: Field) -> impl Strategy<Value = FieldElement> {
    prop::collection::vec((-5i32..5, 0u32..1024), 0..6).prop_map(move |t| element_from(&f, &t))
}

pub fn arb_field_and_elements(n: usize) -> impl Strategy<Value = (Field, Vec<FieldElement>)> {
    arb_field().prop_flat_map(move |f| {
        let e = arb_element(f.clone());
        (Just(f), prop::collection::vec(e, n))
    })
}

pub fn arb_ball(f: Field) -> impl Strategy<Value = Ball> {
    (arb_element(f), -3i32..4).prop_map(|(c, s)| Ball::new(c, s))
}

pub fn arb_set(f: Field) -> impl Strategy<Value = ClopenSet> {
    let ff = f.clone();
    prop::collection::vec(arb_ball(f), 0..5).prop_map(move |bs| ClopenSet::from_balls(&ff, bs).unwrap())
}

/// A field with `n` random clopen sets over it.
pub fn arb_sets(n: usize) -> impl Strategy<Value = (Field, Vec<ClopenSet>)> {
    arb_field().prop_flat_map(move |f| {
        let s = arb_set(f.clone());
        (Just(f), prop::collection::vec(s, n))
    })
}

/// Seeded random families: 1 to 3 sets of 1 to 3 balls avoiding 0, mixed
/// with Shannon-derived families so that passing inputs occur too.
pub struct FamilyGen {
    rng: ChaCha8Rng,
}

impl FamilyGen {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn ball(&mut self, f: &Field) -> Ball {
        let v = self.rng.random_range(-2..=1);
        let lead = f.gf_from_code(self.rng.random_range(1..f.q())).unwrap();
        let mut c = FieldElement::monomial(f, lead, v);
        let extra = self.rng.random_range(0..=2);
        for i in 1..=extra {
            let d = f.gf_from_code(self.rng.random_range(0..f.q())).unwrap();
            c = &c + &FieldElement::monomial(f, d, v + i);
        }
        Ball::new(c, v + 1 + self.rng.random_range(0..=extra))
    }

    pub fn family(&mut self, f: &Field) -> Vec<ClopenSet> {
        match self.rng.random_range(0..4) {
            0 => {
                // Shannon, with every set pushed through a random sibling split
                // and possibly one piece dilated or shifted.
                let mut fam = shannon_multiwavelet(f);
                if self.rng.random_bool(0.5) {
                    let m = self.rng.random_range(0..fam.len());
                    let kids = fam[m].balls()[0].children();
                    let k = self.rng.random_range(0..kids.len());
                    let mut balls: Vec<Ball> = kids.clone();
                    let moved = if self.rng.random_bool(0.5) {
                        kids[k].dilate(self.rng.random_range(-1..=1))
                    } else {
                        kids[k].translate(&f.u(self.rng.random_range(0..u64::from(f.q()) * 2)))
                    };
                    balls[k] = moved;
                    fam[m] = ClopenSet::from_balls(f, balls).unwrap();
                }
                fam
            }
            1 => {
                let j = self.rng.random_range(-1..=1);
                shannon_multiwavelet(f).iter().map(|s| s.dilate(j)).collect()
            }
            _ => {
                let n = self.rng.random_range(1..=3);
                (0..n)
                    .map(|_| {
                        let k = self.rng.random_range(1..=3);
                        let balls: Vec<Ball> = (0..k).map(|_| self.ball(f)).collect();
                        ClopenSet::from_balls(f, balls).unwrap()
                    })
                    .collect()
            }
        }
    }
}
