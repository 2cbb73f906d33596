mod common;

use common::{config, field, poly, rf};
use cubicff::forms::CanonicalForm;
use cubicff::ramgenus::{ram_char3, ram_pure};
use cubicff::ratfunc::{Place, RatFn};
use cubicff::verify::{
    as3_genus_oracle, compare_forms, generator_fuzz, kummer_genus_oracle, kummer_split_pattern,
    kummer_split_spotcheck, random_form, random_galois_char3, random_place, FormKind,
};
use cubicff::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn kummer_oracle_examples() {
    let f7 = field(7);
    let x = RatFn::x(&f7);
    let quartic = (1..4).fold(x.clone(), |acc, k| acc.mul(&rf(&f7, &[k, 1], &[1])));
    assert_eq!(kummer_genus_oracle(&quartic), Ok(3));
    assert_eq!(kummer_genus_oracle(&x), Ok(0));
    assert_eq!(kummer_genus_oracle(&rf(&f7, &[0, 0, 1, 1], &[1])), Ok(0));
    assert_eq!(
        kummer_genus_oracle(&RatFn::x(&field(5))),
        Err(Error::WrongConstantField)
    );
}

#[test]
fn artin_schreier_oracle_examples() {
    let f3 = field(3);
    let x = RatFn::x(&f3);
    assert_eq!(as3_genus_oracle(&x.pow(2).neg()), Ok(0));
    assert_eq!(as3_genus_oracle(&x.pow(6).neg()), Ok(0));
    // Simple poles at x and infinity: 2g − 2 = −6 + 2·2 + 2·2.
    let b = rf(&f3, &[1, 0, 1], &[0, 1]);
    assert_eq!(as3_genus_oracle(&b.mul(&b).neg()), Ok(2));
    assert_eq!(ram_char3(&b.mul(&b).neg()).unwrap().genus, Some(2));
    // Σ(m+1)deg = 5 from a pole of order 4 at infinity: 2g − 2 = −6 + 10.
    assert_eq!(as3_genus_oracle(&x.pow(8).neg()), Ok(3));
    assert_eq!(ram_char3(&x.pow(8).neg()).unwrap().genus, Some(3));
    assert_eq!(as3_genus_oracle(&x.inv()), Err(Error::NotGalois));
}

#[test]
fn generator_change_examples() {
    let f7 = field(7);
    let x = RatFn::x(&f7);
    let shifted = rf(&f7, &[1, 1], &[1]).pow(3).mul(&x);
    assert_eq!(
        compare_forms(
            &CanonicalForm::Pure(x.clone()),
            &CanonicalForm::Pure(shifted)
        ),
        None
    );
    let f3 = field(3);
    let x3 = RatFn::x(&f3);
    assert_eq!(
        compare_forms(
            &CanonicalForm::CharThree(x3.pow(-3)),
            &CanonicalForm::CharThree(x3.inv())
        ),
        None
    );
    // Negative control: different fields.
    let other = CanonicalForm::Pure(x.add(&RatFn::one(&f7)));
    assert!(compare_forms(&CanonicalForm::Pure(x.clone()), &other).is_some());
    assert!(generator_fuzz(&CanonicalForm::Pure(x), 7, 40).is_empty());
}

#[test]
fn split_examples() {
    let f7 = field(7);
    let form = CanonicalForm::Pure(RatFn::x(&f7));
    let at = |c: i64| Place::Finite(poly(&f7, &[-c, 1]));
    assert_eq!(kummer_split_pattern(&form, &at(1)), Ok(vec![1, 1, 1]));
    assert_eq!(kummer_split_pattern(&form, &at(3)), Ok(vec![3]));
    assert_eq!(
        kummer_split_pattern(&form, &at(0)),
        Err(Error::InapplicablePlace)
    );
    assert_eq!(kummer_split_spotcheck(&form, &at(3)), Ok(true));
    assert_eq!(
        kummer_split_pattern(&form, &Place::Infinity),
        Err(Error::InapplicablePlace)
    );
    // Over F_5 every element is a cube, so degree-1 places split as {1,2}.
    let f5 = field(5);
    let form = CanonicalForm::Pure(RatFn::x(&f5));
    assert_eq!(
        kummer_split_pattern(&form, &Place::Finite(poly(&f5, &[-2, 1]))),
        Ok(vec![1, 2])
    );
}

/// Roots of the reduced cubic at a degree-1 place, by evaluation.
fn brute_roots(form: &CanonicalForm, pl: &Place) -> usize {
    let fq = form.param().field().clone();
    let c: Vec<_> = form
        .cubic()
        .c
        .iter()
        .map(|c| c.residue_at(pl).unwrap().coeff(0))
        .collect();
    fq.elements()
        .filter(|&t| {
            let v = fq.add(
                fq.add(fq.pow(t, 3), fq.mul(c[2], fq.mul(t, t))),
                fq.add(fq.mul(c[1], t), c[0]),
            );
            v.is_zero()
        })
        .count()
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn kummer_oracle_agrees(seed in any::<u64>(), q in prop::sample::select(vec![4u64, 7, 13, 16])) {
        let fq = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let CanonicalForm::Pure(a) = random_form(&fq, FormKind::Pure, &mut rng, 4) else { unreachable!() };
        let r = ram_pure(&a).unwrap();
        match kummer_genus_oracle(&a) {
            Ok(g) => prop_assert_eq!(r.genus, Some(g)),
            Err(Error::ConstantExtension) => prop_assert!(r.constant),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn artin_schreier_oracle_agrees(seed in any::<u64>(), q in prop::sample::select(vec![3u64, 9])) {
        let fq = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_galois_char3(&fq, &mut rng, 4);
        let r = ram_char3(&a).unwrap();
        prop_assert!(r.galois);
        match as3_genus_oracle(&a) {
            Ok(g) => prop_assert_eq!(r.genus, Some(g)),
            Err(Error::ConstantExtension) => prop_assert!(r.constant),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn split_patterns_are_valid(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 9, 13])) {
        let fq = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kinds = FormKind::for_char(fq.p());
        let form = random_form(&fq, kinds[seed as usize % kinds.len()], &mut rng, 3);
        let pl = random_place(&fq, &mut rng, 3);
        match kummer_split_spotcheck(&form, &pl) {
            Ok(ok) => {
                prop_assert!(ok, "{:?} at {}", form, pl);
                if pl.degree() == 1 {
                    let roots = match kummer_split_pattern(&form, &pl).unwrap().as_slice() {
                        [3] => 0,
                        [1, 2] => 1,
                        _ => 3,
                    };
                    prop_assert_eq!(roots, brute_roots(&form, &pl));
                }
            }
            Err(e) => prop_assert_eq!(e, Error::InapplicablePlace),
        }
    }

    #[test]
    fn fuzz_finds_nothing(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3, 4, 5, 7])) {
        let fq = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kinds = FormKind::for_char(fq.p());
        let form = random_form(&fq, kinds[seed as usize % kinds.len()], &mut rng, 3);
        let found = generator_fuzz(&form, seed, 6);
        prop_assert!(found.is_empty(), "{:?}", found);
    }
}
