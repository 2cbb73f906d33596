mod common;

use common::{arb_ratfn, config, field, rf};
use cubicff::forms::{has_root, CanonicalForm};
use cubicff::intbasis::{
    basis_char3, basis_impure, basis_pure, integral_basis, verify_basis, BasisElement, Provenance,
};
use cubicff::ramgenus::{ram_char3, ram_impure, ram_pure, ramification};
use cubicff::ratfunc::{Place, RatFn};
use proptest::prelude::*;

#[test]
fn pure_examples() {
    let f7 = field(7);
    let a = rf(&f7, &[0, 0, 1, 1], &[1]);
    let b = basis_pure(&a).unwrap();
    assert_eq!(b.strings(), ["1", "y", "y^2/(x)"].map(String::from));
    assert_eq!(verify_basis(&b, &ram_pure(&a).unwrap()), Ok(()));

    let b = basis_pure(&rf(&f7, &[0, 1, 1], &[1])).unwrap();
    assert_eq!(b.strings(), ["1", "y", "y^2"].map(String::from));

    // Poles: y³ = 1/x gives xy and xy².
    let b = basis_pure(&rf(&f7, &[1], &[0, 1])).unwrap();
    assert_eq!(b.strings(), ["1", "x*y", "x*y^2"].map(String::from));
}

#[test]
fn tampered_basis_is_rejected() {
    let f7 = field(7);
    let a = rf(&f7, &[0, 0, 1, 1], &[1]);
    let report = ram_pure(&a).unwrap();
    let mut b = basis_pure(&a).unwrap();
    let mut e = b.cubic.zero();
    e[2] = RatFn::one(&f7);
    b.elements[2] = BasisElement::from_elem(&e);
    let err = verify_basis(&b, &report).unwrap_err();
    assert!(err.non_integral.is_empty());
    assert_eq!(
        err.valuations,
        vec![(Place::Finite(common::poly(&f7, &[0, 1])), 4, 2)]
    );

    // Too large: y²/x² is not integral.
    e[2] = RatFn::x(&f7).pow(-2);
    b.elements[2] = BasisElement::from_elem(&e);
    assert_eq!(verify_basis(&b, &report).unwrap_err().non_integral, vec![2]);
}

#[test]
fn impure_examples() {
    let f5 = field(5);
    let x = RatFn::x(&f5);
    let b = basis_impure(&x).unwrap();
    assert_eq!(b.provenance, Provenance::ImpureOdd);
    assert_eq!(b.strings(), ["1", "y", "y^2"].map(String::from));
    assert_eq!(verify_basis(&b, &ram_impure(&x).unwrap()), Ok(()));

    let f2 = field(2);
    let a = rf(&f2, &[1], &[1, 1, 1]);
    let b = basis_impure(&a).unwrap();
    assert_eq!(b.provenance, Provenance::ImpureEven);
    assert_eq!(verify_basis(&b, &ram_impure(&a).unwrap()), Ok(()));
}

#[test]
fn char3_examples() {
    let f3 = field(3);
    let x = RatFn::x(&f3);
    let b = basis_char3(&x.inv()).unwrap();
    assert_eq!(b.strings(), ["1", "x*z", "x^2*z^2"].map(String::from));
    assert_eq!(verify_basis(&b, &ram_char3(&x.inv()).unwrap()), Ok(()));

    let b3 = basis_char3(&x.pow(-3)).unwrap();
    assert_eq!(b3.strings(), b.strings());
    assert!(!b3.map.is_identity());
    assert!(b3
        .map
        .is_sound(&CanonicalForm::CharThree(x.pow(-3)).cubic(), &b3.cubic));

    let b = basis_char3(&x).unwrap();
    assert_eq!(b.strings(), ["1", "z", "z^2/(x)"].map(String::from));
    assert_eq!(verify_basis(&b, &ram_char3(&x).unwrap()), Ok(()));
}

fn arb_form(qs: &'static [u64], kind: u8) -> impl Strategy<Value = CanonicalForm> {
    prop::sample::select(qs)
        .prop_flat_map(|q| arb_ratfn(q, 4))
        .prop_filter_map("reducible", move |a| {
            let form = match (a.field().p(), kind) {
                (3, _) => CanonicalForm::CharThree(a),
                (_, 0) => CanonicalForm::Pure(a),
                _ => CanonicalForm::Impure(a),
            };
            (!has_root(&form.cubic())).then_some(form)
        })
}

fn check(form: &CanonicalForm) -> Result<(), TestCaseError> {
    let basis = integral_basis(form).unwrap();
    let report = ramification(form).unwrap();
    let res = verify_basis(&basis, &report);
    prop_assert!(res.is_ok(), "{:?}: {} -> {}", form, basis, res.unwrap_err());
    Ok(())
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn pure_bases_verify(form in arb_form(&[2, 4, 5, 7, 8, 13], 0)) {
        check(&form)?;
    }

    #[test]
    fn impure_bases_verify(form in arb_form(&[5, 7, 11, 13, 25], 1)) {
        check(&form)?;
    }

    #[test]
    fn impure_char_two_bases_verify(form in arb_form(&[2, 4, 8], 1)) {
        check(&form)?;
    }

    #[test]
    fn char3_bases_verify(form in arb_form(&[3, 9], 0)) {
        check(&form)?;
    }
}
