mod common;

use common::{arb_ratfn, arb_ratfn_in, config, field, poly, rf};
use cubicff::algebra::Fe;
use cubicff::ratfunc::{solve_quadratic, sqrt_ratfn, PfTerm, Place, RatFn};
use cubicff::Error;
use proptest::prelude::*;

#[test]
fn valuations() {
    let f5 = field(5);
    let a = rf(&f5, &[0, 0, 1], &[1, 1]);
    assert_eq!(a.valuation(&Place::Finite(poly(&f5, &[0, 1]))), Ok(2));
    assert_eq!(a.valuation(&Place::Infinity), Ok(-1));
    assert_eq!(a.valuation(&Place::Finite(poly(&f5, &[1, 1]))), Ok(-1));
    assert_eq!(a.valuation(&Place::Finite(poly(&f5, &[2, 1]))), Ok(0));
    assert_eq!(
        RatFn::zero(&f5).valuation(&Place::Infinity),
        Err(Error::ZeroArgument)
    );
}

#[test]
fn residues() {
    let f5 = field(5);
    let x = RatFn::x(&f5);
    assert_eq!(
        x.residue_at(&Place::Finite(poly(&f5, &[-2, 1]))).unwrap(),
        poly(&f5, &[2])
    );
    let a = rf(&f5, &[1, 2], &[3, 1]);
    assert_eq!(a.residue_at(&Place::Infinity).unwrap(), poly(&f5, &[2]));
    assert!(x.inv().residue_at(&Place::Infinity).unwrap().is_zero());
    assert_eq!(
        x.residue_at(&Place::Infinity),
        Err(Error::NegativeValuation)
    );
    // Residue at a degree-2 place is a class mod π.
    let f3 = field(3);
    let pi = poly(&f3, &[1, 0, 1]);
    let r = rf(&f3, &[0, 0, 0, 1], &[1])
        .residue_at(&Place::Finite(pi.clone()))
        .unwrap();
    assert_eq!(r, poly(&f3, &[0, -1]));
}

#[test]
fn partial_fraction_examples() {
    let f3 = field(3);
    let pf = rf(&f3, &[1], &[0, 1, 1]).partial_fractions();
    assert!(pf.poly_part.is_zero());
    assert_eq!(
        pf.terms,
        vec![
            PfTerm {
                pi: poly(&f3, &[0, 1]),
                k: 1,
                t: poly(&f3, &[1])
            },
            PfTerm {
                pi: poly(&f3, &[1, 1]),
                k: 1,
                t: poly(&f3, &[2])
            },
        ]
    );
    let p = rf(&f3, &[1, 2, 0, 1], &[1]).partial_fractions();
    assert!(p.terms.is_empty());
    assert_eq!(p.poly_part, poly(&f3, &[1, 2, 0, 1]));
    let f2 = field(2);
    let pf = rf(&f2, &[1], &[0, 0, 1]).partial_fractions();
    assert_eq!(
        pf.terms,
        vec![PfTerm {
            pi: poly(&f2, &[0, 1]),
            k: 2,
            t: poly(&f2, &[1])
        }]
    );
}

#[test]
fn square_roots() {
    let f5 = field(5);
    assert_eq!(
        sqrt_ratfn(&rf(&f5, &[1, 2, 1], &[0, 0, 1])),
        Some(rf(&f5, &[1, 1], &[0, 1]))
    );
    assert_eq!(RatFn::x(&f5).sqrt(), None);
    let s = rf(&f5, &[-1, 0, 1], &[0, 1]);
    assert_eq!(s.mul(&s).sqrt(), Some(s));
    // A non-square unit blocks the root.
    assert_eq!(RatFn::int(&f5, 2).mul(&RatFn::x(&f5).pow(2)).sqrt(), None);
    // Characteristic 2: the root is unique.
    let f4 = field(4);
    let t = rf(&f4, &[1, 1, 0, 1], &[0, 1]);
    assert_eq!(t.mul(&t).sqrt(), Some(t));
}

#[test]
fn cube_decomposition() {
    let f7 = field(7);
    let x = RatFn::x(&f7);
    assert_eq!(
        x.pow(3).scale(f7.from_int(2)).cube_unit_decompose(),
        Some((f7.from_int(2), x.clone()))
    );
    assert_eq!(x.cube_unit_decompose(), None);
    let a = rf(&f7, &[1, 1], &[1])
        .pow(6)
        .scale(f7.from_int(3))
        .div(&x.pow(3));
    assert_eq!(
        a.cube_unit_decompose(),
        Some((f7.from_int(3), rf(&f7, &[1, 2, 1], &[0, 1])))
    );
}

#[test]
fn quadratic_examples() {
    let f5 = field(5);
    let x = RatFn::x(&f5);
    let a1 = x.add(&x.inv());
    let one = RatFn::one(&f5);
    assert_eq!(solve_quadratic(&a1, &one), Some(x.inv().neg()));

    let f2 = field(2);
    let x = RatFn::x(&f2);
    let a1 = rf(&f2, &[1, 0, 1], &[0, 1]);
    let one = RatFn::one(&f2);
    let r = solve_quadratic(&a1, &one).unwrap();
    // Roots are x and 1/x; the least numerator picks 1/x.
    assert_eq!(r, x.inv());
    assert_eq!(r.add(&a1), x);
    assert_eq!(solve_quadratic(&one, &one), None);
    // X² = x has no root, X² = x² does.
    assert_eq!(solve_quadratic(&RatFn::zero(&f2), &x), None);
    assert_eq!(solve_quadratic(&RatFn::zero(&f2), &x.pow(2)), Some(x));
}

#[test]
fn quadratic_over_f4_needs_constant_artin_schreier() {
    // X² + X + 1 has the roots w, w+1 in F_4.
    let f4 = field(4);
    let one = RatFn::one(&f4);
    let r = solve_quadratic(&one, &one).unwrap();
    assert_eq!(r, RatFn::constant(&f4, f4.generator()));
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn principal_divisors_have_degree_zero(a in arb_ratfn_in(&[2, 3, 4, 5, 7, 9], 6)) {
        let total: i64 = a.support().iter().map(|(pl, v)| v * pl.degree() as i64).sum();
        prop_assert_eq!(total, 0);
        for (pl, v) in a.support() {
            prop_assert_eq!(a.valuation(&pl).unwrap(), v);
        }
    }

    #[test]
    fn partial_fractions_resum(a in arb_ratfn_in(&[2, 3, 4, 5, 7], 7)) {
        let pf = a.partial_fractions();
        prop_assert_eq!(pf.sum(), a);
        for t in &pf.terms {
            prop_assert!(t.k > 0 && t.t.degree() < t.pi.degree() && !t.t.is_zero());
        }
    }

    #[test]
    fn square_roots_recover(s in arb_ratfn_in(&[2, 3, 4, 5, 7, 9], 5)) {
        let r = (s.mul(&s)).sqrt().unwrap();
        prop_assert!(r == s || r == s.neg());
    }

    #[test]
    fn cube_decomposition_recovers(b in arb_ratfn_in(&[2, 4, 5, 7, 13], 4), u in 1u32..1000) {
        let fq = b.field().clone();
        let u = fq.elem(u);
        prop_assume!(u != Fe::ZERO);
        let a = b.pow(3).scale(u);
        let (u2, b2) = a.cube_unit_decompose().unwrap();
        prop_assert!(b2.num().is_monic());
        prop_assert_eq!(b2.pow(3).scale(u2), a);
    }

    #[test]
    fn quadratic_roots_are_found(r1 in arb_ratfn_in(&[2, 3, 4, 5, 7, 8], 3), k in any::<u32>(), d in any::<u32>()) {
        let fq = r1.field().clone();
        // Second root over the same field: r1 shifted by a random polynomial.
        let r2 = r1.add(&RatFn::from_poly(cubicff::algebra::Poly::from_coeffs(&fq, vec![fq.elem(k), fq.elem(d)])));
        let a1 = r1.add(&r2).neg();
        let a0 = r1.mul(&r2);
        let r = solve_quadratic(&a1, &a0).unwrap();
        prop_assert!(r == r1 || r == r2);
        prop_assert!(r <= r1 && r <= r2);
    }

    #[test]
    fn quadratic_roots_satisfy(a1 in arb_ratfn(2, 4), a0 in arb_ratfn(2, 4)) {
        if let Some(r) = solve_quadratic(&a1, &a0) {
            prop_assert!(r.mul(&r).add(&a1.mul(&r)).add(&a0).is_zero());
        }
    }

    #[test]
    fn roots_of_reciprocal_quadratic(c in arb_ratfn_in(&[2, 5, 7, 11], 4)) {
        // X² + aX + 1 with a = −(c + 1/c) has roots c, 1/c.
        let a = c.add(&c.inv()).neg();
        prop_assume!(!a.is_zero());
        let r = solve_quadratic(&a, &RatFn::one(a.field())).unwrap();
        let other = r.inv();
        for (pl, v) in a.support() {
            let (vr, vo) = (r.valuation(&pl).unwrap(), other.valuation(&pl).unwrap());
            prop_assert_eq!(vr, -vo);
            if v < 0 {
                prop_assert_eq!(vr.min(vo), v);
            }
        }
    }
}
