use cubicff::algebra::{monic_irreducibles, poly_crt, residue_root, Fe, Fq, Poly};
use cubicff::Error;
use proptest::prelude::*;

fn poly(fq: &Fq, c: &[i64]) -> Poly {
    Poly::from_ints(fq, c)
}

#[test]
fn factor_difference_of_squares_f7() {
    let f7 = Fq::prime(7).unwrap();
    let fac = poly(&f7, &[-1, 0, 1]).factor();
    assert_eq!(fac.unit, Fe::ONE);
    assert_eq!(
        fac.factors,
        vec![(poly(&f7, &[1, 1]), 1), (poly(&f7, &[6, 1]), 1)]
    );
}

#[test]
fn factor_small_irreducibles() {
    let f3 = Fq::prime(3).unwrap();
    let x = poly(&f3, &[0, 1]);
    assert_eq!(x.factor().factors, vec![(x.clone(), 1)]);
    let g = poly(&f3, &[1, 0, 1]);
    assert_eq!(g.factor().factors, vec![(g.clone(), 1)]);
    assert!(f3.elements().all(|c| !g.eval(c).is_zero()));
}

#[test]
fn factor_keeps_unit_and_multiplicities() {
    let f5 = Fq::prime(5).unwrap();
    // 3·x^2·(x+1)^5 exercises the p-th power branch.
    let f = poly(&f5, &[3])
        .mul(&poly(&f5, &[0, 0, 1]))
        .mul(&poly(&f5, &[1, 1]).pow(5));
    let fac = f.factor();
    assert_eq!(fac.unit, f5.from_int(3));
    assert_eq!(
        fac.factors,
        vec![(poly(&f5, &[0, 1]), 2), (poly(&f5, &[1, 1]), 5)]
    );
    assert_eq!(fac.product(&f5), f);
}

#[test]
fn irreducibility_examples() {
    let f3 = Fq::prime(3).unwrap();
    let f5 = Fq::prime(5).unwrap();
    assert!(poly(&f3, &[-1, -1, 0, 1]).is_irreducible());
    assert!(!poly(&f5, &[0, -1, 0, 1]).is_irreducible());
    assert!(!poly(&f5, &[1, 0, 1]).is_irreducible());
    assert!(!poly(&f5, &[3]).is_irreducible());
}

#[test]
fn irreducible_counts_match_necklace_formula() {
    // Number of monic irreducibles of degree d over F_q: (1/d) Σ μ(d/k) q^k.
    for (q, d, expect) in [(2u64, 4usize, 3usize), (3, 3, 8), (4, 2, 6), (5, 2, 10)] {
        let fq = Fq::from_order(q).unwrap();
        assert_eq!(monic_irreducibles(&fq, d).count(), expect, "q={q} d={d}");
    }
}

#[test]
fn default_moduli_are_irreducible_and_primitive() {
    let cases = [
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 8),
        (3, 2),
        (3, 3),
        (3, 4),
        (5, 2),
        (5, 3),
        (7, 2),
        (7, 3),
        (11, 2),
        (13, 2),
        (17, 2),
        (2, 10),
    ];
    for (p, n) in cases {
        let fq = Fq::new(p, n).unwrap();
        let fp = Fq::prime(p).unwrap();
        let m: Vec<i64> = fq.modulus().unwrap().iter().map(|&c| c as i64).collect();
        assert!(poly(&fp, &m).is_irreducible(), "modulus of F_{p}^{n}");
        let order = fq.q() as u64 - 1;
        let w = fq.generator();
        assert_eq!(fq.pow(w, order), Fe::ONE);
        for r in (2..=order).filter(|r| order.is_multiple_of(*r)) {
            assert_ne!(
                fq.pow(w, order / r),
                Fe::ONE,
                "w not primitive in F_{p}^{n}"
            );
        }
    }
}

#[test]
fn field_construction_errors() {
    assert_eq!(Fq::new(6, 1), Err(Error::NotPrime(6)));
    assert_eq!(Fq::new(3, 0), Err(Error::ZeroDegree));
    assert!(matches!(Fq::new(2, 21), Err(Error::FieldTooLarge(_))));
    assert_eq!(Fq::with_modulus(3, 2, vec![1, 0, 1]).map(|f| f.q()), Ok(9));
    assert_eq!(
        Fq::with_modulus(3, 2, vec![2, 0, 1]),
        Err(Error::BadModulus(2))
    );
    assert_eq!(Fq::from_order(12), Err(Error::NotPrime(12)));
}

#[test]
fn field_axioms_small() {
    for q in [2u64, 3, 4, 8, 9, 25] {
        let k = Fq::from_order(q).unwrap();
        for a in k.elements() {
            assert_eq!(k.add(a, k.neg(a)), Fe::ZERO);
            if !a.is_zero() {
                assert_eq!(k.mul(a, k.inv(a)), Fe::ONE);
            }
            for b in k.elements() {
                assert_eq!(k.mul(a, b), k.mul(b, a));
                assert_eq!(k.sub(k.add(a, b), b), a);
            }
        }
        // Frobenius is a bijection.
        let mut img: Vec<Fe> = k.elements().map(|a| k.frobenius(a)).collect();
        img.sort();
        img.dedup();
        assert_eq!(img.len(), q as usize);
    }
}

#[test]
fn nth_roots() {
    let f7 = Fq::prime(7).unwrap();
    assert_eq!(f7.const_nth_root(f7.from_int(6), 3), Some(f7.from_int(3)));
    assert_eq!(f7.const_nth_root(f7.from_int(2), 3), None);
    for q in [2u64, 4, 7, 9, 13] {
        let k = Fq::from_order(q).unwrap();
        assert_eq!(k.const_nth_root(Fe::ONE, 3), Some(Fe::ONE));
    }
    // p-th roots exist and are unique.
    for q in [2u64, 3, 4, 8, 9, 27] {
        let k = Fq::from_order(q).unwrap();
        for c in k.elements() {
            let r = k.const_nth_root(c, k.p() as u64).unwrap();
            assert_eq!(k.pow(r, k.p() as u64), c);
            assert_eq!(
                k.elements()
                    .filter(|&z| k.pow(z, k.p() as u64) == c)
                    .count(),
                1
            );
        }
    }
}

#[test]
fn roots_are_least_by_enumeration() {
    for q in [5u64, 7, 9, 13, 16] {
        let k = Fq::from_order(q).unwrap();
        for m in [2u64, 3, 4] {
            for c in k.elements() {
                let brute = k.elements().find(|&z| k.pow(z, m) == c);
                assert_eq!(k.const_nth_root(c, m), brute, "q={q} m={m}");
            }
        }
    }
}

#[test]
fn constant_artin_schreier() {
    let f2 = Fq::prime(2).unwrap();
    assert_eq!(f2.solve_const_artin_schreier(Fe::ZERO), Some(Fe::ZERO));
    assert_eq!(f2.solve_const_artin_schreier(Fe::ONE), None);
    let f4 = Fq::new(2, 2).unwrap();
    let w = f4.generator();
    assert_eq!(f4.solve_const_artin_schreier(Fe::ONE), Some(w));
    for q in [3u64, 4, 8, 9, 25] {
        let k = Fq::from_order(q).unwrap();
        let p = k.p() as u64;
        for c in k.elements() {
            let brute = k.elements().find(|&z| k.sub(k.pow(z, p), z) == c);
            assert_eq!(k.solve_const_artin_schreier(c), brute);
        }
    }
}

#[test]
fn residue_root_examples() {
    let f3 = Fq::prime(3).unwrap();
    let x = poly(&f3, &[0, 1]);
    let one = poly(&f3, &[1]);
    assert_eq!(residue_root(&x, &one, 3, -1).unwrap(), poly(&f3, &[2]));
    let f2 = Fq::prime(2).unwrap();
    assert_eq!(
        residue_root(&poly(&f2, &[0, 1]), &poly(&f2, &[1]), 2, 1).unwrap(),
        poly(&f2, &[1])
    );
    let pi = poly(&f3, &[1, 0, 1]);
    let m = residue_root(&pi, &x, 3, 1).unwrap();
    assert!(m.deg().unwrap() <= 1);
    assert_eq!(m.pow_mod(3, &pi), x);
    // Unique: no other residue class cubes to x.
    let classes = (0..9).map(|i| poly(&f3, &[i % 3, i / 3]));
    assert_eq!(classes.filter(|c| c.pow_mod(3, &pi) == x).count(), 1);
}

#[test]
fn crt_examples() {
    let f3 = Fq::prime(3).unwrap();
    let x = poly(&f3, &[0, 1]);
    let x1 = poly(&f3, &[1, 1]);
    let zero = Poly::zero(&f3);
    let one = poly(&f3, &[1]);
    assert_eq!(
        poly_crt(&[(zero, x.clone()), (one.clone(), x1.clone())]).unwrap(),
        poly(&f3, &[0, 2])
    );
    let r = poly(&f3, &[2, 0, 0, 1]);
    let m = poly(&f3, &[1, 0, 1]);
    assert_eq!(poly_crt(&[(r.clone(), m.clone())]).unwrap(), r.rem(&m));
    assert_eq!(
        poly_crt(&[(one.clone(), x.clone()), (one.clone(), x1)]).unwrap(),
        one
    );
    assert_eq!(
        poly_crt(&[(one.clone(), x.clone()), (Poly::zero(&f3), x.mul(&x))]),
        Err(Error::NonCoprimeModuli)
    );
}

#[test]
fn display_uses_generator_symbol() {
    let f9 = Fq::new(3, 2).unwrap();
    let w = f9.generator();
    let f = Poly::from_coeffs(&f9, vec![f9.add(w, Fe::ONE), Fe::ONE, Fe::ONE]);
    assert_eq!(f.to_string(), "x^2+x+(w+1)");
    assert_eq!(
        poly(&Fq::prime(7).unwrap(), &[6, 0, 3]).to_string(),
        "3*x^2+6"
    );
}

const ORDERS: [u64; 6] = [2, 3, 4, 5, 7, 9];

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    arb_polys(1, max_deg).prop_map(|mut v| v.pop().unwrap())
}

/// `count` polynomials over one randomly chosen field.
fn arb_polys(count: usize, max_deg: usize) -> impl Strategy<Value = Vec<Poly>> {
    let coeffs = prop::collection::vec(any::<u32>(), 1..=max_deg + 1);
    (0..ORDERS.len(), prop::collection::vec(coeffs, count)).prop_map(|(i, cs)| {
        let fq = Fq::from_order(ORDERS[i]).unwrap();
        cs.into_iter()
            .map(|c| Poly::from_coeffs(&fq, c.into_iter().map(|v| fq.elem(v)).collect()))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn factor_reconstructs(f in arb_poly(12), seed in any::<u64>()) {
        prop_assume!(!f.is_zero());
        let fq = f.field().clone();
        let fac = f.factor_seeded(seed);
        prop_assert_eq!(fac.product(&fq), f.clone());
        for w in fac.factors.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for (g, e) in &fac.factors {
            prop_assert!(g.is_monic() && g.is_irreducible() && *e > 0);
        }
        prop_assert_eq!(fac, f.factor_seeded(seed ^ 0x9e37));
    }

    #[test]
    fn division_identity(v in arb_polys(2, 10)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(b);
        prop_assert_eq!(q.mul(b).add(&r), a.clone());
        prop_assert!(r.degree() < b.degree());
        let (g, s, t) = a.ext_gcd(b);
        prop_assert_eq!(s.mul(a).add(&t.mul(b)), g.clone());
        prop_assert!(a.divisible_by(&g) && b.divisible_by(&g));
    }

    #[test]
    fn residue_root_postcondition(t in arb_poly(6), pick in 0usize..40, sign in prop::sample::select(vec![-1i64, 1])) {
        let fq = t.field().clone();
        let pi = monic_irreducibles(&fq, 1 + pick % 3).nth(pick / 3).unwrap_or_else(|| Poly::x(&fq));
        prop_assume!(!t.rem(&pi).is_zero());
        let p = fq.p() as u64;
        let m = residue_root(&pi, &t, p, sign).unwrap();
        prop_assert!(m.degree() < pi.degree());
        prop_assert_eq!(m.pow_mod(p, &pi), t.scale(fq.from_int(sign)).rem(&pi));
    }

    #[test]
    fn crt_satisfies_congruences(v in arb_polys(2, 4), k in 0usize..20) {
        let (r1, r2) = (&v[0], &v[1]);
        let fq = r1.field().clone();
        let irr: Vec<Poly> = monic_irreducibles(&fq, 2).take(3).collect();
        prop_assume!(irr.len() >= 2);
        let m1 = irr[k % irr.len()].clone();
        let m2 = Poly::x(&fq).add(&Poly::constant(&fq, fq.elem(k as u32)));
        let r = poly_crt(&[(r1.clone(), m1.clone()), (r2.clone(), m2.clone())]).unwrap();
        prop_assert_eq!(r.rem(&m1), r1.rem(&m1));
        prop_assert_eq!(r.rem(&m2), r2.rem(&m2));
        prop_assert!(r.degree() < 3);
    }
}
