#![allow(dead_code)]

use cubicff::algebra::{Fq, Poly};
use cubicff::ratfunc::RatFn;
use proptest::prelude::*;

pub fn field(q: u64) -> Fq {
    Fq::from_order(q).unwrap()
}

pub fn poly(fq: &Fq, c: &[i64]) -> Poly {
    Poly::from_ints(fq, c)
}

/// num/den from integer coefficient lists (low to high).
pub fn rf(fq: &Fq, num: &[i64], den: &[i64]) -> RatFn {
    RatFn::new(poly(fq, num), poly(fq, den))
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn poly_from(fq: &Fq, c: Vec<u32>) -> Poly {
    Poly::from_coeffs(fq, c.into_iter().map(|v| fq.elem(v)).collect())
}

/// A nonzero rational function over F_q with numerator and denominator of degree ≤ max_deg.
pub fn arb_ratfn(q: u64, max_deg: usize) -> impl Strategy<Value = RatFn> {
    let c = prop::collection::vec(any::<u32>(), 1..=max_deg + 1);
    (c.clone(), c).prop_filter_map("zero", move |(n, d)| {
        let fq = field(q);
        let (n, d) = (poly_from(&fq, n), poly_from(&fq, d));
        (!n.is_zero() && !d.is_zero()).then(|| RatFn::new(n, d))
    })
}

/// A rational function over one of the given fields.
pub fn arb_ratfn_in(qs: &'static [u64], max_deg: usize) -> impl Strategy<Value = RatFn> {
    prop::sample::select(qs).prop_flat_map(move |q| arb_ratfn(q, max_deg))
}
