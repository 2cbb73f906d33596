//! Ramified places, their indices and different exponents, and the genus by
//! Riemann–Hurwitz over the rational base F_q(x).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forms::{has_root, is_galois, CanonicalForm};
use crate::ratfunc::{Place, RatFn};
use crate::reduction::{as_reduce, gas_reduce};

/// A ramified place with ramification index e ∈ {2, 3} and different exponent d.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RamTriple {
    pub place: Place,
    pub e: u32,
    pub d: i64,
}

impl RamTriple {
    fn new(place: Place, e: u32, d: i64) -> RamTriple {
        RamTriple { place, e, d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    /// Sorted by place: by degree, then coefficients, infinity last.
    pub triples: Vec<RamTriple>,
    /// `None` for constant extensions.
    pub genus: Option<i64>,
    pub galois: bool,
    pub constant: bool,
}

impl GenusReport {
    /// Σ d·deg over the triples.
    pub fn different_degree(&self) -> i64 {
        self.triples
            .iter()
            .map(|t| t.d * t.place.degree() as i64)
            .sum()
    }
}

/// g = −2 + ½ Σ d·deg(place).
pub fn genus_from_triples(triples: &[RamTriple]) -> Result<i64> {
    let total: i64 = triples.iter().map(|t| t.d * t.place.degree() as i64).sum();
    if total % 2 != 0 {
        return Err(Error::OddDifferentDegree(total));
    }
    Ok(-2 + total / 2)
}

fn finish(mut triples: Vec<RamTriple>, galois: bool) -> Result<GenusReport> {
    triples.sort();
    let constant = triples.is_empty();
    let genus = if constant {
        None
    } else {
        Some(genus_from_triples(&triples)?)
    };
    if let Some(g) = genus {
        if g < 0 {
            return Err(Error::Internal(format!("negative genus {g}")));
        }
    }
    Ok(GenusReport {
        triples,
        genus,
        galois,
        constant,
    })
}

/// Places with v < 0 and 3 ∤ v, as (place, v).
fn tame_poles(a: &RatFn) -> impl Iterator<Item = (Place, i64)> {
    a.support()
        .into_iter()
        .filter(|(_, v)| *v < 0 && v % 3 != 0)
}

/// X³ − a with p ≠ 3: fully ramified exactly where 3 ∤ v(a).
pub fn ram_pure(a: &RatFn) -> Result<GenusReport> {
    let form = CanonicalForm::Pure(a.clone());
    if has_root(&form.cubic()) {
        return Err(Error::ReducibleInput);
    }
    let triples = a
        .support()
        .into_iter()
        .filter(|(_, v)| v % 3 != 0)
        .map(|(pl, _)| RamTriple::new(pl, 3, 2))
        .collect();
    finish(triples, is_galois(&form))
}

/// X³ − 3X − a with p ≠ 3.
pub fn ram_impure(a: &RatFn) -> Result<GenusReport> {
    let fq = a.field();
    let form = CanonicalForm::Impure(a.clone());
    if has_root(&form.cubic()) {
        return Err(Error::ReducibleInput);
    }
    let mut triples: Vec<RamTriple> = tame_poles(a)
        .map(|(pl, _)| RamTriple::new(pl, 3, 2))
        .collect();
    if fq.p() == 2 {
        let red = as_reduce(&RatFn::one(fq).add(&a.inv()), 2);
        for (pl, v) in red.b.support() {
            if v < 0 && v % 2 != 0 {
                triples.push(RamTriple::new(pl, 2, -v + 1));
            }
        }
    } else {
        let disc = a.mul(a).sub(&RatFn::int(fq, 4));
        for (pl, v) in disc.support() {
            if v > 0 && v % 2 == 1 {
                triples.push(RamTriple::new(pl, 2, 1));
            }
        }
    }
    finish(triples, is_galois(&form))
}

/// X³ + aX + a² in characteristic 3.
pub fn ram_char3(a: &RatFn) -> Result<GenusReport> {
    let form = CanonicalForm::CharThree(a.clone());
    if has_root(&form.cubic()) {
        return Err(Error::ReducibleInput);
    }
    let red = gas_reduce(a);
    let mut triples = Vec::new();
    for (pl, v) in red.b.finite_support() {
        if v < 0 && v % 3 != 0 {
            triples.push(RamTriple::new(pl, 3, -v + 2));
        }
    }
    let v_inf = -red.degree_at_infinity();
    if v_inf < 0 && v_inf % 3 != 0 {
        triples.push(RamTriple::new(Place::Infinity, 3, -v_inf + 2));
    }
    // v(a) mod 2 is the same for every parameter of the field.
    for (pl, v) in a.support() {
        if v % 2 != 0 && !triples.iter().any(|t| t.place == pl) {
            triples.push(RamTriple::new(pl, 2, 1));
        }
    }
    finish(triples, is_galois(&form))
}

/// Dispatch on the form.
pub fn ramification(form: &CanonicalForm) -> Result<GenusReport> {
    match form {
        CanonicalForm::Pure(a) => ram_pure(a),
        CanonicalForm::Impure(a) => ram_impure(a),
        CanonicalForm::CharThree(a) => ram_char3(a),
    }
}

/// Reports for many forms on `workers` threads, in input order.
pub fn ramification_batch(forms: &[CanonicalForm], workers: usize) -> Vec<Result<GenusReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| forms.par_iter().map(ramification).collect())
}
