//! Independent cross-checks: classical genus formulas, generator-change fuzzing,
//! the splitting of unramified places, and random irreducible cubics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Fe, Fq, Poly};
use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::forms::{has_root, purity_test, CanonicalForm, CubicInput};
use crate::pipeline::canonicalize;
use crate::ramgenus::{ramification, GenusReport};
use crate::ratfunc::{Place, RatFn};
use crate::reduction::as_reduce;

/// A disagreement between the pipeline and an oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub input: String,
    pub pipeline: String,
    pub oracle: String,
    pub oracle_name: &'static str,
}

/// Genus of y³ = a from the Kummer formula 2g − 2 = −6 + Σ (3 − gcd(3, v))·deg.
pub fn kummer_genus_oracle(a: &RatFn) -> Result<i64> {
    if a.field().q() % 3 != 1 {
        return Err(Error::WrongConstantField);
    }
    let total: i64 = a
        .support()
        .iter()
        .map(|(pl, v)| {
            if v % 3 == 0 {
                0
            } else {
                2 * pl.degree() as i64
            }
        })
        .sum();
    if total == 0 {
        return Err(Error::ConstantExtension);
    }
    Ok((total - 6 + 2) / 2)
}

/// Genus of X³ + aX + a² with −a = b²: y/b is a root of X³ − X + b, an
/// Artin–Schreier extension with 2g − 2 = −6 + Σ 2(m + 1)·deg over the poles of
/// the reduced parameter.
pub fn as3_genus_oracle(a: &RatFn) -> Result<i64> {
    if a.field().p() != 3 {
        return Err(Error::WrongConstantField);
    }
    let b = a.neg().sqrt().ok_or(Error::NotGalois)?;
    let red = as_reduce(&b.neg(), 3);
    let total: i64 = red
        .b
        .support()
        .iter()
        .filter(|(_, v)| *v < 0)
        .map(|(pl, v)| 2 * (1 - v) * pl.degree() as i64)
        .sum();
    if total == 0 {
        return Err(Error::ConstantExtension);
    }
    Ok((total - 6 + 2) / 2)
}

fn summary(r: &GenusReport) -> String {
    let places: Vec<String> = r
        .triples
        .iter()
        .map(|t| format!("({},{},{})", t.place, t.e, t.d))
        .collect();
    match r.genus {
        Some(g) => format!("g={g} [{}]", places.join(" ")),
        None => "constant".to_string(),
    }
}

/// Compare the reports of two presentations expected to define the same field.
pub fn compare_forms(expected: &CanonicalForm, other: &CanonicalForm) -> Option<Discrepancy> {
    let describe = |f: &CanonicalForm| format!("{} a = {}", f.name(), f.param());
    let input = format!("{} vs {}", describe(expected), describe(other));
    match (ramification(expected), ramification(other)) {
        (Ok(r1), Ok(r2))
            if r1.triples == r2.triples && r1.genus == r2.genus && r1.galois == r2.galois =>
        {
            None
        }
        (r1, r2) => Some(Discrepancy {
            input,
            pipeline: r1.map(|r| summary(&r)).unwrap_or_else(|e| e.to_string()),
            oracle: r2.map(|r| summary(&r)).unwrap_or_else(|e| e.to_string()),
            oracle_name: "generator change",
        }),
    }
}

/// A random polynomial of degree ≤ `deg`.
pub fn random_poly(fq: &Fq, rng: &mut ChaCha8Rng, deg: usize) -> Poly {
    let q = fq.q();
    Poly::from_coeffs(
        fq,
        (0..=deg).map(|_| fq.elem(rng.gen_range(0..q))).collect(),
    )
}

/// A random nonzero rational function with numerator and denominator of degree
/// at most `max_deg`.
pub fn random_ratfn(fq: &Fq, rng: &mut ChaCha8Rng, max_deg: usize) -> RatFn {
    loop {
        let (dn, dd) = (rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg));
        let num = random_poly(fq, rng, dn);
        let den = random_poly(fq, rng, dd);
        if !num.is_zero() && !den.is_zero() {
            return RatFn::new(num, den);
        }
    }
}

fn random_nonconstant(fq: &Fq, rng: &mut ChaCha8Rng, max_deg: usize) -> RatFn {
    loop {
        let a = random_ratfn(fq, rng, max_deg.max(1));
        if !a.is_constant() {
            return a;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Pure,
    Impure,
    CharThree,
}

impl FormKind {
    pub fn make(self, a: RatFn) -> CanonicalForm {
        match self {
            FormKind::Pure => CanonicalForm::Pure(a),
            FormKind::Impure => CanonicalForm::Impure(a),
            FormKind::CharThree => CanonicalForm::CharThree(a),
        }
    }

    /// The kinds that exist in characteristic p.
    pub fn for_char(p: u32) -> &'static [FormKind] {
        if p == 3 {
            &[FormKind::CharThree]
        } else {
            &[FormKind::Pure, FormKind::Impure]
        }
    }
}

/// A random irreducible form with non-constant parameter.
pub fn random_form(fq: &Fq, kind: FormKind, rng: &mut ChaCha8Rng, max_deg: usize) -> CanonicalForm {
    loop {
        let form = kind.make(random_nonconstant(fq, rng, max_deg));
        if !has_root(&form.cubic()) {
            return form;
        }
    }
}

/// A random irreducible X³ + aX + a² with −a a square.
pub fn random_galois_char3(fq: &Fq, rng: &mut ChaCha8Rng, max_deg: usize) -> RatFn {
    assert_eq!(fq.p(), 3);
    loop {
        let b = random_nonconstant(fq, rng, max_deg);
        let a = b.mul(&b).neg();
        if !has_root(&Cubic::char3(&a)) {
            return a;
        }
    }
}

/// A random irreducible separable cubic y³ + ey² + fy + g.
pub fn random_irreducible_input(fq: &Fq, rng: &mut ChaCha8Rng, max_deg: usize) -> CubicInput {
    loop {
        let mut c = [0; 3].map(|_| {
            if rng.gen_bool(0.3) {
                RatFn::zero(fq)
            } else {
                random_ratfn(fq, rng, max_deg)
            }
        });
        if c[2].is_zero() {
            c[2] = random_nonconstant(fq, rng, max_deg);
        }
        let input = CubicInput::new(c[0].clone(), c[1].clone(), c[2].clone());
        if canonicalize(&input).is_ok() {
            return input;
        }
    }
}

/// A presentation of the same field through a random fractional-linear change
/// of generator z = (u₁y + u₀)/(w₁y + w₀).
fn random_generator_change(
    form: &CanonicalForm,
    rng: &mut ChaCha8Rng,
) -> Option<Result<CanonicalForm>> {
    let fq = form.param().field().clone();
    let small = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.3) {
            RatFn::zero(&fq)
        } else {
            random_ratfn(&fq, rng, 1)
        }
    };
    let (u1, u0, w1, w0) = (small(rng), small(rng), small(rng), small(rng));
    if u1.mul(&w0).sub(&u0.mul(&w1)).is_zero() {
        return None;
    }
    let cubic = form.cubic();
    let y = cubic.gen();
    let num = cubic.add(&cubic.scale(&y, &u1), &cubic.constant(&u0));
    let den = cubic.add(&cubic.scale(&y, &w1), &cubic.constant(&w0));
    let z = cubic.mul(&num, &cubic.inv(&den)?);
    let [s0, s1, s2] = cubic.char_poly(&z);
    Some(canonicalize(&CubicInput::new(s2, s1, s0)).map(|(f, _)| f))
}

/// A form-specific change of parameter.
fn random_parameter_change(form: &CanonicalForm, rng: &mut ChaCha8Rng) -> Option<CanonicalForm> {
    let fq = form.param().field().clone();
    match form {
        CanonicalForm::Pure(a) => {
            let c = random_ratfn(&fq, rng, 2);
            let j = rng.gen_range(1..=2);
            Some(CanonicalForm::Pure(c.pow(3).mul(&a.pow(j))))
        }
        CanonicalForm::CharThree(a) => {
            let w = random_ratfn(&fq, rng, 2);
            let n = a.mul(a).add(&w.pow(3)).add(&a.mul(&w));
            (!n.is_zero()).then(|| CanonicalForm::CharThree(n.mul(&n).div(&a.pow(3))))
        }
        CanonicalForm::Impure(a) => purity_test(a).map(|(c, _)| CanonicalForm::Pure(c)),
    }
}

/// Present the field of `form` in `trials` random other ways and report every
/// presentation whose ramification data differ.
pub fn generator_fuzz(form: &CanonicalForm, seed: u64, trials: usize) -> Vec<Discrepancy> {
    (0..trials)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let other = match i % 2 {
                0 => random_parameter_change(form, &mut rng).map(Ok),
                _ => None,
            };
            match other.or_else(|| random_generator_change(form, &mut rng))? {
                Ok(other) => compare_forms(form, &other),
                Err(e) => Some(Discrepancy {
                    input: format!("{} a = {}", form.name(), form.param()),
                    pipeline: String::new(),
                    oracle: e.to_string(),
                    oracle_name: "generator change",
                }),
            }
        })
        .collect()
}

/// Polynomials over the residue field F_q[x]/(π), coefficients low to high.
struct Residue<'a> {
    pi: &'a Poly,
}

impl Residue<'_> {
    fn trim(&self, mut a: Vec<Poly>) -> Vec<Poly> {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    fn mul(&self, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let fq = self.pi.field();
        let mut out = vec![Poly::zero(fq); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul_mod(y, self.pi));
            }
        }
        self.trim(out)
    }

    fn rem(&self, a: &[Poly], m: &[Poly]) -> Vec<Poly> {
        let mut a = self.trim(a.to_vec());
        let inv = m.last().unwrap().inv_mod(self.pi).expect("nonzero residue");
        while a.len() >= m.len() {
            let k = a.len() - m.len();
            let c = a.last().unwrap().mul_mod(&inv, self.pi);
            for (i, mi) in m.iter().enumerate() {
                a[k + i] = a[k + i].sub(&c.mul_mod(mi, self.pi));
            }
            a = self.trim(a);
        }
        a
    }

    fn gcd(&self, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn pow_mod(&self, base: &[Poly], mut e: u64, m: &[Poly]) -> Vec<Poly> {
        let mut acc = vec![Poly::one(self.pi.field())];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            e >>= 1;
            b = self.rem(&self.mul(&b, &b), m);
        }
        acc
    }
}

/// Degrees of the irreducible factors of the canonical cubic reduced modulo an
/// unramified place where it has integral coefficients and unit discriminant.
pub fn kummer_split_pattern(form: &CanonicalForm, pl: &Place) -> Result<Vec<u32>> {
    let Place::Finite(pi) = pl else {
        return Err(Error::InapplicablePlace);
    };
    let cubic = form.cubic();
    if cubic
        .c
        .iter()
        .any(|c| !c.is_zero() && c.valuation(pl).unwrap() < 0)
    {
        return Err(Error::InapplicablePlace);
    }
    if cubic.discriminant().valuation(pl).unwrap_or(1) != 0 {
        return Err(Error::InapplicablePlace);
    }
    let fq = pi.field();
    let res = Residue { pi };
    let mut f: Vec<Poly> = cubic.c.iter().map(|c| c.residue_at(pl).unwrap()).collect();
    f.push(Poly::one(fq));
    // X^Q by d successive q-th powers.
    let x = vec![Poly::zero(fq), Poly::one(fq)];
    let mut xq = x.clone();
    for _ in 0..pi.degree() {
        xq = res.pow_mod(&xq, fq.q() as u64, &f);
    }
    let mut diff = xq;
    diff.resize(diff.len().max(2), Poly::zero(fq));
    diff[1] = diff[1].sub(&Poly::one(fq));
    let roots = res.gcd(&f, &diff).len() as i64 - 1;
    Ok(match roots {
        0 => vec![3],
        1 => vec![1, 2],
        3 => vec![1, 1, 1],
        // Two roots of a cubic force the third: a repeated root, not unramified.
        _ => vec![1, 1],
    })
}

/// True when the splitting type at `pl` is one an unramified place can have and
/// is consistent with the ramification report (unramified there; no {1,2} for a
/// Galois extension).
pub fn kummer_split_spotcheck(form: &CanonicalForm, pl: &Place) -> Result<bool> {
    let pattern = kummer_split_pattern(form, pl)?;
    let report = ramification(form)?;
    if report.triples.iter().any(|t| &t.place == pl) {
        return Ok(false);
    }
    let valid = matches!(pattern.as_slice(), [3] | [1, 2] | [1, 1, 1]);
    Ok(valid && !(report.galois && pattern == [1, 2]))
}

/// A random finite place of degree ≤ `max_deg`.
pub fn random_place(fq: &Fq, rng: &mut ChaCha8Rng, max_deg: usize) -> Place {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut p = random_poly(fq, rng, d - 1);
        p = p.add(&Poly::monomial(fq, Fe::ONE, d));
        if p.is_irreducible() {
            return Place::Finite(p);
        }
    }
}
