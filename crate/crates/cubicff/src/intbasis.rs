//! Integral bases of the finite maximal order for each canonical form, and a
//! verifier based on the conductor–discriminant relation.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{poly_crt, Poly};
use crate::cubic::{Cubic, Elem};
use crate::error::{Error, Result};
use crate::forms::{has_root, CanonicalForm, GeneratorMap};
use crate::ramgenus::GenusReport;
use crate::ratfunc::{Place, RatFn};
use crate::reduction::{as_reduce, gas_reduce};

/// (c₀ + c₁t + c₂t²)/den with polynomial c_i, t the basis generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub num: [Poly; 3],
    pub den: Poly,
}

impl BasisElement {
    /// Clear the denominators of an algebra element.
    pub fn from_elem(e: &Elem) -> BasisElement {
        let fq = e[0].field();
        let mut den = Poly::one(fq);
        for c in e {
            let d = c.den();
            den = den.mul(&d.exact_div(&den.gcd(d)));
        }
        let num = [0, 1, 2].map(|i| e[i].mul_poly(&den).num().clone());
        BasisElement { num, den }
    }

    pub fn to_elem(&self) -> Elem {
        [0, 1, 2].map(|i| RatFn::new(self.num[i].clone(), self.den.clone()))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for k in (0..3).rev() {
            let c = &self.num[k];
            if c.is_zero() {
                continue;
            }
            let pw = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let cs = c.to_string();
            let cs = if cs.contains('+') && k > 0 {
                format!("({cs})")
            } else {
                cs
            };
            terms.push(match (k, c.is_one()) {
                (0, _) => cs,
                (_, true) => pw,
                _ => format!("{cs}*{pw}"),
            });
        }
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        };
        if self.den.is_one() {
            body
        } else if terms.len() > 1 {
            format!("({body})/({})", self.den)
        } else {
            format!("{body}/({})", self.den)
        }
    }
}

/// Which construction produced a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Pure,
    ImpureOdd,
    ImpureEven,
    CharThree,
}

/// Three elements, the first equal to 1, spanning the integral closure of F_q[x].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralBasis {
    /// Minimal polynomial of the generator the elements are written in.
    pub cubic: Cubic,
    /// "y" for the form's own generator, "z" for the reduced one.
    pub var: &'static str,
    /// From the form's generator to `var` (identity when `var` is "y").
    pub map: GeneratorMap,
    pub elements: [BasisElement; 3],
    pub provenance: Provenance,
}

impl IntegralBasis {
    pub fn strings(&self) -> [String; 3] {
        [0, 1, 2].map(|i| self.elements[i].fmt_var(self.var))
    }
}

impl fmt::Display for IntegralBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.strings().join(", "))
    }
}

fn check_irreducible(form: &CanonicalForm) -> Result<()> {
    if has_root(&form.cubic()) {
        Err(Error::ReducibleInput)
    } else {
        Ok(())
    }
}

fn finite_valuations(a: &RatFn) -> Vec<(Poly, i64)> {
    a.finite_support()
        .into_iter()
        .map(|(pl, v)| (pl.poly().unwrap().clone(), v))
        .collect()
}

/// ∏ π^{e(π)} as a rational function.
fn product(fq: &crate::algebra::Fq, parts: impl Iterator<Item = (Poly, i64)>) -> RatFn {
    parts.fold(RatFn::one(fq), |acc, (pi, e)| {
        acc.mul(&RatFn::from_poly(pi).pow(e))
    })
}

/// The residue of `r` modulo `m`, if the denominator is prime to m.
fn ratfn_mod(r: &RatFn, m: &Poly) -> Result<Poly> {
    let inv = r.den().inv_mod(m).ok_or(Error::NonCoprimeModuli)?;
    Ok(r.num().mul_mod(&inv, m))
}

/// θ_j = y^j / ∏ π^{⌊j·v_π(a)/3⌋} for X³ − a.
pub fn basis_pure(a: &RatFn) -> Result<IntegralBasis> {
    let form = CanonicalForm::Pure(a.clone());
    check_irreducible(&form)?;
    let fq = a.field();
    let vals = finite_valuations(a);
    let cubic = form.cubic();
    let elements = [0i64, 1, 2].map(|j| {
        let d = product(
            fq,
            vals.iter()
                .map(|(pi, v)| (pi.clone(), (j * v).div_euclid(3))),
        );
        let mut e = cubic.zero();
        e[j as usize] = d.inv();
        BasisElement::from_elem(&e)
    });
    Ok(IntegralBasis {
        cubic,
        var: "y",
        map: GeneratorMap::identity(fq),
        elements,
        provenance: Provenance::Pure,
    })
}

/// Basis of X³ − 3X − a, p ≠ 3.
///
/// With a = α/(γ³β), β = β₁β₂² cube-free and G = γβ₁β₂, ω = Gy is a root of
/// X³ − 3G²X − β₁²β₂α. The basis is {1, ω, (ω² + Tω + V)/I}.
pub fn basis_impure(a: &RatFn) -> Result<IntegralBasis> {
    let form = CanonicalForm::Impure(a.clone());
    check_irreducible(&form)?;
    let fq = a.field().clone();
    let alpha = a.num().clone();
    let (mut gamma, mut beta1, mut beta2) = (Poly::one(&fq), Poly::one(&fq), Poly::one(&fq));
    for (pi, k) in a.den().factor().factors {
        gamma = gamma.mul(&pi.pow((k / 3) as u64));
        match k % 3 {
            1 => beta1 = beta1.mul(&pi),
            2 => beta2 = beta2.mul(&pi),
            _ => {}
        }
    }
    let g = gamma.mul(&beta1).mul(&beta2);
    let h = g.mul(&g);
    let (index, t, v, provenance) = if fq.p() != 2 {
        // 4γ⁶β² − α² = η₁η₂².
        let beta = beta1.mul(&beta2.mul(&beta2));
        let gb = gamma.pow(3).mul(&beta);
        let disc = gb.mul(&gb).scale(fq.from_int(4)).sub(&alpha.mul(&alpha));
        let mut eta2 = Poly::one(&fq);
        for (pi, k) in disc.factor().factors {
            eta2 = eta2.mul(&pi.pow((k / 2) as u64));
        }
        let index = beta1.mul(&eta2);
        let approx = RatFn::new(
            alpha.neg(),
            gamma.mul(&gamma).mul(&beta2).scale(fq.from_int(2)),
        );
        let t = poly_crt(&[
            (ratfn_mod(&approx, &eta2)?, eta2.clone()),
            (Poly::zero(&fq), beta1.clone()),
        ])?;
        let v = t.mul(&t).sub(&h.scale(fq.from_int(3))).rem(&index);
        (index, t, v, Provenance::ImpureOdd)
    } else {
        let one = RatFn::one(&fq);
        let red = as_reduce(&one.add(&a.pow(-2)), 2);
        let root = RatFn::from_poly(g.clone()).mul(a).mul(&one.add(&red.shift));
        let mut index = beta1.clone();
        let mut pairs = vec![(Poly::zero(&fq), beta1.clone())];
        for (pi, k) in alpha.factor().factors {
            let pl = Place::Finite(pi.clone());
            let vb = red.b.val(&pl).unwrap_or(0);
            let d = if vb < 0 { -vb + 1 } else { 0 };
            let j = k as i64 - d / 2;
            if j > 0 {
                let m = pi.pow(j as u64);
                pairs.push((ratfn_mod(&root, &m)?, m.clone()));
                index = index.mul(&m);
            }
        }
        let t = poly_crt(&pairs)?;
        let v = t.mul(&t).add(&h).rem(&index);
        (index, t, v, Provenance::ImpureEven)
    };
    let cubic = form.cubic();
    let gr = RatFn::from_poly(g.clone());
    let third = [
        RatFn::new(v, index.clone()),
        RatFn::new(t.mul(&g), index.clone()),
        RatFn::new(h, index),
    ];
    let mut omega = cubic.zero();
    omega[1] = gr;
    let elements = [
        BasisElement::from_elem(&cubic.one()),
        BasisElement::from_elem(&omega),
        BasisElement::from_elem(&third),
    ];
    Ok(IntegralBasis {
        cubic,
        var: "y",
        map: GeneratorMap::identity(&fq),
        elements,
        provenance,
    })
}

/// Basis of X³ + aX + a², p = 3, in the generator z of X³ + bX + b² with b
/// reduced at every finite place: {1, P₁z/ξ₂, P₂z²/(ξ₁ξ₂²)}.
pub fn basis_char3(a: &RatFn) -> Result<IntegralBasis> {
    let form = CanonicalForm::CharThree(a.clone());
    check_irreducible(&form)?;
    let fq = a.field().clone();
    let red = gas_reduce(a);
    let b = &red.b;
    let (mut xi2, mut xi122) = (Poly::one(&fq), Poly::one(&fq));
    let (mut p1, mut p2) = (Poly::one(&fq), Poly::one(&fq));
    for (pi, v) in finite_valuations(b) {
        if v > 0 {
            xi2 = xi2.mul(&pi.pow((v / 2) as u64));
            xi122 = xi122.mul(&pi.pow(v as u64));
        } else {
            let m = -v;
            p1 = p1.mul(&pi.pow((1 + 2 * m / 3) as u64));
            p2 = p2.mul(&pi.pow((1 + 4 * m / 3) as u64));
        }
    }
    let cubic = Cubic::char3(b);
    let mut e1 = cubic.zero();
    e1[1] = RatFn::new(p1, xi2);
    let mut e2 = cubic.zero();
    e2[2] = RatFn::new(p2, xi122);
    let am = red.map.expect("gas_reduce records the map");
    Ok(IntegralBasis {
        cubic: cubic.clone(),
        var: "z",
        map: GeneratorMap::affine(&am.scale, &am.offset),
        elements: [
            BasisElement::from_elem(&cubic.one()),
            BasisElement::from_elem(&e1),
            BasisElement::from_elem(&e2),
        ],
        provenance: Provenance::CharThree,
    })
}

/// Dispatch on the form.
pub fn integral_basis(form: &CanonicalForm) -> Result<IntegralBasis> {
    match form {
        CanonicalForm::Pure(a) => basis_pure(a),
        CanonicalForm::Impure(a) => basis_impure(a),
        CanonicalForm::CharThree(a) => basis_char3(a),
    }
}

/// disc(θ₀, θ₁, θ₂) = det[Tr(θᵢθⱼ)].
pub fn discriminant(cubic: &Cubic, elems: &[Elem; 3]) -> RatFn {
    let tr = |i: usize, j: usize| cubic.trace(&cubic.mul(&elems[i], &elems[j]));
    let m = [
        [tr(0, 0), tr(0, 1), tr(0, 2)],
        [tr(1, 0), tr(1, 1), tr(1, 2)],
        [tr(2, 0), tr(2, 1), tr(2, 2)],
    ];
    crate::cubic::det3(&m)
}

/// Why a basis was rejected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisMismatch {
    /// Indices of elements whose characteristic polynomial is not over F_q[x].
    pub non_integral: Vec<usize>,
    /// (place, v_place(disc), expected Σd).
    pub valuations: Vec<(Place, i64, i64)>,
    pub singular: bool,
}

impl BasisMismatch {
    pub fn is_empty(&self) -> bool {
        self.non_integral.is_empty() && self.valuations.is_empty() && !self.singular
    }
}

impl fmt::Display for BasisMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.singular {
            return write!(f, "basis is linearly dependent");
        }
        let mut parts = Vec::new();
        if !self.non_integral.is_empty() {
            parts.push(format!("non-integral elements {:?}", self.non_integral));
        }
        for (pl, got, want) in &self.valuations {
            parts.push(format!("v_{pl}(disc) = {got}, expected {want}"));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Check integrality of every element and v(disc) = Σd at every finite place.
pub fn verify_basis(
    basis: &IntegralBasis,
    report: &GenusReport,
) -> std::result::Result<(), BasisMismatch> {
    let mut bad = BasisMismatch::default();
    let elems = [0, 1, 2].map(|i| basis.elements[i].to_elem());
    for (i, e) in elems.iter().enumerate() {
        if !basis.cubic.char_poly(e).iter().all(|c| c.is_poly()) {
            bad.non_integral.push(i);
        }
    }
    let disc = discriminant(&basis.cubic, &elems);
    if disc.is_zero() {
        bad.singular = true;
        return Err(bad);
    }
    let mut expected: BTreeMap<Place, i64> = BTreeMap::new();
    for t in &report.triples {
        if !t.place.is_infinity() {
            *expected.entry(t.place.clone()).or_default() += t.d;
        }
    }
    for (pl, _) in disc.finite_support() {
        expected.entry(pl).or_default();
    }
    for (pl, want) in expected {
        let got = disc.val(&pl).unwrap_or(0);
        if got != want {
            bad.valuations.push((pl, got, want));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}
